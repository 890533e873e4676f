#pragma once

// Cycle numbers of a_{n,r,t} on D_2n^#, computed from closed forms. D_2n^#
// splits into the reflections V_n and, for each divisor d > 1 of n, the
// rotations of order d, U_n(d); every piece is invariant under Aut(D_2n).

#include <cstdint>
#include <map>

namespace cayley_census {

struct CycleData {
  std::int64_t n = 0;
  /// divisor d > 1 of n -> number of cycles on U_n(d)
  std::map<std::int64_t, std::int64_t> u_parts;
  std::int64_t c_v = 0;
  std::int64_t total = 0;

  std::int64_t c_u() const;
  friend bool operator==(const CycleData&, const CycleData&) = default;
};

/// phi(d) / |r|_d, the cycle count on U_n(d); independent of t.
std::int64_t c_u_part(std::int64_t n, std::int64_t d, std::int64_t r);
std::int64_t c_u_total(std::int64_t n, std::int64_t r);

/// Number of reflections fixed by a_{n,r,t}^s.
std::int64_t fix_v_count(std::int64_t n, std::int64_t r, std::int64_t t, std::int64_t s);

/// Cycle count on V_n as an average of fixed points over the divisors of the
/// automorphism's order. Valid for every n.
std::int64_t c_v_general(std::int64_t n, std::int64_t r, std::int64_t t);

/// The double-sum form over (d | n, l) for square-free n > 1; throws
/// SquareFreeRequired otherwise.
std::int64_t c_v_squarefree(std::int64_t n, std::int64_t r, std::int64_t t);

/// Full breakdown. For square-free n > 1 the V part is taken from the
/// square-free form at t = gcd(t, n) and cross-checked against c_v_general;
/// disagreement throws InvariantViolation.
CycleData c_total(std::int64_t n, std::int64_t r, std::int64_t t);

}  // namespace cayley_census
