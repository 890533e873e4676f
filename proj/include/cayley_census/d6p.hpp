#pragma once

// Specialization to n = 3p with p > 3 prime. Throughout, d and t range over
// the divisor representatives {1, 3, p, 3p}; an arbitrary t' is reduced to
// gcd(t', 3p) before it gets here.
//
// Each piecewise closed form has a `_by_definition` twin that evaluates the
// defining set or sum directly; the two must agree.

#include "cayley_census/nat.hpp"

#include <cstdint>
#include <vector>

namespace cayley_census::d6p {

struct D6pParams {
  std::int64_t p = 0;
  std::int64_t n = 0;

  /// Throws NotApplicable unless p is a prime >= 5.
  static D6pParams make(std::int64_t p);
};

struct LambdaSet {
  std::int64_t d = 0;
  std::vector<std::int64_t> members;  // ascending

  friend bool operator==(const LambdaSet&, const LambdaSet&) = default;
};

/// Reduces an arbitrary t' to its representative gcd(t', 3p) (0 -> 3p).
std::int64_t t_representative(std::int64_t p, std::int64_t t);

/// Delta(m) = { 0 < l < m : l | m }.
std::vector<std::int64_t> proper_divisors(std::int64_t m);

LambdaSet lambda_set(std::int64_t p, std::int64_t d, std::int64_t r, std::int64_t t);
LambdaSet lambda_set_by_definition(std::int64_t p, std::int64_t d, std::int64_t r, std::int64_t t);

std::int64_t s_sum(std::int64_t p, std::int64_t d, std::int64_t r, std::int64_t t);
std::int64_t s_sum_by_definition(std::int64_t p, std::int64_t d, std::int64_t r, std::int64_t t);

/// Piecewise kappa(3p, r, t).
std::int64_t kappa_3p(std::int64_t p, std::int64_t r, std::int64_t t);

std::int64_t c_u3p(std::int64_t p, std::int64_t r);
std::int64_t c_v3p(std::int64_t p, std::int64_t r, std::int64_t t);

/// Closed-form number of non-isomorphic Cayley digraphs on D_6p.
Nat d6p_count(std::int64_t p);

}  // namespace cayley_census::d6p
