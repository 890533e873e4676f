#pragma once

// Number-theory kernel. Everything here is a pure function on int64 values;
// sizes in scope are small (n up to ~10^4) so trial division is enough.

#include <cstdint>
#include <vector>

namespace cayley_census::arith {

/// An integer reduced modulo a positive modulus, 0 <= value < modulus.
struct Residue {
  std::int64_t value = 0;
  std::int64_t modulus = 1;

  static Residue of(std::int64_t x, std::int64_t n);
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Least nonnegative remainder of x modulo n (n >= 1).
std::int64_t mod(std::int64_t x, std::int64_t n);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

std::int64_t euler_phi(std::int64_t n);

/// Least s >= 1 with r^s == 1 (mod n). Requires gcd(r, n) = 1; n = 1 gives 1.
std::int64_t mult_order(std::int64_t r, std::int64_t n);

/// (1 + r + ... + r^(m-1)) mod n, with the empty sum for m = 0. Uses
/// doubling, so m may be arbitrarily large.
Residue geom_sum_mod(std::int64_t r, std::uint64_t m, std::int64_t n);

/// All positive divisors of n in ascending order.
std::vector<std::int64_t> divisors_of(std::int64_t n);

bool is_squarefree(std::int64_t n);
bool is_prime(std::int64_t n);

/// Checks |r|_n = |r|_d |r|_m / gcd(|r|_d, |r|_m) for a coprime split n = d m.
bool order_multiplicativity_check(std::int64_t n, std::int64_t d, std::int64_t m, std::int64_t r);

}  // namespace cayley_census::arith
