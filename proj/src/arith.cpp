#include "cayley_census/arith.hpp"

#include "cayley_census/errors.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace cayley_census::arith {

namespace {

void require_modulus(std::int64_t n, const char* op) {
  if (n < 1) [[unlikely]] {
    throw DomainError(std::string(op) + ": modulus must be positive, got " + std::to_string(n));
  }
}

}  // namespace

Residue Residue::of(std::int64_t x, std::int64_t n) {
  require_modulus(n, "Residue::of");
  return Residue{mod(x, n), n};
}

std::int64_t mod(std::int64_t x, std::int64_t n) {
  require_modulus(n, "mod");
  const std::int64_t m = x % n;
  return m < 0 ? m + n : m;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (n <= 3037000499) return mod(a, n) * mod(b, n) % n;  // product fits in int64
  const __int128 p = static_cast<__int128>(mod(a, n)) * mod(b, n);
  return static_cast<std::int64_t>(p % n);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t n) {
  require_modulus(n, "pow_mod");
  std::int64_t result = 1 % n;
  std::int64_t b = mod(base, n);
  while (exponent != 0) {
    if (exponent & 1U) result = mul_mod(result, b, n);
    b = mul_mod(b, b, n);
    exponent >>= 1U;
  }
  return result;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t euler_phi(std::int64_t n) {
  require(n >= 1, [&] { return "euler_phi: n must be positive, got " + std::to_string(n); });
  std::int64_t result = n;
  std::int64_t m = n;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::int64_t mult_order(std::int64_t r, std::int64_t n) {
  require_modulus(n, "mult_order");
  require(gcd(mod(r, n), n) == 1,
          "mult_order: gcd(" + std::to_string(r) + ", " + std::to_string(n) + ") != 1");
  if (n == 1) return 1;
  const std::int64_t base = mod(r, n);
  std::int64_t x = base;
  std::int64_t s = 1;
  while (x != 1) {
    x = mul_mod(x, base, n);
    ++s;
  }
  return s;
}

Residue geom_sum_mod(std::int64_t r, std::uint64_t m, std::int64_t n) {
  require_modulus(n, "geom_sum_mod");
  // Walk the bits of m from the top, maintaining (S_k, r^k):
  //   S_2k = S_k (1 + r^k),  S_(k+1) = S_k + r^k.
  std::int64_t sum = 0;
  std::int64_t power = 1 % n;
  const std::int64_t base = mod(r, n);
  for (int bit = static_cast<int>(std::bit_width(m)) - 1; bit >= 0; --bit) {
    sum = mul_mod(sum, 1 + power, n);
    power = mul_mod(power, power, n);
    if ((m >> bit) & 1U) {
      sum = (sum + power) % n;
      power = mul_mod(power, base, n);
    }
  }
  return Residue{sum, n};
}

std::vector<std::int64_t> divisors_of(std::int64_t n) {
  require(n >= 1, [&] { return "divisors_of: n must be positive, got " + std::to_string(n); });
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_squarefree(std::int64_t n) {
  require(n >= 1, "is_squarefree: n must be positive");
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % (q * q) == 0) return false;
  }
  return true;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

bool order_multiplicativity_check(std::int64_t n, std::int64_t d, std::int64_t m, std::int64_t r) {
  require(d >= 1 && m >= 1 && n == d * m, "order_multiplicativity_check: need n = d*m");
  require(gcd(d, m) == 1, "order_multiplicativity_check: d and m must be coprime");
  require(gcd(mod(r, n), n) == 1, "order_multiplicativity_check: r must be a unit mod n");
  const std::int64_t od = mult_order(r, d);
  const std::int64_t om = mult_order(r, m);
  return mult_order(r, n) == od * om / gcd(od, om);
}

}  // namespace cayley_census::arith
