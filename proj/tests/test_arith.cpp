#include "cayley_census/arith.hpp"
#include "cayley_census/errors.hpp"

#include <doctest.h>

#include <numeric>

using namespace cayley_census;
using namespace cayley_census::arith;

namespace {

std::int64_t naive_phi(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1 ? 1 : 0;
  return c;
}

std::int64_t naive_order(std::int64_t r, std::int64_t n) {
  std::int64_t x = r % n;
  for (std::int64_t s = 1;; ++s) {
    if (x == 1 % n) return s;
    x = x * r % n;
  }
}

}  // namespace

TEST_CASE("mod is non-negative") {
  CHECK(mod(-1, 5) == 4);
  CHECK(mod(-10, 5) == 0);
  CHECK(mod(7, 1) == 0);
  CHECK_THROWS_AS(mod(3, 0), DomainError);
  CHECK(Residue::of(-3, 7) == Residue{4, 7});
}

TEST_CASE("euler_phi and mult_order against counting") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    CHECK(euler_phi(n) == naive_phi(n));
    for (std::int64_t r = 1; r < n; ++r) {
      if (std::gcd(r, n) == 1) CHECK(mult_order(r, n) == naive_order(r, n));
    }
  }
  CHECK(mult_order(5, 1) == 1);
  CHECK_THROWS_AS(euler_phi(0), DomainError);
  CHECK_THROWS_AS(mult_order(3, 6), DomainError);
}

TEST_CASE("geom_sum_mod") {
  CHECK(geom_sum_mod(4, 0, 15).value == 0);
  CHECK(geom_sum_mod(4, 1, 15).value == 1);
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t r = 0; r < n; ++r) {
      std::int64_t sum = 0;
      std::int64_t power = 1 % n;
      for (std::uint64_t m = 0; m <= 50; ++m) {
        CHECK(geom_sum_mod(r, m, n).value == sum);
        sum = (sum + power) % n;
        power = power * r % n;
      }
    }
  }
}

TEST_CASE("large moduli stay exact") {
  const std::int64_t p = 4611686018427387847;  // prime below 2^62
  CHECK(pow_mod(2, static_cast<std::uint64_t>(p - 1), p) == 1);
  CHECK(mul_mod(p - 1, p - 1, p) == 1);
  CHECK(geom_sum_mod(1, 12345, p).value == 12345);
}

TEST_CASE("divisors, square-free, primes") {
  CHECK(divisors_of(1) == std::vector<std::int64_t>{1});
  CHECK(divisors_of(30) == std::vector<std::int64_t>{1, 2, 3, 5, 6, 10, 15, 30});
  CHECK(is_squarefree(105));
  CHECK_FALSE(is_squarefree(45));
  CHECK(is_squarefree(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(lcm(4, 6) == 12);
  CHECK(gcd(0, 9) == 9);
}

TEST_CASE("order is the lcm over coprime factors") {
  for (std::int64_t d = 1; d <= 15; ++d) {
    for (std::int64_t m = 1; m <= 15; ++m) {
      if (std::gcd(d, m) != 1) continue;
      for (std::int64_t r = 1; r < d * m; ++r) {
        if (std::gcd(r, d * m) == 1) CHECK(order_multiplicativity_check(d * m, d, m, r));
      }
    }
  }
}
