#include "cayley_census/cycles.hpp"

#include "cayley_census/arith.hpp"
#include "cayley_census/dihedral.hpp"
#include "cayley_census/errors.hpp"

#include <string>

namespace cayley_census {

using arith::gcd;
using arith::mod;

namespace {

void require_unit(std::int64_t n, std::int64_t r, const char* op) {
  require(n >= 1, [&] { return std::string(op) + ": n must be positive"; });
  if (gcd(mod(r, n), n) != 1) {
    throw InvalidAutomorphism(std::string(op) + ": gcd(r, n) != 1 for r = " + std::to_string(r) +
                              ", n = " + std::to_string(n));
  }
}

std::int64_t exact_quotient(std::int64_t num, std::int64_t den, const char* what) {
  ensure(den != 0 && num % den == 0, [&] {
    return std::string(what) + ": non-exact division " + std::to_string(num) + " / " +
           std::to_string(den);
  });
  return num / den;
}

// gcd(r^e - 1, n), with gcd(0, n) = n.
std::int64_t gcd_power_minus_one(std::int64_t r, std::int64_t e, std::int64_t n) {
  return gcd(mod(arith::pow_mod(r, static_cast<std::uint64_t>(e), n) - 1, n), n);
}

}  // namespace

std::int64_t CycleData::c_u() const {
  std::int64_t sum = 0;
  for (const auto& [d, c] : u_parts) sum += c;
  return sum;
}

std::int64_t c_u_part(std::int64_t n, std::int64_t d, std::int64_t r) {
  require(n >= 1 && d > 1 && n % d == 0,
          "c_u_part: need a divisor d > 1 of n, got d = " + std::to_string(d) +
              ", n = " + std::to_string(n));
  require_unit(n, r, "c_u_part");
  return exact_quotient(arith::euler_phi(d), arith::mult_order(r, d), "c_u_part");
}

std::int64_t c_u_total(std::int64_t n, std::int64_t r) {
  require_unit(n, r, "c_u_total");
  std::int64_t sum = 0;
  for (const std::int64_t d : arith::divisors_of(n)) {
    if (d > 1) sum += c_u_part(n, d, r);
  }
  return sum;
}

std::int64_t fix_v_count(std::int64_t n, std::int64_t r, std::int64_t t, std::int64_t s) {
  require_unit(n, r, "fix_v_count");
  require(s >= 1, "fix_v_count: s must be positive");
  const std::int64_t g = gcd_power_minus_one(r, s, n);
  const std::int64_t shift =
      arith::mul_mod(t, arith::geom_sum_mod(r, static_cast<std::uint64_t>(s), n).value, n);
  return shift % g == 0 ? g : 0;
}

std::int64_t c_v_general(std::int64_t n, std::int64_t r, std::int64_t t) {
  require_unit(n, r, "c_v_general");
  const std::int64_t order = kappa(n, r, t);
  std::int64_t sum = 0;
  for (const std::int64_t s : arith::divisors_of(order)) {
    sum += arith::euler_phi(order / s) * fix_v_count(n, r, t, s);
  }
  return exact_quotient(sum, order, "c_v_general");
}

std::int64_t c_v_squarefree(std::int64_t n, std::int64_t r, std::int64_t t) {
  require_unit(n, r, "c_v_squarefree");
  if (n <= 1 || !arith::is_squarefree(n)) {
    throw SquareFreeRequired("c_v_squarefree: n = " + std::to_string(n) +
                             " is not a square-free integer > 1");
  }
  const std::int64_t order_r = arith::mult_order(r, n);
  std::int64_t numerator = 0;
  for (const std::int64_t d : arith::divisors_of(n)) {
    const std::int64_t kd = kappa(d, r, t);
    const std::int64_t bound = order_r / gcd(kd, order_r);
    for (const std::int64_t l : arith::divisors_of(bound)) {
      if (gcd_power_minus_one(r, l * kd, n) != d) continue;
      numerator += d * arith::euler_phi(bound / l);
    }
  }
  return exact_quotient(numerator, kappa(n, r, t), "c_v_squarefree");
}

CycleData c_total(std::int64_t n, std::int64_t r, std::int64_t t) {
  require_unit(n, r, "c_total");
  CycleData data;
  data.n = n;
  for (const std::int64_t d : arith::divisors_of(n)) {
    if (d > 1) data.u_parts.emplace(d, c_u_part(n, d, r));
  }
  const std::int64_t general = c_v_general(n, r, t);
  if (n > 1 && arith::is_squarefree(n)) {
    data.c_v = c_v_squarefree(n, r, gcd(mod(t, n), n));
    ensure(data.c_v == general, [&] {
      return "c_total: square-free and general V-cycle counts disagree for (" + std::to_string(n) +
             ", " + std::to_string(r) + ", " + std::to_string(t) + ")";
    });
  } else {
    data.c_v = general;
  }
  data.total = data.c_u() + data.c_v;
  ensure(data.total >= 1 && data.total <= 2 * n - 1, "c_total: cycle count out of range");
  return data;
}

}  // namespace cayley_census
