#include "cayley_census/d6p.hpp"

#include "cayley_census/arith.hpp"
#include "cayley_census/dihedral.hpp"
#include "cayley_census/errors.hpp"

#include <string>

namespace cayley_census::d6p {

using arith::gcd;
using arith::mod;
using arith::mult_order;

namespace {

bool is_representative(std::int64_t p, std::int64_t x) {
  return x == 1 || x == 3 || x == p || x == 3 * p;
}

// Validates (p, r) and returns r reduced into [0, 3p).
std::int64_t checked_r(std::int64_t p, std::int64_t r) {
  const D6pParams params = D6pParams::make(p);
  const std::int64_t rr = mod(r, params.n);
  if (gcd(rr, params.n) != 1) {
    throw InvalidAutomorphism("r = " + std::to_string(r) + " is not a unit mod " +
                              std::to_string(params.n));
  }
  return rr;
}

void check_divisor(std::int64_t p, std::int64_t x, const char* name) {
  require(is_representative(p, x), [&] {
    return std::string(name) + " = " + std::to_string(x) + " is not one of {1, 3, p, 3p} for p = " +
           std::to_string(p);
  });
}

std::int64_t exact_quotient(std::int64_t num, std::int64_t den) {
  ensure(den != 0 && num % den == 0, [&] {
    return "d6p: non-exact division " + std::to_string(num) + " / " + std::to_string(den);
  });
  return num / den;
}

bool is_odd(std::int64_t x) { return x % 2 != 0; }

}  // namespace

D6pParams D6pParams::make(std::int64_t p) {
  if (p <= 3 || !arith::is_prime(p)) {
    throw NotApplicable("D_6p is a DCI-group only for primes p >= 5; got p = " + std::to_string(p));
  }
  return D6pParams{p, 3 * p};
}

std::int64_t t_representative(std::int64_t p, std::int64_t t) {
  const D6pParams params = D6pParams::make(p);
  return gcd(mod(t, params.n), params.n);
}

std::vector<std::int64_t> proper_divisors(std::int64_t m) {
  std::vector<std::int64_t> out = arith::divisors_of(m);
  out.pop_back();
  return out;
}

LambdaSet lambda_set(std::int64_t p, std::int64_t d, std::int64_t r, std::int64_t t) {
  r = checked_r(p, r);
  check_divisor(p, d, "d");
  check_divisor(p, t, "t");
  const std::int64_t order_p = mult_order(r, p);
  const bool r_one_mod_3 = r % 3 == 1;

  LambdaSet out{d, {}};
  if (d == 3 * p) {
    out.members = {1};
  } else if (d == p) {
    if (!r_one_mod_3 && is_odd(order_p)) out.members = {1};
  } else if (d == 3) {
    if (!r_one_mod_3) {
      out.members = proper_divisors(order_p / gcd(2, order_p));
    } else if (t == 3 || t == 3 * p) {
      out.members = proper_divisors(order_p);
    } else {
      out.members = proper_divisors(order_p / gcd(3, order_p));
    }
  } else if (!r_one_mod_3) {
    for (const std::int64_t l : proper_divisors(order_p)) {
      if (is_odd(l)) out.members.push_back(l);
    }
  }
  return out;
}

LambdaSet lambda_set_by_definition(std::int64_t p, std::int64_t d, std::int64_t r, std::int64_t t) {
  r = checked_r(p, r);
  check_divisor(p, d, "d");
  check_divisor(p, t, "t");
  const std::int64_t n = 3 * p;
  const std::int64_t order_n = mult_order(r, n);
  const std::int64_t kd = kappa(d, r, t);
  LambdaSet out{d, {}};
  for (const std::int64_t l : arith::divisors_of(order_n / gcd(kd, order_n))) {
    const std::int64_t rl = arith::pow_mod(r, static_cast<std::uint64_t>(l * kd), n);
    if (gcd(mod(rl - 1, n), n) == d) out.members.push_back(l);
  }
  return out;
}

std::int64_t s_sum(std::int64_t p, std::int64_t d, std::int64_t r, std::int64_t t) {
  r = checked_r(p, r);
  check_divisor(p, d, "d");
  check_divisor(p, t, "t");
  const std::int64_t order_p = mult_order(r, p);
  const bool r_one_mod_3 = r % 3 == 1;

  if (d == 3 * p) return 3 * p;
  if (d == p) return !r_one_mod_3 && is_odd(order_p) ? p : 0;
  if (d == 1) {
    if (r_one_mod_3) return 0;
    return is_odd(order_p) ? order_p - 1 : order_p / 2;
  }
  // d == 3; the first two branches coincide in value but are kept apart.
  if (r_one_mod_3 && (t == 3 || t == 3 * p)) return 3 * (order_p - 1);
  if (r_one_mod_3 && order_p % 3 != 0) return 3 * (order_p - 1);
  if (r_one_mod_3) return order_p - 3;
  if (is_odd(order_p)) return 3 * (order_p - 1);
  return 3 * (order_p / 2 - 1);
}

std::int64_t s_sum_by_definition(std::int64_t p, std::int64_t d, std::int64_t r, std::int64_t t) {
  const LambdaSet lambda = lambda_set_by_definition(p, d, r, t);
  r = mod(r, 3 * p);
  const std::int64_t order_n = mult_order(r, 3 * p);
  const std::int64_t bound = order_n / gcd(kappa(d, r, t), order_n);
  std::int64_t sum = 0;
  for (const std::int64_t l : lambda.members) sum += d * arith::euler_phi(bound / l);
  return sum;
}

std::int64_t kappa_3p(std::int64_t p, std::int64_t r, std::int64_t t) {
  r = checked_r(p, r);
  check_divisor(p, t, "t");
  const std::int64_t order_p = mult_order(r, p);
  if (r == 1) return 3 * p / gcd(3 * p, t);
  if (r % 3 == 1) return 3 * order_p / gcd(3, t * order_p);
  if (r % p == 1) return 2 * p / gcd(p, t);
  return 2 * order_p / gcd(2, order_p);
}

std::int64_t c_u3p(std::int64_t p, std::int64_t r) {
  r = checked_r(p, r);
  const std::int64_t order_p = mult_order(r, p);
  if (r % 3 == 1) return 2 + exact_quotient(3 * (p - 1), order_p);
  if (is_odd(order_p)) return 1 + exact_quotient(2 * (p - 1), order_p);
  return 1 + exact_quotient(3 * (p - 1), order_p);
}

std::int64_t c_v3p(std::int64_t p, std::int64_t r, std::int64_t t) {
  r = checked_r(p, r);
  check_divisor(p, t, "t");
  const std::int64_t order_p = mult_order(r, p);
  if (r == 1) return gcd(3 * p, t);
  if (r % 3 == 1) {
    if (t == 3 || t == 3 * p) return 3 + exact_quotient(3 * (p - 1), order_p);
    if (order_p % 3 != 0) return 1 + exact_quotient(p - 1, order_p);
    return 1 + exact_quotient(3 * (p - 1), order_p);
  }
  if (r % p == 1) return 2 * gcd(p, t);
  if (is_odd(order_p)) return 2 + exact_quotient(2 * (p - 1), order_p);
  return 2 + exact_quotient(3 * (p - 1), order_p);
}

Nat d6p_count(std::int64_t p) {
  const D6pParams params = D6pParams::make(p);
  const auto up = static_cast<std::uint64_t>(p);

  // Sums over 1 < r < 3p, gcd(r, 3p) = 1, split by |r|_3 and |r|_p.
  Nat r1_coprime3;  // |r|_3 = 1, 3 does not divide |r|_p
  Nat r1_div3;      // |r|_3 = 1, 3 | |r|_p
  Nat r2_odd;       // |r|_3 = 2, |r|_p odd and > 1
  Nat r2_even;      // |r|_3 = 2, |r|_p even
  for (std::int64_t r = 2; r < params.n; ++r) {
    if (gcd(r, params.n) != 1) continue;
    const std::int64_t order_3 = mult_order(r, 3);
    const auto order_p = static_cast<std::uint64_t>(mult_order(r, p));
    const std::uint64_t e4 = 4 * (up - 1) / order_p;
    const std::uint64_t e6 = 6 * (up - 1) / order_p;
    if (order_3 == 1) {
      if (order_p % 3 != 0) {
        r1_coprime3 += Nat::pow2(e4) + Nat::pow2(1 + e6);
      } else {
        r1_div3 += Nat::pow2(e6);
      }
    } else if (order_p % 2 != 0) {
      if (order_p > 1) r2_odd += Nat::pow2(e4);
    } else {
      r2_even += Nat::pow2(e6);
    }
  }

  // Everything is multiplied through by 3p(p-1) and divided once at the end;
  // the individual terms are not integers.
  const Nat denominator = Nat(3 * up * (up - 1));
  Nat numerator = Nat::pow2(4 * up - 2) * (Nat::pow2(2 * up) + Nat(5));
  numerator += Nat(3 * (up - 1)) * Nat::pow2(2 * up) * (Nat::pow2(up) + Nat(1));
  numerator += Nat(8 * up) * r1_coprime3;
  numerator += Nat(24 * up) * r1_div3;
  numerator += Nat(12 * up) * (r2_odd + r2_even);
  return numerator.exact_div(denominator);
}

}  // namespace cayley_census::d6p
