#pragma once

// The invariant suite behind `cayley-census verify`. Each check compares a
// closed form against an independent route (brute force, permutation
// oracle, or a second algebraic formula).
//
// The closed forms are reached through a Formulas table so that tests can
// substitute a deliberately broken formula and watch the suite fail.

#include "cayley_census/d6p.hpp"
#include "cayley_census/nat.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cayley_census::verify {

struct Formulas {
  std::function<std::int64_t(std::int64_t)> euler_phi;
  std::function<std::int64_t(std::int64_t, std::int64_t)> mult_order;
  std::function<std::int64_t(std::int64_t, std::int64_t, std::int64_t)> kappa;
  std::function<std::int64_t(std::int64_t, std::int64_t)> c_u_total;
  std::function<std::int64_t(std::int64_t, std::int64_t, std::int64_t)> c_v_general;
  std::function<std::int64_t(std::int64_t, std::int64_t, std::int64_t)> c_v_squarefree;
  std::function<d6p::LambdaSet(std::int64_t, std::int64_t, std::int64_t, std::int64_t)> lambda_set;
  std::function<std::int64_t(std::int64_t, std::int64_t, std::int64_t, std::int64_t)> s_sum;
  std::function<std::int64_t(std::int64_t, std::int64_t, std::int64_t)> kappa_3p;
  std::function<std::int64_t(std::int64_t, std::int64_t)> c_u3p;
  std::function<std::int64_t(std::int64_t, std::int64_t, std::int64_t)> c_v3p;
  std::function<Nat(std::int64_t)> d6p_count;

  /// The library's own implementations.
  static Formulas reference();
};

struct Options {
  std::int64_t n_max = 35;
  std::vector<std::int64_t> d6p_primes{5, 7, 11, 13, 17};
  std::vector<std::int64_t> orbit_ns{3, 5, 7, 9};
  unsigned conjugation_samples = 100;
  std::uint64_t seed = 20240601;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  // first failure, if any
  double seconds = 0.0;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// 0 when every check passed, 3 (internal invariant violation) otherwise.
  int exit_code() const;
};

Report run(const Options& options, const Formulas& formulas = Formulas::reference());

/// Names of the checks, in run order.
std::vector<std::string> check_names();

}  // namespace cayley_census::verify
