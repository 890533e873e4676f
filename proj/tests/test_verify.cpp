#include "cayley_census/verify.hpp"

#include <doctest.h>

using namespace cayley_census;

namespace {

verify::Options small() {
  verify::Options o;
  o.n_max = 15;
  o.d6p_primes = {5, 7};
  o.orbit_ns = {3, 5};
  o.conjugation_samples = 10;
  return o;
}

bool check_failed(const verify::Report& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return !c.passed;
  }
  FAIL("no check named " << name);
  return false;
}

}  // namespace

TEST_CASE("reference formulas pass") {
  const verify::Report report = verify::run(small());
  CHECK(report.passed());
  CHECK(report.exit_code() == 0);
  REQUIRE(report.checks.size() == verify::check_names().size());
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    CHECK(report.checks[i].name == verify::check_names()[i]);
    CHECK(report.checks[i].cases > 0);
  }
}

TEST_CASE("an off-by-one in any formula is caught") {
  using verify::Formulas;
  struct Mutation {
    const char* name;
    void (*apply)(Formulas&);
  };
  const Mutation mutations[] = {
      {"euler_phi", [](Formulas& f) { auto g = f.euler_phi; f.euler_phi = [g](std::int64_t n) { return g(n) + (n == 9 ? 1 : 0); }; }},
      {"mult_order", [](Formulas& f) { auto g = f.mult_order; f.mult_order = [g](std::int64_t r, std::int64_t n) { return g(r, n) + (n == 7 && r == 3 ? 1 : 0); }; }},
      {"kappa", [](Formulas& f) { auto g = f.kappa; f.kappa = [g](std::int64_t n, std::int64_t r, std::int64_t t) { return g(n, r, t) + (n == 11 ? 1 : 0); }; }},
      {"c_u_total", [](Formulas& f) { auto g = f.c_u_total; f.c_u_total = [g](std::int64_t n, std::int64_t r) { return g(n, r) + (n == 13 && r == 2 ? 1 : 0); }; }},
      {"c_v_general", [](Formulas& f) { auto g = f.c_v_general; f.c_v_general = [g](std::int64_t n, std::int64_t r, std::int64_t t) { return g(n, r, t) + (t == 1 ? 1 : 0); }; }},
      {"c_v_squarefree", [](Formulas& f) { auto g = f.c_v_squarefree; f.c_v_squarefree = [g](std::int64_t n, std::int64_t r, std::int64_t t) { return g(n, r, t) - (n == 15 && t == 3 ? 1 : 0); }; }},
      {"lambda_set", [](Formulas& f) { auto g = f.lambda_set; f.lambda_set = [g](std::int64_t p, std::int64_t d, std::int64_t r, std::int64_t t) { auto s = g(p, d, r, t); if (d == 3 && p == 7) s.members.push_back(99); return s; }; }},
      {"s_sum", [](Formulas& f) { auto g = f.s_sum; f.s_sum = [g](std::int64_t p, std::int64_t d, std::int64_t r, std::int64_t t) { return g(p, d, r, t) + (d == 1 ? 1 : 0); }; }},
      {"kappa_3p", [](Formulas& f) { auto g = f.kappa_3p; f.kappa_3p = [g](std::int64_t p, std::int64_t r, std::int64_t t) { return g(p, r, t) + (r == 2 ? 1 : 0); }; }},
      {"c_u3p", [](Formulas& f) { auto g = f.c_u3p; f.c_u3p = [g](std::int64_t p, std::int64_t r) { return g(p, r) + (r == 4 ? 1 : 0); }; }},
      {"c_v3p", [](Formulas& f) { auto g = f.c_v3p; f.c_v3p = [g](std::int64_t p, std::int64_t r, std::int64_t t) { return g(p, r, t) + (t == p ? 1 : 0); }; }},
      {"d6p_count", [](Formulas& f) { auto g = f.d6p_count; f.d6p_count = [g](std::int64_t p) { return g(p) + Nat(p == 7 ? 1 : 0); }; }},
  };
  for (const Mutation& m : mutations) {
    CAPTURE(m.name);
    Formulas f = Formulas::reference();
    m.apply(f);
    const verify::Report report = verify::run(small(), f);
    CHECK_FALSE(report.passed());
    CHECK(report.exit_code() == 3);
  }
}

TEST_CASE("a broken kappa is reported by the order checks") {
  verify::Formulas f = verify::Formulas::reference();
  auto g = f.kappa;
  f.kappa = [g](std::int64_t n, std::int64_t r, std::int64_t t) { return g(n, r, t) * (n == 9 && t == 3 ? 2 : 1); };
  const verify::Report report = verify::run(small(), f);
  CHECK(check_failed(report, "kappa_is_order"));
}
