#include "cayley_census/census.hpp"

#include "cayley_census/arith.hpp"
#include "cayley_census/cycles.hpp"
#include "cayley_census/d6p.hpp"
#include "cayley_census/errors.hpp"
#include "cayley_census/oracle.hpp"

#include <string>

namespace cayley_census {

std::string_view to_string(DciTag tag) {
  switch (tag) {
    case DciTag::known_dci: return "known_dci";
    case DciTag::known_not_dci: return "known_not_dci";
    case DciTag::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::theorem: return "theorem";
    case Method::burnside: return "burnside";
    case Method::d6p: return "d6p";
    case Method::oracle: return "oracle";
  }
  return "burnside";
}

DciTag parse_dci_tag(std::string_view name) {
  for (const DciTag tag : {DciTag::known_dci, DciTag::known_not_dci, DciTag::unknown}) {
    if (name == to_string(tag)) return tag;
  }
  throw DomainError("unknown DCI tag '" + std::string(name) + "'");
}

Method parse_method(std::string_view name) {
  for (const Method m : {Method::theorem, Method::burnside, Method::d6p, Method::oracle}) {
    if (name == to_string(m)) return m;
  }
  throw DomainError("unknown method '" + std::string(name) + "'");
}

DciStatus dci_status(std::int64_t n) {
  require(n >= 1, "dci_status: n must be positive");
  if (n > 2 && (n % 2 == 0 || !arith::is_squarefree(n))) {
    return {DciTag::known_not_dci, "D_2n with n > 2 DCI requires n odd and square-free"};
  }
  if (arith::is_prime(n)) return {DciTag::known_dci, "D_2p is a DCI-group (Babai 1977)"};
  if (n % 3 == 0 && arith::is_prime(n / 3) && n / 3 > 3) {
    return {DciTag::known_dci, "D_6p is a DCI-group iff p >= 5 (Dobson-Morris-Spiga 2015)"};
  }
  return {DciTag::unknown, "DCI property not recorded for this n"};
}

namespace {

CensusResult finish(std::int64_t n, Nat burnside_sum, Method method) {
  CensusResult result;
  result.n = n;
  result.aut_order = static_cast<std::uint64_t>(n * arith::euler_phi(n));
  result.orbit_count = burnside_sum.exact_div(Nat(result.aut_order));
  result.burnside_sum = std::move(burnside_sum);
  // The identity alone fixes all 2^{2n-1} subsets.
  const Nat bound =
      Nat::pow2(static_cast<std::uint64_t>(2 * n - 1)).ceil_div(Nat(result.aut_order));
  ensure(result.orbit_count >= bound,
         [&] { return "orbit count below the identity bound for n = " + std::to_string(n); });
  result.dci = dci_status(n);
  result.method = method;
  return result;
}

}  // namespace

CensusResult burnside_count(std::int64_t n) {
  require(n >= 3, [&] { return "burnside_count: n must be at least 3, got " + std::to_string(n); });
  Nat sum;
  for (std::int64_t r = 1; r < n; ++r) {
    if (arith::gcd(r, n) != 1) continue;
    for (std::int64_t t = 0; t < n; ++t) {
      sum += Nat::pow2(static_cast<std::uint64_t>(c_total(n, r, t).total));
    }
  }
  return finish(n, std::move(sum), Method::burnside);
}

CensusResult dci_census(std::int64_t n) {
  if (n <= 2 || n % 2 == 0 || !arith::is_squarefree(n)) {
    throw HypothesisViolated("dci_census: n = " + std::to_string(n) +
                             " violates the hypothesis n > 2, odd and square-free");
  }
  Nat sum;
  for (const std::int64_t t : arith::divisors_of(n)) {
    const Nat weight(static_cast<std::uint64_t>(arith::euler_phi(n / t)));
    Nat inner;
    for (std::int64_t r = 1; r < n; ++r) {
      if (arith::gcd(r, n) != 1) continue;
      // t = n stands for the class t' = 0.
      const std::int64_t c = c_u_total(n, r) + c_v_squarefree(n, r, t % n);
      inner += Nat::pow2(static_cast<std::uint64_t>(c));
    }
    sum += weight * inner;
  }
  return finish(n, std::move(sum), Method::theorem);
}

CensusResult d6p_census(std::int64_t p) {
  const d6p::D6pParams params = d6p::D6pParams::make(p);
  CensusResult result;
  result.n = params.n;
  result.aut_order = static_cast<std::uint64_t>(params.n * arith::euler_phi(params.n));
  result.orbit_count = d6p::d6p_count(p);
  result.burnside_sum = result.orbit_count * Nat(result.aut_order);
  result.dci = dci_status(params.n);
  result.method = Method::d6p;
  result.p = p;
  return result;
}

std::vector<CensusRow> census_table(const std::vector<std::int64_t>& n_values, Method method) {
  std::vector<CensusRow> rows;
  rows.reserve(n_values.size());
  for (const std::int64_t n : n_values) {
    CensusRow row{n, method, std::nullopt, {}};
    try {
      switch (method) {
        case Method::theorem: row.result = dci_census(n); break;
        case Method::burnside: row.result = burnside_count(n); break;
        case Method::d6p:
          if (n % 3 != 0) throw NotApplicable("d6p: n = " + std::to_string(n) + " is not 3p");
          row.result = d6p_census(n / 3);
          break;
        case Method::oracle: {
          require(n >= 3, "oracle census: n must be at least 3");
          oracle::OrbitOptions options;
          options.max_mask_bits = oracle::max_mask_bits_from_env();
          const Nat orbits = oracle::powerset_orbit_count(n, options);
          const Nat aut_order(static_cast<std::uint64_t>(n * arith::euler_phi(n)));
          row.result = finish(n, orbits * aut_order, Method::oracle);
          break;
        }
      }
    } catch (const DomainError& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::int64_t count_t_class(std::int64_t n, std::int64_t t) {
  require(n >= 1, "count_t_class: n must be positive");
  std::int64_t count = 0;
  for (std::int64_t tp = 0; tp < n; ++tp) count += arith::gcd(tp, n) == t ? 1 : 0;
  return count;
}

}  // namespace cayley_census
