#pragma once

// Burnside counting of CI-classes of Cayley digraphs on D_2n. When D_2n is a
// DCI-group the CI-class count is the number of Cayley digraphs up to
// isomorphism.

#include "cayley_census/nat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cayley_census {

enum class DciTag { known_dci, known_not_dci, unknown };

struct DciStatus {
  DciTag tag = DciTag::unknown;
  std::string citation;

  friend bool operator==(const DciStatus&, const DciStatus&) = default;
};

enum class Method { theorem, burnside, d6p, oracle };

std::string_view to_string(DciTag tag);
std::string_view to_string(Method method);
/// Throws DomainError for unrecognized names.
DciTag parse_dci_tag(std::string_view name);
Method parse_method(std::string_view name);

struct CensusResult {
  std::int64_t n = 0;
  std::uint64_t aut_order = 0;  // n phi(n)
  Nat burnside_sum;             // sum over Aut(D_2n) of 2^c(a)
  Nat orbit_count;
  DciStatus dci;
  Method method = Method::burnside;

  /// p when n = 3p came from the D_6p closed form.
  std::optional<std::int64_t> p;

  friend bool operator==(const CensusResult&, const CensusResult&) = default;
};

DciStatus dci_status(std::int64_t n);

/// Direct Burnside sum over all n phi(n) automorphisms; n >= 3.
CensusResult burnside_count(std::int64_t n);

/// Divisor-weighted form: t runs over divisors of n with weight phi(n/t).
/// Requires n > 2 odd and square-free (HypothesisViolated otherwise).
CensusResult dci_census(std::int64_t n);

/// Closed form for n = 3p, packaged as a CensusResult.
CensusResult d6p_census(std::int64_t p);

struct CensusRow {
  std::int64_t n = 0;
  Method method = Method::burnside;
  std::optional<CensusResult> result;
  std::string error;  // set when result is empty
};

/// One row per n. Per-row domain errors are captured in the row; the batch
/// continues. Method::d6p expects n = 3p.
std::vector<CensusRow> census_table(const std::vector<std::int64_t>& n_values, Method method);

/// Counts |{t' in [0, n) : gcd(t', n) = t}|; equals phi(n / t) for t | n.
std::int64_t count_t_class(std::int64_t n, std::int64_t t);

}  // namespace cayley_census
