#pragma once

// Serialization of results for the command-line tool. JSON carries big
// integers as decimal strings.

#include "cayley_census/census.hpp"
#include "cayley_census/cycles.hpp"
#include "cayley_census/verify.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace cayley_census {

struct OrderReport {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t t = 0;
  std::int64_t order = 0;

  friend bool operator==(const OrderReport&, const OrderReport&) = default;
};

struct CycleReport {
  std::int64_t r = 0;
  std::int64_t t = 0;
  std::string method;  // "formula" or "perm"
  CycleData data;

  friend bool operator==(const CycleReport&, const CycleReport&) = default;
};

void to_json(nlohmann::json& j, const Nat& v);
void from_json(const nlohmann::json& j, Nat& v);
void to_json(nlohmann::json& j, const CensusResult& c);
void from_json(const nlohmann::json& j, CensusResult& c);
void to_json(nlohmann::json& j, const CensusRow& row);
void from_json(const nlohmann::json& j, CensusRow& row);
void to_json(nlohmann::json& j, const OrderReport& o);
void from_json(const nlohmann::json& j, OrderReport& o);
void to_json(nlohmann::json& j, const CycleReport& c);
void from_json(const nlohmann::json& j, CycleReport& c);

namespace verify {
void to_json(nlohmann::json& j, const CheckResult& c);
void from_json(const nlohmann::json& j, CheckResult& c);
}  // namespace verify

inline constexpr const char* kCsvHeader = "n,p_or_empty,aut_order,orbit_count,dci,method";

/// One CSV line (no newline) for a census result.
std::string csv_row(const CensusResult& c);

void write_text(std::ostream& os, const CensusResult& c);
void write_text(std::ostream& os, const CycleReport& c);

}  // namespace cayley_census
