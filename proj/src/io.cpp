#include "cayley_census/io.hpp"

#include "cayley_census/errors.hpp"

#include <sstream>

namespace cayley_census {

using nlohmann::json;

void to_json(json& j, const Nat& v) { j = v.to_string(); }

void from_json(const json& j, Nat& v) {
  require(j.is_string(), "expected a decimal string for a big integer");
  v = Nat::from_string(j.get<std::string>());
}

void to_json(json& j, const CensusResult& c) {
  j = json{{"n", c.n},
           {"aut_order", c.aut_order},
           {"burnside_sum", c.burnside_sum},
           {"orbit_count", c.orbit_count},
           {"dci", std::string(to_string(c.dci.tag))},
           {"method", std::string(to_string(c.method))}};
}

void from_json(const json& j, CensusResult& c) {
  c.n = j.at("n").get<std::int64_t>();
  c.aut_order = j.at("aut_order").get<std::uint64_t>();
  c.burnside_sum = j.at("burnside_sum").get<Nat>();
  c.orbit_count = j.at("orbit_count").get<Nat>();
  c.method = parse_method(j.at("method").get<std::string>());
  const DciTag tag = parse_dci_tag(j.at("dci").get<std::string>());
  c.dci = dci_status(c.n);
  require(c.dci.tag == tag, "dci tag does not match n = " + std::to_string(c.n));
  c.p = c.method == Method::d6p ? std::optional<std::int64_t>(c.n / 3) : std::nullopt;
}

void to_json(json& j, const CensusRow& row) {
  if (row.result) {
    j = *row.result;
  } else {
    j = json{{"n", row.n}, {"method", std::string(to_string(row.method))}, {"error", row.error}};
  }
}

void from_json(const json& j, CensusRow& row) {
  row.n = j.at("n").get<std::int64_t>();
  row.method = parse_method(j.at("method").get<std::string>());
  if (j.contains("error")) {
    row.result.reset();
    row.error = j.at("error").get<std::string>();
  } else {
    row.result = j.get<CensusResult>();
    row.error.clear();
  }
}

void to_json(json& j, const OrderReport& o) {
  j = json{{"n", o.n}, {"r", o.r}, {"t", o.t}, {"order", o.order}};
}

void from_json(const json& j, OrderReport& o) {
  o.n = j.at("n").get<std::int64_t>();
  o.r = j.at("r").get<std::int64_t>();
  o.t = j.at("t").get<std::int64_t>();
  o.order = j.at("order").get<std::int64_t>();
}

void to_json(json& j, const CycleReport& c) {
  json parts = json::object();
  for (const auto& [d, count] : c.data.u_parts) parts[std::to_string(d)] = count;
  j = json{{"n", c.data.n},     {"r", c.r},         {"t", c.t},
           {"method", c.method}, {"u_parts", parts}, {"c_v", c.data.c_v},
           {"total", c.data.total}};
}

void from_json(const json& j, CycleReport& c) {
  c.data.n = j.at("n").get<std::int64_t>();
  c.r = j.at("r").get<std::int64_t>();
  c.t = j.at("t").get<std::int64_t>();
  c.method = j.at("method").get<std::string>();
  c.data.u_parts.clear();
  for (const auto& [key, value] : j.at("u_parts").items()) {
    c.data.u_parts.emplace(std::stoll(key), value.get<std::int64_t>());
  }
  c.data.c_v = j.at("c_v").get<std::int64_t>();
  c.data.total = j.at("total").get<std::int64_t>();
}

namespace verify {

void to_json(json& j, const CheckResult& c) {
  j = json{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}};
}

void from_json(const json& j, CheckResult& c) {
  c.name = j.at("name").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.cases = j.at("cases").get<std::uint64_t>();
  c.detail = j.at("detail").get<std::string>();
  c.seconds = 0.0;
}

}  // namespace verify

std::string csv_row(const CensusResult& c) {
  std::ostringstream os;
  os << c.n << ',' << (c.p ? std::to_string(*c.p) : std::string()) << ',' << c.aut_order << ','
     << c.orbit_count << ',' << to_string(c.dci.tag) << ',' << to_string(c.method);
  return os.str();
}

void write_text(std::ostream& os, const CensusResult& c) {
  os << "n            " << c.n << '\n';
  if (c.p) os << "p            " << *c.p << '\n';
  os << "aut_order    " << c.aut_order << '\n'
     << "burnside_sum " << c.burnside_sum << '\n'
     << "orbit_count  " << c.orbit_count << '\n'
     << "dci          " << to_string(c.dci.tag) << " (" << c.dci.citation << ")\n"
     << "method       " << to_string(c.method) << '\n';
  if (c.dci.tag != DciTag::known_dci) {
    os << "note         orbit_count counts CI-classes; it bounds the isomorphism count from above\n";
  }
}

void write_text(std::ostream& os, const CycleReport& c) {
  os << "a_{" << c.data.n << "," << c.r << "," << c.t << "} on D_" << 2 * c.data.n << "^#  ("
     << c.method << ")\n";
  for (const auto& [d, count] : c.data.u_parts) os << "  U(" << d << ")  " << count << '\n';
  os << "  V     " << c.data.c_v << '\n' << "  total " << c.data.total << '\n';
}

}  // namespace cayley_census
