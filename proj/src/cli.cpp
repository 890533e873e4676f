#include "cayley_census/cli.hpp"

#include "cayley_census/census.hpp"
#include "cayley_census/cycles.hpp"
#include "cayley_census/d6p.hpp"
#include "cayley_census/dihedral.hpp"
#include "cayley_census/errors.hpp"
#include "cayley_census/io.hpp"
#include "cayley_census/oracle.hpp"
#include "cayley_census/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace cayley_census::cli {

namespace {

using nlohmann::json;

struct Request {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t t = 0;
  std::int64_t p = 0;
  std::string method;
  std::string format = "text";
  std::vector<std::int64_t> n_list;
  std::vector<std::int64_t> p_list;
  std::int64_t n_max = 35;
};

void add_format(CLI::App* cmd, Request& req, std::vector<std::string> allowed) {
  cmd->add_option("--format", req.format, "Output format")
      ->check(CLI::IsMember(std::move(allowed)))
      ->capture_default_str();
}

int emit_census(const CensusResult& result, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << json(result).dump() << '\n';
  } else if (format == "csv") {
    out << kCsvHeader << '\n' << csv_row(result) << '\n';
  } else {
    write_text(out, result);
  }
  return kOk;
}

int cmd_order(const Request& req, std::ostream& out) {
  const Aut a = make_aut(req.n, req.r, req.t);
  const OrderReport report{a.n(), a.r(), a.t(), aut_order(a)};
  if (req.format == "json") {
    out << json(report).dump() << '\n';
  } else {
    out << report.order << '\n';
  }
  return kOk;
}

int cmd_cycles(const Request& req, std::ostream& out) {
  const Aut a = make_aut(req.n, req.r, req.t);
  CycleReport report;
  report.r = a.r();
  report.t = a.t();
  report.method = req.method;
  if (req.method == "perm") {
    require(a.n() >= 2, "cycles --method perm needs n >= 2");
    report.data = oracle::cycle_data_from_permutation(a);
  } else {
    report.data = c_total(a.n(), a.r(), a.t());
  }
  if (req.format == "json") {
    out << json(report).dump() << '\n';
  } else {
    write_text(out, report);
  }
  return kOk;
}

CensusResult census_for(std::int64_t n, Method method) {
  switch (method) {
    case Method::theorem: return dci_census(n);
    case Method::burnside: return burnside_count(n);
    case Method::d6p:
      if (n % 3 != 0) throw NotApplicable("--method d6p needs n = 3p; got n = " + std::to_string(n));
      return d6p_census(n / 3);
    case Method::oracle: {
      std::vector<CensusRow> rows = census_table({n}, Method::oracle);
      if (!rows.front().result) throw DomainError(rows.front().error);
      return *rows.front().result;
    }
  }
  throw DomainError("unsupported method");
}

int cmd_count(const Request& req, std::ostream& out) {
  return emit_census(census_for(req.n, parse_method(req.method)), req.format, out);
}

int cmd_d6p(const Request& req, std::ostream& out) {
  return emit_census(d6p_census(req.p), req.format, out);
}

int cmd_table(const Request& req, std::ostream& out, std::ostream& err) {
  std::vector<std::int64_t> ns = req.n_list;
  std::string method_name = req.method;
  if (!req.p_list.empty()) {
    ns.clear();
    for (const std::int64_t p : req.p_list) ns.push_back(3 * p);
    if (method_name.empty()) method_name = "d6p";
  }
  if (method_name.empty()) method_name = "theorem";
  const Method method = parse_method(method_name);
  const std::vector<CensusRow> rows = census_table(ns, method);

  if (req.format == "json") {
    out << json(rows).dump() << '\n';
  } else if (req.format == "csv") {
    out << kCsvHeader << '\n';
    for (const CensusRow& row : rows) {
      if (row.result) out << csv_row(*row.result) << '\n';
    }
  } else {
    out << std::left << std::setw(6) << "n" << std::setw(6) << "p" << std::setw(10) << "aut_order"
        << std::setw(16) << "dci" << std::setw(10) << "method"
        << "orbit_count\n";
    for (const CensusRow& row : rows) {
      if (!row.result) {
        out << std::setw(6) << row.n << "error: " << row.error << '\n';
        continue;
      }
      const CensusResult& c = *row.result;
      out << std::setw(6) << c.n << std::setw(6) << (c.p ? std::to_string(*c.p) : "-")
          << std::setw(10) << c.aut_order << std::setw(16) << to_string(c.dci.tag)
          << std::setw(10) << to_string(c.method) << c.orbit_count << '\n';
    }
  }
  const bool any_error =
      std::any_of(rows.begin(), rows.end(), [](const CensusRow& row) { return !row.result; });
  for (const CensusRow& row : rows) {
    if (!row.result) err << "n = " << row.n << ": " << row.error << '\n';
  }
  return any_error ? kDomainError : kOk;
}

int cmd_verify(const Request& req, std::ostream& out) {
  require(req.n_max >= 1, "--n-max must be positive");
  verify::Options options;
  options.n_max = req.n_max;
  const verify::Report report = verify::run(options);
  if (req.format == "json") {
    out << json{{"n_max", req.n_max}, {"passed", report.passed()}, {"checks", report.checks}}.dump()
        << '\n';
  } else {
    std::size_t passed = 0;
    for (const verify::CheckResult& c : report.checks) {
      passed += c.passed ? 1 : 0;
      out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(28) << c.name << c.cases
          << " cases\n";
      if (!c.passed) out << "      " << c.detail << '\n';
    }
    out << "verify: " << passed << "/" << report.checks.size() << " checks passed (n_max = "
        << req.n_max << ")\n";
  }
  return report.exit_code();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Counts Cayley digraphs on dihedral groups up to CI-isomorphism", "cayley-census"};
  app.require_subcommand(1, 1);

  auto* order = app.add_subcommand("order", "Order of the automorphism a_{n,r,t}");
  order->add_option("n", req.n)->required();
  order->add_option("r", req.r)->required();
  order->add_option("t", req.t)->required();
  add_format(order, req, {"text", "json"});

  auto* cycles = app.add_subcommand("cycles", "Cycle numbers of a_{n,r,t} on D_2n^#");
  cycles->add_option("n", req.n)->required();
  cycles->add_option("r", req.r)->required();
  cycles->add_option("t", req.t)->required();
  req.method = "formula";
  cycles->add_option("--method", req.method, "formula or perm")
      ->check(CLI::IsMember({"formula", "perm"}));
  add_format(cycles, req, {"text", "json"});

  auto* count = app.add_subcommand("count", "Number of CI-classes of Cayley digraphs on D_2n");
  count->add_option("n", req.n)->required();
  std::string count_method = "burnside";
  count->add_option("--method", count_method, "theorem, burnside, d6p or oracle")
      ->check(CLI::IsMember({"theorem", "burnside", "d6p", "oracle"}))
      ->capture_default_str();
  add_format(count, req, {"text", "csv", "json"});

  auto* d6p_cmd = app.add_subcommand("d6p", "Closed-form count for D_6p, p >= 5 prime");
  d6p_cmd->add_option("p", req.p)->required();
  add_format(d6p_cmd, req, {"text", "csv", "json"});

  auto* table = app.add_subcommand("table", "Census rows for a list of n or p");
  auto* p_list = table->add_option("--p-list", req.p_list, "Comma-separated primes p (n = 3p)")
                     ->delimiter(',');
  auto* n_list = table->add_option("--n-list", req.n_list, "Comma-separated n")->delimiter(',');
  p_list->excludes(n_list);
  std::string table_method;
  table->add_option("--method", table_method, "theorem, burnside, d6p or oracle")
      ->check(CLI::IsMember({"theorem", "burnside", "d6p", "oracle"}));
  add_format(table, req, {"text", "csv", "json"});

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("--n-max", req.n_max, "Largest n swept")->capture_default_str();
  add_format(verify_cmd, req, {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (table->parsed() && req.p_list.empty() && req.n_list.empty()) {
      throw CLI::ValidationError("table", "one of --p-list or --n-list is required");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (order->parsed()) return cmd_order(req, out);
    if (cycles->parsed()) return cmd_cycles(req, out);
    if (count->parsed()) {
      req.method = count_method;
      return cmd_count(req, out);
    }
    if (d6p_cmd->parsed()) return cmd_d6p(req, out);
    if (table->parsed()) {
      req.method = table_method;
      return cmd_table(req, out, err);
    }
    if (verify_cmd->parsed()) return cmd_verify(req, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInvariantViolation;
  }
  return kUsageError;
}

}  // namespace cayley_census::cli
