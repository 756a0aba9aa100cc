// Command-line front end. Talks to the engine only through the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratsurf/ratsurf.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitSchema = 2;
constexpr int kExitInconsistent = 3;

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(rs_status s) {
  switch (s) {
    case RS_OK: return kExitOk;
    case RS_ERR_SCHEMA:
    case RS_ERR_ARGUMENT:
    case RS_ERR_DIMENSION:
    case RS_ERR_DOMAIN: return kExitSchema;
    case RS_ERR_SPEC_INCONSISTENCY: return kExitInconsistent;
    default: return kExitFailure;
  }
}

void check(rs_status s) {
  if (s != RS_OK) throw CliError{exit_code_for(s), std::string(rs_status_name(s)) + ": " + rs_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  rs_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitSchema, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "@path" reads a file, anything else is taken as inline JSON
std::string json_argument(const std::string& arg) { return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg; }

struct SpecHandle {
  rs_spec* p = nullptr;
  ~SpecHandle() { rs_spec_free(p); }
};

void load_valid_spec(const std::string& path, SpecHandle& h) {
  check(rs_spec_from_json(read_file(path).c_str(), &h.p));
  char* v = nullptr;
  check(rs_spec_violations(h.p, &v));
  const json violations = json::parse(take(v));
  if (!violations.empty()) {
    std::string msg = "surface file is inconsistent:";
    for (const auto& x : violations)
      msg += "\n  " + x.at("field").get<std::string>() + ": " + x.at("rule").get<std::string>();
    throw CliError{kExitInconsistent, msg};
  }
}

std::string render(const json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (j.is_array()) {
    std::string out = "(";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += render(j[i]);
      out += i == 0 ? (j.size() > 1 ? "; " : "") : (i + 1 < j.size() ? ", " : "");
    }
    return out + ")";
  }
  return j.dump();
}

std::string render_parts(const json& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += " + ";
    const std::string m = render(p.at("multiplicity"));
    out += (m == "1" ? "" : m + "*") + render(p.at("class"));
  }
  return out;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
}

int cmd_analyze(const std::string& spec_path, const std::string& query_path, bool as_json) {
  SpecHandle spec;
  load_valid_spec(spec_path, spec);
  char* q = nullptr;
  check(rs_parse_queries(read_file(query_path).c_str(), &q));
  const json queries = json::parse(take(q));

  int code = kExitOk;
  std::vector<std::vector<std::string>> table{
      {"label", "class", "eff", "nef", "case", "h0", "h1", "h2", "fixed part", "nef part", "base point", "comps"}};
  for (const auto& query : queries) {
    const std::string label = query.at("label").get<std::string>();
    char* out = nullptr;
    const rs_status s = rs_analyze(spec.p, query.at("coords").dump().c_str(), &out);
    if (s != RS_OK) {
      if (s == RS_ERR_SPEC_INCONSISTENCY) code = kExitInconsistent;
      const json err = {{"label", label}, {"error", rs_status_name(s)}, {"message", rs_last_error()}};
      if (as_json) std::cout << err.dump() << "\n";
      else table.push_back({label, render(query.at("coords")), "error: " + std::string(rs_status_name(s)),
                            rs_last_error()});
      continue;
    }
    json report = json::parse(take(out));
    if (as_json) {
      report["label"] = label;
      std::cout << report.dump() << "\n";
      continue;
    }
    const json& dec = report.at("decomposition");
    table.push_back({label, render(report.at("class")), render(report.at("effective")), render(report.at("nef")),
                     render(report.at("case")), render(report.at("h0")), render(report.at("h1")),
                     render(report.at("h2")), render_parts(report.at("fixed_components")),
                     dec.is_null() ? "-" : render(dec.at("nef_part")), render(report.at("base_point")),
                     render(report.at("components"))});
  }
  if (!as_json) {
    print_table(table);
    std::cout << "(effectivity and fixed parts are relative to the negative-curve catalog)\n";
  }
  return code;
}

int cmd_enumerate(const std::string& spec_path, const std::string& kind, long bound) {
  SpecHandle spec;
  load_valid_spec(spec_path, spec);
  char* out = nullptr;
  check(rs_enumerate(spec.p, kind.c_str(), bound, &out));
  const json e = json::parse(take(out));
  std::cout << "# " << kind << " count=" << e.at("count").dump() << " saturated=" << (e.at("saturated").get<bool>() ? "yes" : "no")
            << " max_degree=" << render(e.at("max_degree")) << "\n";
  for (const auto& c : e.at("classes")) std::cout << render(c) << "\n";
  return kExitOk;
}

int cmd_builtin(const std::string& kind, int n, long tau, long degree) {
  SpecHandle spec;
  check(rs_spec_builtin(kind.c_str(), n, tau, degree, &spec.p));
  char* out = nullptr;
  check(rs_spec_to_json(spec.p, &out));
  std::cout << json::parse(take(out)).dump(2) << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of divisor classes on rational anticanonical surfaces"};
  app.require_subcommand(1);

  std::string spec_path, query_path, kind;
  bool as_json = false;
  long bound = 0;
  auto* analyze = app.add_subcommand("analyze", "Analyze every class of a query file");
  analyze->add_option("--spec", spec_path, "Surface spec (JSON)")->required();
  analyze->add_option("--queries", query_path, "Query file: [{label, coords}]")->required();
  analyze->add_flag("--json", as_json, "One JSON record per line");

  auto* enumerate = app.add_subcommand("enumerate", "List exceptional or (-2) classes");
  enumerate->add_option("--spec", spec_path, "Surface spec (JSON)")->required();
  enumerate->add_option("--kind", kind, "exceptional | roots")->required()->check(CLI::IsMember({"exceptional", "roots"}));
  enumerate->add_option("--bound", bound, "Degree bound")->required();

  int n = 0;
  long tau = 0, degree = 6;
  auto* builtin = app.add_subcommand("builtin", "Print a built-in spec");
  builtin->add_option("--kind", kind, "delpezzo | cubic_pencil | torsion")->required();
  builtin->add_option("--n", n, "Number of blown-up points")->required();
  builtin->add_option("--tau", tau, "Torsion order for kind torsion");
  builtin->add_option("--degree", degree, "Catalog degree bound for n = 9");

  auto* oracle = app.add_subcommand("oracle", "Brute-force checkers");
  oracle->require_subcommand(1);
  std::size_t rank = 0;
  std::int64_t square = 0, anti = 0, lo = 0, hi = 0, coeff_bound = 0;
  auto* solve = oracle->add_subcommand("solve", "Classes in a box with given F^2 and F.(-K)");
  solve->add_option("--rank", rank, "n + 1")->required();
  solve->add_option("--square", square, "F^2")->required();
  solve->add_option("--anti-degree", anti, "F.(-K)")->required();
  solve->add_option("--lo", lo, "Lower coordinate bound")->required();
  solve->add_option("--hi", hi, "Upper coordinate bound")->required();

  std::string generators, cls, classes, pencil;
  auto* member = oracle->add_subcommand("member", "Bounded monoid membership");
  member->add_option("--generators", generators, "JSON array of classes, or @file")->required();
  member->add_option("--class", cls, "JSON class")->required();
  member->add_option("--bound", coeff_bound, "Maximum number of summands")->required();

  auto* chain = oracle->add_subcommand("chain", "Check a (-2)...(-2)(-1) chain");
  chain->add_option("--classes", classes, "JSON array of classes, or @file")->required();
  chain->add_option("--pencil", pencil, "JSON class of the pencil");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitSchema;
  }

  try {
    if (*analyze) return cmd_analyze(spec_path, query_path, as_json);
    if (*enumerate) return cmd_enumerate(spec_path, kind, bound);
    if (*builtin) return cmd_builtin(kind, n, tau, degree);
    if (*solve) {
      char* out = nullptr;
      check(rs_oracle_solve(rank, square, anti, lo, hi, &out));
      const json r = json::parse(take(out));
      std::cout << "# count=" << r.at("count").dump() << "\n";
      for (const auto& c : r.at("classes")) std::cout << render(c) << "\n";
      return kExitOk;
    }
    if (*member) {
      int yes = 0;
      check(rs_oracle_member(json_argument(generators).c_str(), json_argument(cls).c_str(), coeff_bound, &yes));
      std::cout << (yes ? "true" : "false") << "\n";
      return kExitOk;
    }
    if (*chain) {
      int yes = 0;
      const std::string p = json_argument(pencil);
      check(rs_oracle_chain(json_argument(classes).c_str(), pencil.empty() ? nullptr : p.c_str(), &yes));
      std::cout << (yes ? "true" : "false") << "\n";
      return kExitOk;
    }
  } catch (const CliError& e) {
    std::cerr << "ratsurf: " << e.message << "\n";
    return e.code;
  }
  return kExitFailure;
}
