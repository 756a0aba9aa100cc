#include "ratsurf/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <initializer_list>
#include <set>

#include "ratsurf/error.hpp"

namespace ratsurf::io {

namespace {

[[noreturn]] void schema(const std::string& what) { fail(ErrorKind::Schema, what); }

void only_fields(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) schema(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      schema(where + ": unknown field '" + key + "'");
  }
}

const json& required(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) schema(where + ": missing field '" + key + "'");
  return *it;
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    schema(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace

Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto u = j.get<std::uint64_t>();
      return Integer(std::to_string(u));
    }
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size() || !std::all_of(s.begin() + start, s.end(), [](unsigned char c) { return std::isdigit(c); }))
      schema(where + ": '" + s + "' is not a decimal integer");
    return Integer(s);
  }
  schema(where + ": expected an integer");
}

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

std::vector<Integer> coords_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array of integers");
  std::vector<Integer> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json class_to_json(const DivisorClass& f) {
  json out = json::array();
  for (const auto& x : f.coords()) out.push_back(integer_to_json(x));
  return out;
}

SurfaceSpec spec_from_json(const json& j) {
  only_fields(j, "spec", {"n", "curves", "ample", "restriction", "h0_anticanonical"});
  SurfaceSpec spec;
  const Integer n = integer_from_json(required(j, "n", "spec"), "n");
  if (n < 0 || n > 1000) schema("n: must lie in [0, 1000]");
  spec.n = static_cast<int>(n.get_si());

  const auto& curves = required(j, "curves", "spec");
  if (!curves.is_array()) schema("curves: expected an array");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string where = "curves[" + std::to_string(i) + "]";
    only_fields(curves[i], where, {"coords", "anticanonical_fixed_component"});
    NegativeCurve c;
    c.cls = DivisorClass(coords_from_json(required(curves[i], "coords", where), where + ".coords"));
    if (auto it = curves[i].find("anticanonical_fixed_component"); it != curves[i].end()) {
      if (!it->is_boolean()) schema(where + ".anticanonical_fixed_component: expected a boolean");
      c.is_anticanonical_fixed_component = it->get<bool>();
    }
    spec.curves.push_back(std::move(c));
  }

  spec.ample = DivisorClass(coords_from_json(required(j, "ample", "spec"), "ample"));

  const auto& rows = required(j, "restriction", "spec");
  if (!rows.is_array()) schema("restriction: expected an array");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "restriction[" + std::to_string(i) + "]";
    only_fields(rows[i], where, {"coeffs", "modulus"});
    RestrictionRow row;
    row.coeffs = coords_from_json(required(rows[i], "coeffs", where), where + ".coeffs");
    row.modulus = integer_from_json(required(rows[i], "modulus", where), where + ".modulus");
    spec.restriction.rows.push_back(std::move(row));
  }

  spec.h0_anticanonical = integer_from_json(required(j, "h0_anticanonical", "spec"), "h0_anticanonical");
  spec.normalize();
  return spec;
}

SurfaceSpec parse_spec(std::string_view text) { return spec_from_json(parse_text(text)); }

json spec_to_json(const SurfaceSpec& spec) {
  json curves = json::array();
  for (const auto& c : spec.curves)
    curves.push_back({{"coords", class_to_json(c.cls)},
                      {"anticanonical_fixed_component", c.is_anticanonical_fixed_component}});
  json rows = json::array();
  for (const auto& r : spec.restriction.rows) {
    json coeffs = json::array();
    for (const auto& x : r.coeffs) coeffs.push_back(integer_to_json(x));
    rows.push_back({{"coeffs", coeffs}, {"modulus", integer_to_json(r.modulus)}});
  }
  return {{"n", spec.n},
          {"curves", curves},
          {"ample", class_to_json(spec.ample)},
          {"restriction", rows},
          {"h0_anticanonical", integer_to_json(spec.h0_anticanonical)}};
}

std::vector<Query> parse_queries(std::string_view text) {
  const json j = parse_text(text);
  if (!j.is_array()) schema("queries: expected an array");
  std::vector<Query> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "queries[" + std::to_string(i) + "]";
    only_fields(j[i], where, {"label", "coords"});
    const auto& label = required(j[i], "label", where);
    if (!label.is_string()) schema(where + ".label: expected a string");
    Query q{label.get<std::string>(), coords_from_json(required(j[i], "coords", where), where + ".coords")};
    if (!seen.insert(q.label).second) schema(where + ": duplicate label '" + q.label + "'");
    out.push_back(std::move(q));
  }
  return out;
}

json violations_to_json(const std::vector<Violation>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back({{"field", x.field}, {"rule", x.rule}});
  return out;
}

json enumeration_to_json(const Enumeration& e) {
  json classes = json::array();
  for (const auto& c : e.classes) classes.push_back(class_to_json(c));
  return {{"count", e.classes.size()},
          {"saturated", e.saturated},
          {"max_degree", e.max_degree ? json(*e.max_degree) : json(nullptr)},
          {"classes", classes}};
}

namespace {

json components_to_json(const std::vector<std::pair<DivisorClass, Integer>>& parts) {
  json out = json::array();
  for (const auto& [cls, mult] : parts) out.push_back({{"class", class_to_json(cls)}, {"multiplicity", integer_to_json(mult)}});
  return out;
}

json dinN_to_json(const DinNResult& d) {
  json contracted = json::array();
  for (const auto& e : d.contracted) contracted.push_back(class_to_json(e));
  return {{"s", integer_to_json(d.s)},
          {"r", integer_to_json(d.r)},
          {"tau", d.tau ? integer_to_json(*d.tau) : json(nullptr)},
          {"sigma", integer_to_json(d.sigma)},
          {"terminal_k_squared", integer_to_json(d.terminal_k_sq)},
          {"contracted", contracted}};
}

json chain_to_json(const ChainReport& c) {
  json chain = json::array();
  for (const auto& n : c.chain) chain.push_back(class_to_json(n));
  return {{"chain", chain},
          {"pencil", c.pencil.rank() ? class_to_json(c.pencil) : json(nullptr)},
          {"multiplicity", integer_to_json(c.multiplicity)},
          {"valid", c.valid}};
}

} // namespace

json analysis_to_json(const AnalysisReport& r) {
  return {{"case", to_string(r.case_label)},
          {"h0", integer_to_json(r.h0)},
          {"h1", integer_to_json(r.h1)},
          {"h2", integer_to_json(r.h2)},
          {"fixed_part", class_to_json(r.fixed_part)},
          {"fixed_components", components_to_json(r.fixed_components)},
          {"base_point", to_string(r.base_point)},
          {"components", integer_to_json(r.components_of_general_section_of_f_minus_k)},
          {"dinN", r.dinN ? dinN_to_json(*r.dinN) : json(nullptr)},
          {"chain", r.chain ? chain_to_json(*r.chain) : json(nullptr)}};
}

json report_to_json(const SurfaceSpec& spec, const ClassReport& r) {
  json out = {{"class", class_to_json(r.cls)},
              {"effective", r.effective},
              {"nef", r.nef},
              {"h0", integer_to_json(r.h.h0)},
              {"h1", integer_to_json(r.h.h1)},
              {"h2", integer_to_json(r.h.h2)},
              {"fixed_part", class_to_json(r.fixed_part)},
              {"fixed_components", components_to_json(r.fixed_components)},
              {"base_point", r.base_point ? json(to_string(*r.base_point)) : json(nullptr)},
              {"relative_to_catalog", true}};
  if (r.decomposition) {
    json neg = json::array();
    for (const auto& [idx, mult] : r.decomposition->negative_part)
      neg.push_back({{"class", class_to_json(spec.curves[idx].cls)}, {"multiplicity", integer_to_json(mult)}});
    out["decomposition"] = {{"nef_part", class_to_json(r.decomposition->nef_part)}, {"negative_part", neg}};
  } else {
    out["decomposition"] = nullptr;
  }
  if (r.nef_analysis) {
    out["case"] = to_string(r.nef_analysis->case_label);
    out["components"] = integer_to_json(r.nef_analysis->components_of_general_section_of_f_minus_k);
    out["nef_part_analysis"] = analysis_to_json(*r.nef_analysis);
  } else {
    out["case"] = nullptr;
    out["components"] = nullptr;
    out["nef_part_analysis"] = nullptr;
  }
  return out;
}

} // namespace ratsurf::io
