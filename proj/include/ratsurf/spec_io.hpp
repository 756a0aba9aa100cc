#ifndef RATSURF_SPEC_IO_HPP
#define RATSURF_SPEC_IO_HPP

// JSON encoding of specs, query files and reports.
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; either form is accepted on input. Unknown fields are rejected
// with a Schema error.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ratsurf/report.hpp"
#include "ratsurf/surface.hpp"

namespace ratsurf::io {

using json = nlohmann::json;

Integer integer_from_json(const json& j, const std::string& where);
json integer_to_json(const Integer& x);

std::vector<Integer> coords_from_json(const json& j, const std::string& where);
json class_to_json(const DivisorClass& f);

SurfaceSpec spec_from_json(const json& j);
/// Parses and checks the schema, not the geometry; see validate_spec.
SurfaceSpec parse_spec(std::string_view text);
json spec_to_json(const SurfaceSpec& spec);

struct Query {
  std::string label;
  std::vector<Integer> coords;  // length checked against the surface per query
};

std::vector<Query> parse_queries(std::string_view text);

json violations_to_json(const std::vector<Violation>& v);
json enumeration_to_json(const Enumeration& e);
json analysis_to_json(const AnalysisReport& r);
json report_to_json(const SurfaceSpec& spec, const ClassReport& r);

} // namespace ratsurf::io

#endif // RATSURF_SPEC_IO_HPP
