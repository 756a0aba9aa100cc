#include "ratsurf/ratsurf.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "ratsurf/cone.hpp"
#include "ratsurf/error.hpp"
#include "ratsurf/oracle.hpp"
#include "ratsurf/report.hpp"
#include "ratsurf/spec_io.hpp"

struct rs_spec {
  ratsurf::SurfaceSpec spec;
};

namespace {

using namespace ratsurf;
using io::json;

thread_local std::string last_error;

rs_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Dimension: return RS_ERR_DIMENSION;
    case ErrorKind::Domain: return RS_ERR_DOMAIN;
    case ErrorKind::Invariant: return RS_ERR_INVARIANT;
    case ErrorKind::SpecInconsistency: return RS_ERR_SPEC_INCONSISTENCY;
    case ErrorKind::CatalogIncomplete: return RS_ERR_CATALOG_INCOMPLETE;
    case ErrorKind::Refusal: return RS_ERR_REFUSAL;
    case ErrorKind::Schema: return RS_ERR_SCHEMA;
  }
  return RS_ERR_INTERNAL;
}

struct BadArgument {
  std::string what;
};

template <class F>
rs_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return RS_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const BadArgument& e) {
    last_error = e.what;
    return RS_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RS_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return RS_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) throw BadArgument{std::string(name) + " is null"};
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json parse(const char* text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
  }
}

DivisorClass class_from(const int64_t* coords, size_t len) {
  if (len > 0) need(coords, "coords");
  return DivisorClass::from_int64(std::vector<std::int64_t>(coords, coords + len));
}

DivisorClass class_from_json(const char* text) {
  return DivisorClass(io::coords_from_json(parse(text), "class"));
}

std::vector<DivisorClass> classes_from_json(const char* text) {
  const json j = parse(text);
  if (!j.is_array()) fail(ErrorKind::Schema, "expected an array of classes");
  std::vector<DivisorClass> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.emplace_back(io::coords_from_json(j[i], "classes[" + std::to_string(i) + "]"));
  return out;
}

int64_t to_i64(const Integer& x) {
  if (!x.fits_slong_p()) fail(ErrorKind::Domain, "value " + x.get_str() + " does not fit in 64 bits");
  return x.get_si();
}

} // namespace

extern "C" {

const char* rs_version(void) { return "1.0.0"; }

const char* rs_status_name(rs_status status) {
  switch (status) {
    case RS_OK: return "ok";
    case RS_ERR_DIMENSION: return "dimension";
    case RS_ERR_DOMAIN: return "domain";
    case RS_ERR_INVARIANT: return "invariant";
    case RS_ERR_SPEC_INCONSISTENCY: return "spec_inconsistency";
    case RS_ERR_CATALOG_INCOMPLETE: return "catalog_incomplete";
    case RS_ERR_REFUSAL: return "refusal";
    case RS_ERR_SCHEMA: return "schema";
    case RS_ERR_ARGUMENT: return "argument";
    case RS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* rs_last_error(void) { return last_error.c_str(); }

void rs_string_free(char* s) { std::free(s); }

rs_status rs_spec_from_json(const char* text, rs_spec** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = nullptr;
    *out = new rs_spec{io::parse_spec(text)};
  });
}

rs_status rs_spec_builtin(const char* kind, int n, long param, long catalog_degree, rs_spec** out) {
  return guarded([&] {
    need(kind, "kind");
    need(out, "out");
    *out = nullptr;
    *out = new rs_spec{builtin_spec(kind, n, param, catalog_degree)};
  });
}

void rs_spec_free(rs_spec* spec) { delete spec; }

size_t rs_spec_rank(const rs_spec* spec) { return spec ? spec->spec.rank() : 0; }

rs_status rs_spec_to_json(const rs_spec* spec, char** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = dup_string(io::spec_to_json(spec->spec).dump());
  });
}

rs_status rs_spec_violations(const rs_spec* spec, char** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = dup_string(io::violations_to_json(validate_spec(spec->spec)).dump());
  });
}

rs_status rs_parse_queries(const char* text, char** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    json arr = json::array();
    for (const auto& q : io::parse_queries(text)) {
      json coords = json::array();
      for (const auto& x : q.coords) coords.push_back(io::integer_to_json(x));
      arr.push_back({{"label", q.label}, {"coords", coords}});
    }
    *out = dup_string(arr.dump());
  });
}

rs_status rs_analyze(const rs_spec* spec, const char* coords_json, char** out) {
  return guarded([&] {
    need(spec, "spec");
    need(coords_json, "coords_json");
    need(out, "out");
    const auto report = analyze_class(spec->spec, class_from_json(coords_json));
    *out = dup_string(io::report_to_json(spec->spec, report).dump());
  });
}

rs_status rs_analyze_i64(const rs_spec* spec, const int64_t* coords, size_t len, char** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    const auto report = analyze_class(spec->spec, class_from(coords, len));
    *out = dup_string(io::report_to_json(spec->spec, report).dump());
  });
}

rs_status rs_is_effective(const rs_spec* spec, const int64_t* coords, size_t len, int* out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = is_effective(spec->spec, class_from(coords, len)) ? 1 : 0;
  });
}

rs_status rs_is_nef(const rs_spec* spec, const int64_t* coords, size_t len, int* out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = is_nef(spec->spec, class_from(coords, len)) ? 1 : 0;
  });
}

rs_status rs_h_all(const rs_spec* spec, const int64_t* coords, size_t len, int64_t out[3]) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    const auto h = h_all(spec->spec, class_from(coords, len));
    const int64_t values[3] = {to_i64(h.h0), to_i64(h.h1), to_i64(h.h2)};
    std::memcpy(out, values, sizeof values);
  });
}

rs_status rs_enumerate(const rs_spec* spec, const char* kind, long degree_bound, char** out) {
  return guarded([&] {
    need(spec, "spec");
    need(kind, "kind");
    need(out, "out");
    const std::string k = kind;
    Enumeration e;
    if (k == "exceptional") e = enumerate_exceptional_classes(spec->spec, degree_bound);
    else if (k == "roots") e = enumerate_root_classes(spec->spec, degree_bound);
    else throw BadArgument{"kind must be 'exceptional' or 'roots'"};
    *out = dup_string(io::enumeration_to_json(e).dump());
  });
}

rs_status rs_oracle_solve(size_t rank, int64_t self_int, int64_t anti_degree, int64_t lo, int64_t hi, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto found =
        oracle::brute_solve_quadratic(rank, self_int, anti_degree, oracle::SearchBox::uniform(rank, lo, hi));
    json classes = json::array();
    for (const auto& c : found) classes.push_back(io::class_to_json(c));
    *out = dup_string(json{{"count", found.size()}, {"classes", classes}}.dump());
  });
}

rs_status rs_oracle_member(const char* generators_json, const char* class_json, int64_t coeff_bound, int* out) {
  return guarded([&] {
    need(generators_json, "generators_json");
    need(class_json, "class_json");
    need(out, "out");
    const auto gens = classes_from_json(generators_json);
    *out = oracle::brute_monoid_membership(gens, class_from_json(class_json), coeff_bound) ? 1 : 0;
  });
}

rs_status rs_oracle_chain(const char* classes_json, const char* pencil_json, int* out) {
  return guarded([&] {
    need(classes_json, "classes_json");
    need(out, "out");
    const auto classes = classes_from_json(classes_json);
    if (pencil_json) {
      const auto pencil = class_from_json(pencil_json);
      *out = oracle::brute_check_chain(classes, &pencil) ? 1 : 0;
    } else {
      *out = oracle::brute_check_chain(classes) ? 1 : 0;
    }
  });
}

} // extern "C"
