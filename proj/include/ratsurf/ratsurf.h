/* C interface to the ratsurf engine.
 *
 * Handles are opaque. Every fallible call returns an rs_status; on failure
 * rs_last_error() describes the problem until the next call on the same
 * thread. Strings returned through char** are heap-allocated JSON and must
 * be released with rs_string_free. Integers inside JSON are numbers when
 * they fit in 64 bits and decimal strings otherwise.
 */
#ifndef RATSURF_H
#define RATSURF_H

#include <stddef.h>
#include <stdint.h>

#if defined(RATSURF_BUILDING)
#define RS_API __attribute__((visibility("default")))
#else
#define RS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rs_status {
  RS_OK = 0,
  RS_ERR_DIMENSION = 1,
  RS_ERR_DOMAIN = 2,
  RS_ERR_INVARIANT = 3,
  RS_ERR_SPEC_INCONSISTENCY = 4,
  RS_ERR_CATALOG_INCOMPLETE = 5,
  RS_ERR_REFUSAL = 6,
  RS_ERR_SCHEMA = 7,
  RS_ERR_ARGUMENT = 8, /* null pointer or bad enum string */
  RS_ERR_INTERNAL = 9
} rs_status;

typedef struct rs_spec rs_spec;

RS_API const char* rs_version(void);
RS_API const char* rs_status_name(rs_status status);
RS_API const char* rs_last_error(void);
RS_API void rs_string_free(char* s);

/* Parses a spec file. Only the schema is checked here. */
RS_API rs_status rs_spec_from_json(const char* text, rs_spec** out);
/* kind: "delpezzo", "cubic_pencil" or "torsion". param is tau for torsion. */
RS_API rs_status rs_spec_builtin(const char* kind, int n, long param, long catalog_degree, rs_spec** out);
RS_API void rs_spec_free(rs_spec* spec);
RS_API size_t rs_spec_rank(const rs_spec* spec);
RS_API rs_status rs_spec_to_json(const rs_spec* spec, char** out);
/* JSON array of {field, rule}; empty when the surface data is consistent. */
RS_API rs_status rs_spec_violations(const rs_spec* spec, char** out);

/* Normalizes a query file to a JSON array of {label, coords}. */
RS_API rs_status rs_parse_queries(const char* text, char** out);

/* Full report for one class given as a JSON integer array. */
RS_API rs_status rs_analyze(const rs_spec* spec, const char* coords_json, char** out);
RS_API rs_status rs_analyze_i64(const rs_spec* spec, const int64_t* coords, size_t len, char** out);

RS_API rs_status rs_is_effective(const rs_spec* spec, const int64_t* coords, size_t len, int* out);
RS_API rs_status rs_is_nef(const rs_spec* spec, const int64_t* coords, size_t len, int* out);
/* out receives h0, h1, h2; RS_ERR_DOMAIN if a value does not fit. */
RS_API rs_status rs_h_all(const rs_spec* spec, const int64_t* coords, size_t len, int64_t out[3]);

/* kind: "exceptional" or "roots". JSON {count, saturated, max_degree, classes}. */
RS_API rs_status rs_enumerate(const rs_spec* spec, const char* kind, long degree_bound, char** out);

/* Brute-force checkers over machine integers. */
RS_API rs_status rs_oracle_solve(size_t rank, int64_t self_int, int64_t anti_degree, int64_t lo, int64_t hi,
                                 char** out);
RS_API rs_status rs_oracle_member(const char* generators_json, const char* class_json, int64_t coeff_bound,
                                  int* out);
/* pencil_json may be NULL. */
RS_API rs_status rs_oracle_chain(const char* classes_json, const char* pencil_json, int* out);

#ifdef __cplusplus
}
#endif

#endif /* RATSURF_H */
