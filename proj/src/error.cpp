#include "ratsurf/error.hpp"

namespace ratsurf {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Invariant: return "invariant";
    case ErrorKind::SpecInconsistency: return "spec_inconsistency";
    case ErrorKind::CatalogIncomplete: return "catalog_incomplete";
    case ErrorKind::Refusal: return "refusal";
    case ErrorKind::Schema: return "schema";
  }
  return "unknown";
}

} // namespace ratsurf
