#ifndef RATSURF_CONE_HPP
#define RATSURF_CONE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ratsurf/lattice.hpp"
#include "ratsurf/surface.hpp"

namespace ratsurf {

/// F = nef_part + sum of catalog curves. Indices refer to spec.curves.
struct Decomposition {
  DivisorClass nef_part;
  /// (curve index, multiplicity), ascending by index.
  std::vector<std::pair<std::size_t, Integer>> negative_part;
  /// Curve index subtracted at each step, in order.
  std::vector<std::size_t> trace;

  DivisorClass negative_class(const SurfaceSpec& spec) const;
};

/// F.c >= 0 for every catalog curve, F^2 >= 0 and F.ample >= 0.
bool is_nef(const SurfaceSpec& spec, const DivisorClass& f);

/// Peels off catalog curves met negatively (smallest class first) until the
/// residue meets every curve nonnegatively. Returns nullopt when F is not
/// effective relative to the catalog.
std::optional<Decomposition> reduce_to_nef(const SurfaceSpec& spec, const DivisorClass& f);

bool is_effective(const SurfaceSpec& spec, const DivisorClass& f);

struct PencilFactor {
  Integer multiplicity;
  DivisorClass pencil;
};

/// For nef F != 0 with F^2 = 0 and F.K = 0: F = r C with r maximal such that
/// C is effective and restricts trivially to D.
PencilFactor primitive_pencil_factor(const SurfaceSpec& spec, const DivisorClass& f);

} // namespace ratsurf

#endif // RATSURF_CONE_HPP
