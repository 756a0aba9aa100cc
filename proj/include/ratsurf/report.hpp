#ifndef RATSURF_REPORT_HPP
#define RATSURF_REPORT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ratsurf/cohomology.hpp"
#include "ratsurf/cone.hpp"
#include "ratsurf/surface.hpp"

namespace ratsurf {

/// Everything the engine says about one class, as printed by `analyze`.
struct ClassReport {
  DivisorClass cls;
  bool effective = false;
  bool nef = false;
  std::optional<Decomposition> decomposition;
  Cohomology h;
  /// Case analysis of the nef part; empty when F is not effective.
  std::optional<AnalysisReport> nef_analysis;
  /// Fixed components of F itself, negative part included.
  std::vector<std::pair<DivisorClass, Integer>> fixed_components;
  DivisorClass fixed_part;
  std::optional<BasePoint> base_point;
};

ClassReport analyze_class(const SurfaceSpec& spec, const DivisorClass& f);

} // namespace ratsurf

#endif // RATSURF_REPORT_HPP
