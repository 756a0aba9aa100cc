#include "ratsurf/report.hpp"

#include <map>

#include "ratsurf/error.hpp"

namespace ratsurf {

ClassReport analyze_class(const SurfaceSpec& spec, const DivisorClass& f) {
  if (f.rank() != spec.rank())
    fail(ErrorKind::Dimension, "class has length " + std::to_string(f.rank()) + ", spec needs " +
                                   std::to_string(spec.rank()));
  ClassReport out;
  out.cls = f;
  out.effective = is_effective(spec, f);
  out.nef = is_nef(spec, f);
  out.decomposition = reduce_to_nef(spec, f);
  out.h = h_all(spec, f);
  out.fixed_part = DivisorClass::zero(spec.rank());
  if (!out.decomposition) return out;

  out.nef_analysis = analyze_nef(spec, out.decomposition->nef_part);
  std::map<DivisorClass, Integer> parts;
  for (const auto& [idx, mult] : out.decomposition->negative_part) parts[spec.curves[idx].cls] += mult;
  for (const auto& [cls, mult] : out.nef_analysis->fixed_components) parts[cls] += mult;
  out.fixed_components.assign(parts.begin(), parts.end());
  out.fixed_part = fixed_part_class(spec, out.fixed_components);
  out.base_point = out.fixed_components.empty() ? out.nef_analysis->base_point : BasePoint::ContainedInFixedPart;
  return out;
}

} // namespace ratsurf
