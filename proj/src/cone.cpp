#include "ratsurf/cone.hpp"

#include <algorithm>
#include <map>

#include "ratsurf/error.hpp"

namespace ratsurf {

namespace {

void check_rank(const SurfaceSpec& spec, const DivisorClass& f) {
  if (f.rank() != spec.rank())
    fail(ErrorKind::Dimension, "class " + f.to_string() + " has length " + std::to_string(f.rank()) +
                                   ", spec needs " + std::to_string(spec.rank()));
}

// Index of the smallest catalog curve met negatively by F.
std::optional<std::size_t> first_negative_curve(const SurfaceSpec& spec, const DivisorClass& f) {
  for (std::size_t i = 0; i < spec.curves.size(); ++i)
    if (intersect(f, spec.curves[i].cls) < 0) return i;
  return std::nullopt;
}

std::vector<Integer> divisors_descending(const Integer& g) {
  std::vector<Integer> out;
  Integer d = 1;
  for (; d * d <= g; ++d) {
    if (g % d == 0) {
      out.push_back(d);
      if (d * d != g) out.push_back(g / d);
    }
  }
  std::sort(out.begin(), out.end(), [](const Integer& a, const Integer& b) { return a > b; });
  return out;
}

} // namespace

DivisorClass Decomposition::negative_class(const SurfaceSpec& spec) const {
  DivisorClass out = DivisorClass::zero(spec.rank());
  for (const auto& [idx, mult] : negative_part) out += mult * spec.curves.at(idx).cls;
  return out;
}

bool is_nef(const SurfaceSpec& spec, const DivisorClass& f) {
  check_rank(spec, f);
  if (first_negative_curve(spec, f)) return false;
  return intersect(f, f) >= 0 && intersect(f, spec.ample) >= 0;
}

std::optional<Decomposition> reduce_to_nef(const SurfaceSpec& spec, const DivisorClass& f) {
  check_rank(spec, f);
  Decomposition out;
  DivisorClass current = f;
  std::map<std::size_t, Integer> counts;
  // ample degree drops by at least one per step, so this loop is finite
  while (auto idx = first_negative_curve(spec, current)) {
    current -= spec.curves[*idx].cls;
    out.trace.push_back(*idx);
    counts[*idx] += 1;
    if (intersect(current, spec.ample) < 0) return std::nullopt;
  }
  if (intersect(current, current) < 0 || intersect(current, spec.ample) < 0) return std::nullopt;
  out.nef_part = std::move(current);
  out.negative_part.assign(counts.begin(), counts.end());
  return out;
}

bool is_effective(const SurfaceSpec& spec, const DivisorClass& f) {
  check_rank(spec, f);
  const auto k = spec.canonical();
  if (f[0] >= 0 && intersect(f, f) - intersect(f, k) >= 0) return true;
  return reduce_to_nef(spec, f).has_value();
}

PencilFactor primitive_pencil_factor(const SurfaceSpec& spec, const DivisorClass& f) {
  check_rank(spec, f);
  if (f.is_zero() || intersect(f, f) != 0 || intersect(f, spec.canonical()) != 0 || !is_nef(spec, f))
    fail(ErrorKind::Domain, "pencil factor needs nef F != 0 with F^2 = 0 and F.K = 0: " + f.to_string());
  for (const auto& r : divisors_descending(f.content())) {
    DivisorClass c = f.divided_by(r);
    if (is_effective(spec, c) && lambda_contains(spec, c)) return {r, std::move(c)};
  }
  fail(ErrorKind::SpecInconsistency, "no effective divisor of " + f.to_string() + " restricts trivially to D");
}

} // namespace ratsurf
