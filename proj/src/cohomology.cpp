#include "ratsurf/cohomology.hpp"

#include <algorithm>
#include <map>

#include "ratsurf/error.hpp"

namespace ratsurf {

const char* to_string(CaseLabel c) noexcept {
  switch (c) {
    case CaseLabel::A: return "A";
    case CaseLabel::B: return "B";
    case CaseLabel::C: return "C";
    case CaseLabel::D: return "D";
  }
  return "?";
}

const char* to_string(BasePoint b) noexcept {
  switch (b) {
    case BasePoint::None: return "NONE";
    case BasePoint::UniqueOnD: return "UNIQUE_ON_D";
    case BasePoint::ContainedInFixedPart: return "CONTAINED_IN_FIXED_PART";
  }
  return "?";
}

namespace {

void require_nef(const SurfaceSpec& spec, const DivisorClass& f) {
  if (f.rank() != spec.rank()) fail(ErrorKind::Dimension, "class length does not match the surface");
  if (!is_nef(spec, f)) fail(ErrorKind::Domain, "class is not nef: " + f.to_string());
}

// h^0 of the nef part of an effective class.
Integer h0_from_decomposition(const SurfaceSpec& spec, const Decomposition& dec) {
  return chi_riemann_roch(dec.nef_part) + nef_cohomology(spec, dec.nef_part).h1;
}

Integer h0_of(const SurfaceSpec& spec, const DivisorClass& f) {
  if (auto dec = reduce_to_nef(spec, f)) return h0_from_decomposition(spec, *dec);
  return 0;
}

// Coefficient s with F = s * (-K), or nullopt if F is not such a multiple.
std::optional<Integer> anticanonical_multiple(const DivisorClass& f, const DivisorClass& canonical) {
  std::size_t pivot = canonical.rank();
  for (std::size_t i = 0; i < canonical.rank(); ++i)
    if (canonical[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == canonical.rank()) return std::nullopt;
  const Integer anti = -canonical[pivot];
  if (f[pivot] % anti != 0) return std::nullopt;
  const Integer s = f[pivot] / anti;
  if (f != s * (-canonical)) return std::nullopt;
  return s;
}

} // namespace

NefCohomology nef_cohomology(const SurfaceSpec& spec, const DivisorClass& f) {
  require_nef(spec, f);
  const auto k = spec.canonical();
  const Integer anti_degree = -intersect(k, f);
  NefCohomology out;
  if (anti_degree >= 2) {
    out.case_label = CaseLabel::A;
  } else if (anti_degree == 1) {
    out.case_label = CaseLabel::B;
  } else if (anti_degree == 0) {
    if (lambda_contains(spec, f)) {
      out.case_label = CaseLabel::C;
      if (f.is_zero()) out.h1 = 0;
      else if (intersect(f, f) > 0) out.h1 = 1;
      else out.h1 = primitive_pencil_factor(spec, f).multiplicity;
    } else {
      out.case_label = CaseLabel::D;
      if (spec.h0_anticanonical > 1)
        fail(ErrorKind::SpecInconsistency,
             "class " + f.to_string() + " needs a rigid anticanonical divisor but h0(-K) > 1");
      out.dinN = dinN_reduce(spec, f);
      out.h1 = out.dinN->sigma;
    }
  } else {
    fail(ErrorKind::SpecInconsistency, "nef class meets the effective class -K negatively: " + f.to_string());
  }
  return out;
}

DinNResult dinN_reduce(const SurfaceSpec& spec, const DivisorClass& f) {
  require_nef(spec, f);
  const auto k = spec.canonical();
  if (intersect(f, k) != 0 || lambda_contains(spec, f))
    fail(ErrorKind::Domain, "dinN reduction needs F.K = 0 and F|D nontrivial: " + f.to_string());

  LatticeContext ctx(spec.rank());
  std::vector<DivisorClass> images;
  images.reserve(spec.curves.size());
  for (const auto& c : spec.curves) images.push_back(c.cls);

  Integer bound = intersect(f, spec.ample) + Integer(static_cast<long>(spec.rank())) + 1;
  Integer steps = 0;
  DivisorClass current = f;
  DinNResult out;
  for (;;) {
    // contract exceptional curves of the current surface orthogonal to F
    for (bool again = true; again;) {
      again = false;
      for (const auto& img : images) {
        if (ctx.is_exceptional(img) && intersect(current, img) == 0) {
          const DivisorClass e = img;
          ctx = ctx.contract(e);
          std::vector<DivisorClass> next;
          next.reserve(images.size());
          for (const auto& other : images) {
            DivisorClass p = other + intersect(other, e) * e;
            if (!p.is_zero()) next.push_back(std::move(p));
          }
          images = std::move(next);
          again = true;
          break;
        }
      }
    }
    current += ctx.canonical();
    out.r += 1;
    if (++steps > bound)
      fail(ErrorKind::CatalogIncomplete, "anticanonical reduction of " + f.to_string() + " did not terminate");
    if (intersect(current, ctx.canonical()) != 0 || current.is_zero()) break;
    if (intersect(current, k) != 0)
      fail(ErrorKind::Invariant, "reduced class left K_X-perp: " + current.to_string());
    if (satisfies_rows(spec.restriction, current)) break;
  }

  out.contracted = ctx.contracted();
  out.terminal_k_sq = intersect(ctx.canonical(), ctx.canonical());
  if (out.terminal_k_sq < 0) {
    if (out.r != 1)
      fail(ErrorKind::Invariant, "terminal K^2 < 0 reached after more than one step");
    out.s = 0;
    out.sigma = 0;
    out.tau = tau(spec, ctx.canonical());
    return out;
  }
  if (out.terminal_k_sq > 0)
    fail(ErrorKind::SpecInconsistency, "anticanonical reduction reached K^2 > 0");

  auto s = anticanonical_multiple(current, ctx.canonical());
  if (!s || *s < 0)
    fail(ErrorKind::SpecInconsistency,
         "reduced class " + current.to_string() + " is not a nonnegative multiple of -K_Y");
  out.s = *s;
  out.tau = tau(spec, ctx.canonical());
  if (out.s == 0) {
    out.sigma = 0;
    return out;
  }
  if (!out.tau || out.s % *out.tau != 0 || out.r >= *out.tau)
    fail(ErrorKind::SpecInconsistency, "restriction data incompatible with s = " + out.s.get_str() +
                                           ", r = " + out.r.get_str());
  out.sigma = out.s / *out.tau;
  return out;
}

Cohomology h_all(const SurfaceSpec& spec, const DivisorClass& f) {
  if (f.rank() != spec.rank()) fail(ErrorKind::Dimension, "class length does not match the surface");
  const auto k = spec.canonical();
  const Integer chi = chi_riemann_roch(f);
  Cohomology out;
  if (auto dec = reduce_to_nef(spec, f)) {
    out.h0 = h0_from_decomposition(spec, *dec);
    out.h2 = 0;
    out.h1 = out.h0 - chi;
  } else {
    if (is_effective(spec, f))
      fail(ErrorKind::SpecInconsistency, "fast effectivity test disagrees with reduction for " + f.to_string());
    out.h0 = 0;
    out.h2 = h0_of(spec, k - f);
    out.h1 = out.h2 - chi;
  }
  if (out.h1 < 0)
    fail(ErrorKind::SpecInconsistency, "negative h1 forced for " + f.to_string() + "; catalog incomplete?");
  return out;
}

std::vector<std::pair<DivisorClass, Integer>> fixed_components(const SurfaceSpec& spec, const DivisorClass& f) {
  if (f.rank() != spec.rank()) fail(ErrorKind::Dimension, "class length does not match the surface");
  auto dec = reduce_to_nef(spec, f);
  if (!dec) fail(ErrorKind::Domain, "fixed components need an effective class: " + f.to_string());

  std::map<DivisorClass, Integer> parts;
  for (const auto& [idx, mult] : dec->negative_part) parts[spec.curves[idx].cls] += mult;

  const DivisorClass& nef = dec->nef_part;
  const auto nc = nef_cohomology(spec, nef);
  if (nc.case_label != CaseLabel::A) {
    std::vector<DivisorClass> candidates;
    candidates.reserve(spec.curves.size() + 1);
    for (const auto& c : spec.curves) candidates.push_back(c.cls);
    const DivisorClass anti = -spec.canonical();
    if (spec.h0_anticanonical == 1 &&
        std::find(candidates.begin(), candidates.end(), anti) == candidates.end())
      candidates.push_back(anti);

    std::map<DivisorClass, Integer> memo;
    auto h0_cached = [&](const DivisorClass& g) -> const Integer& {
      auto it = memo.find(g);
      if (it == memo.end()) it = memo.emplace(g, h0_of(spec, g)).first;
      return it->second;
    };

    const Integer target = chi_riemann_roch(nef) + nc.h1;
    DivisorClass current = nef;
    for (bool found = true; found;) {
      found = false;
      // a fixed component c leaves current - c effective, so any nef class
      // (E0, the ample witness, F itself) meets it at most as much as current
      const Integer nef_bound = intersect(nef, current);
      const Integer ample_bound = intersect(spec.ample, current);
      for (const auto& c : candidates) {
        if (c[0] > current[0] || intersect(spec.ample, c) > ample_bound || intersect(nef, c) > nef_bound) continue;
        const DivisorClass rest = current - c;
        if (h0_cached(rest) == target) {
          parts[c] += 1;
          current = rest;
          found = true;
          break;
        }
      }
    }
  }
  return {parts.begin(), parts.end()};
}

DivisorClass fixed_part_class(const SurfaceSpec& spec, const std::vector<std::pair<DivisorClass, Integer>>& parts) {
  DivisorClass out = DivisorClass::zero(spec.rank());
  for (const auto& [cls, mult] : parts) out += mult * cls;
  return out;
}

BasePoint base_point_report(const SurfaceSpec& spec, const DivisorClass& f) {
  require_nef(spec, f);
  if (!fixed_components(spec, f).empty())
    fail(ErrorKind::Domain, "class has fixed components; use analyze_nef: " + f.to_string());
  return -intersect(spec.canonical(), f) == 1 ? BasePoint::UniqueOnD : BasePoint::None;
}

ChainReport chain_report(const SurfaceSpec& spec, const DivisorClass& f,
                         const std::vector<std::pair<DivisorClass, Integer>>& fixed) {
  ChainReport out;
  const auto k = spec.canonical();
  std::vector<DivisorClass> pool;
  for (const auto& [cls, mult] : fixed) {
    if (mult != 1) return out;  // the fixed part of a case-B class is reduced
    pool.push_back(cls);
  }
  if (pool.empty()) return out;

  // N_t is the unique (-1)-curve; walk back through curves meeting the previous one once
  auto tail = std::find_if(pool.begin(), pool.end(), [&](const DivisorClass& c) {
    return intersect(c, c) == -1 && intersect(c, k) == -1;
  });
  if (tail == pool.end()) return out;
  std::vector<DivisorClass> reversed{*tail};
  pool.erase(tail);
  while (!pool.empty()) {
    auto next = std::find_if(pool.begin(), pool.end(),
                             [&](const DivisorClass& c) { return intersect(c, reversed.back()) == 1; });
    if (next == pool.end()) return out;
    reversed.push_back(*next);
    pool.erase(next);
  }
  out.chain.assign(reversed.rbegin(), reversed.rend());

  const DivisorClass free_part = f - fixed_part_class(spec, fixed);
  if (free_part.is_zero()) return out;
  try {
    if (intersect(free_part, free_part) > 0) {
      out.multiplicity = 1;
      out.pencil = free_part;
    } else {
      auto pf = primitive_pencil_factor(spec, free_part);
      out.multiplicity = pf.multiplicity;
      out.pencil = pf.pencil;
    }
  } catch (const Error&) {
    return out;
  }

  const auto& n = out.chain;
  const std::size_t t = n.size();
  bool ok = intersect(out.pencil, k) == 0;
  if (out.multiplicity > 1 && intersect(out.pencil, out.pencil) != 0) ok = false;
  for (std::size_t i = 0; i < t && ok; ++i) {
    const Integer sq = intersect(n[i], n[i]);
    ok = (i + 1 < t) ? sq == -2 : sq == -1;
    for (std::size_t j = i + 1; j < t && ok; ++j) ok = intersect(n[i], n[j]) == (j == i + 1 ? 1 : 0);
    if (ok) ok = intersect(out.pencil, n[i]) == (i == 0 ? 1 : 0);
  }
  out.valid = ok;
  return out;
}

AnalysisReport analyze_nef(const SurfaceSpec& spec, const DivisorClass& f) {
  const auto nc = nef_cohomology(spec, f);
  AnalysisReport out;
  out.case_label = nc.case_label;
  out.h1 = nc.h1;
  out.h0 = chi_riemann_roch(f) + nc.h1;
  out.h2 = 0;
  out.dinN = nc.dinN;
  out.components_of_general_section_of_f_minus_k = 1 + nc.h1;

  if (nc.case_label != CaseLabel::A) out.fixed_components = fixed_components(spec, f);
  out.fixed_part = fixed_part_class(spec, out.fixed_components);

  if (out.fixed_components.empty()) {
    out.base_point = -intersect(spec.canonical(), f) == 1 ? BasePoint::UniqueOnD : BasePoint::None;
  } else {
    out.base_point = BasePoint::ContainedInFixedPart;
  }

  const auto k = spec.canonical();
  switch (nc.case_label) {
    case CaseLabel::A:
      break;
    case CaseLabel::B:
      if (!out.fixed_components.empty()) out.chain = chain_report(spec, f, out.fixed_components);
      break;
    case CaseLabel::C:
      if (!out.fixed_components.empty()) {
        const auto& [cls, mult] = out.fixed_components.front();
        if (out.fixed_components.size() != 1 || mult != 1 || intersect(cls, cls) != -2)
          fail(ErrorKind::SpecInconsistency,
               "fixed part of a class with trivial restriction must be one (-2)-curve: " + f.to_string());
      }
      break;
    case CaseLabel::D:
      if (!is_effective(spec, out.fixed_part + k))
        fail(ErrorKind::SpecInconsistency, "fixed part does not contain an anticanonical divisor: " + f.to_string());
      break;
  }
  return out;
}

Integer components_of_general_section(const SurfaceSpec& spec, const DivisorClass& f) {
  return 1 + nef_cohomology(spec, f).h1;
}

} // namespace ratsurf
