#ifndef RATSURF_SURFACE_HPP
#define RATSURF_SURFACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ratsurf/lattice.hpp"

namespace ratsurf {

/// One linear condition of the restriction-to-D kernel. A class F satisfies
/// the row when sum_i coeffs[i] * F[i] is 0 (modulus 0) or divisible by the
/// modulus. The sum is the plain coordinate dot product, not the
/// intersection form.
struct RestrictionRow {
  std::vector<Integer> coeffs;
  Integer modulus = 0;
};

/// Integer model of the kernel of Pic(X) -> Pic(D), consulted only on K-perp.
struct RestrictionMap {
  std::vector<RestrictionRow> rows;
};

struct NegativeCurve {
  DivisorClass cls;
  bool is_anticanonical_fixed_component = false;
};

/// Everything the engine knows about one anticanonical surface. The curve
/// catalog is ground truth; every answer is relative to it.
struct SurfaceSpec {
  int n = 0;
  std::vector<NegativeCurve> curves;  // kept sorted by class
  DivisorClass ample;
  RestrictionMap restriction;
  Integer h0_anticanonical = 1;

  std::size_t rank() const noexcept { return static_cast<std::size_t>(n) + 1; }
  DivisorClass canonical() const { return canonical_class(rank()); }
  /// Sorts the catalog; call after editing `curves` by hand.
  void normalize();
};

struct Violation {
  std::string field;
  std::string rule;
};

std::vector<Violation> validate_spec(const SurfaceSpec& spec);
/// Throws SpecInconsistency listing the violations, if any.
void require_valid(const SurfaceSpec& spec);

/// Membership in the kernel Lambda. F.K must be 0.
bool lambda_contains(const SurfaceSpec& spec, const DivisorClass& f);

/// Row test without the K-perp precondition; used for pulled-back canonical
/// multiples after contraction, which lie in K_X-perp exactly when
/// K_Y^2 = 0.
bool satisfies_rows(const RestrictionMap& map, const DivisorClass& f);

/// Least t > 0 with -t*canonical in Lambda, or nullopt when none exists.
std::optional<Integer> tau(const SurfaceSpec& spec);
std::optional<Integer> tau(const SurfaceSpec& spec, const DivisorClass& canonical);

struct Enumeration {
  std::vector<DivisorClass> classes;
  /// True when the bound provably reaches every solution (K^2 > 0 only).
  bool saturated = false;
  /// Largest degree any solution can have, when K^2 > 0.
  std::optional<long> max_degree;
};

/// Classes with F^2 = F.K = -1 and 0 <= F.E0 <= degree_bound, sorted.
Enumeration enumerate_exceptional_classes(const SurfaceSpec& spec, long degree_bound);
/// Classes with F^2 = -2, F.K = 0 in Lambda: positive degree up to the bound,
/// plus E_i - E_j with i < j.
Enumeration enumerate_root_classes(const SurfaceSpec& spec, long degree_bound);

/// Same enumerations without a spec (no Lambda filter for roots).
Enumeration enumerate_exceptional_classes(int n, long degree_bound);
Enumeration enumerate_root_classes(int n, long degree_bound);

/// Built-in fixtures:
///   "delpezzo"      0 <= n <= 8, general points
///   "cubic_pencil"  n = 9, base points of a general cubic pencil (tau = 1)
///   "torsion"       n = 9, Halphen-type surface with tau = `param` >= 2
/// For n = 9 the exceptional catalog is infinite; `catalog_degree` bounds it.
SurfaceSpec builtin_spec(const std::string& kind, int n, long param = 0, long catalog_degree = 6);

} // namespace ratsurf

#endif // RATSURF_SURFACE_HPP
