#include "ratsurf/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

#include "ratsurf/cone.hpp"
#include "ratsurf/error.hpp"

namespace ratsurf {

void SurfaceSpec::normalize() {
  std::sort(curves.begin(), curves.end(),
            [](const NegativeCurve& a, const NegativeCurve& b) { return a.cls < b.cls; });
}

namespace {

Integer dot(const std::vector<Integer>& coeffs, const DivisorClass& f) {
  Integer acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * f[i];
  return acc;
}

std::string curve_field(std::size_t i) { return "curves[" + std::to_string(i) + "]"; }

} // namespace

std::vector<Violation> validate_spec(const SurfaceSpec& spec) {
  std::vector<Violation> out;
  if (spec.n < 0) {
    out.push_back({"n", "must be >= 0"});
    return out;
  }
  const std::size_t rank = spec.rank();
  if (spec.h0_anticanonical < 1) out.push_back({"h0_anticanonical", "must be a positive integer"});

  bool shape_ok = true;
  if (spec.ample.rank() != rank) {
    out.push_back({"ample", "length must be n+1"});
    shape_ok = false;
  }
  for (std::size_t i = 0; i < spec.curves.size(); ++i) {
    if (spec.curves[i].cls.rank() != rank) {
      out.push_back({curve_field(i), "length must be n+1"});
      shape_ok = false;
    }
  }
  for (std::size_t i = 0; i < spec.restriction.rows.size(); ++i) {
    const auto& row = spec.restriction.rows[i];
    const std::string field = "restriction[" + std::to_string(i) + "]";
    if (row.coeffs.size() != rank) {
      out.push_back({field, "length must be n+1"});
      shape_ok = false;
    }
    if (row.modulus < 0) out.push_back({field, "modulus must be >= 0"});
  }
  if (!shape_ok) return out;

  const auto k = spec.canonical();
  std::set<DivisorClass> seen;
  for (std::size_t i = 0; i < spec.curves.size(); ++i) {
    const auto& c = spec.curves[i];
    const std::string field = curve_field(i);
    if (!seen.insert(c.cls).second) out.push_back({field, "duplicate catalog class"});
    const Integer sq = intersect(c.cls, c.cls);
    const Integer kdot = intersect(c.cls, k);
    if (sq >= 0) {
      out.push_back({field, "self-intersection must be negative"});
      continue;
    }
    if (((sq + kdot) % 2) != 0 || adjunction_genus(c.cls) < 0)
      out.push_back({field, "arithmetic genus must be >= 0"});
    if (!c.is_anticanonical_fixed_component) {
      const bool exceptional = sq == -1 && kdot == -1;
      const bool root = sq == -2 && kdot == 0;
      if (!exceptional && !root)
        out.push_back({field, "a curve that is not a fixed component of |D| must have "
                              "C^2 = C.K = -1 or C^2 = -2, C.K = 0"});
      if (root && !lambda_contains(spec, c.cls))
        out.push_back({field, "a (-2)-curve disjoint from D must lie in the restriction kernel"});
    }
  }

  if (intersect(spec.ample, spec.ample) <= 0) out.push_back({"ample", "ample^2 must be positive"});
  if (spec.ample[0] <= 0) out.push_back({"ample", "ample.E0 must be positive"});
  for (std::size_t i = 0; i < spec.curves.size(); ++i)
    if (intersect(spec.ample, spec.curves[i].cls) <= 0)
      out.push_back({"ample", "must meet " + curve_field(i) + " positively"});

  const Integer chi_anti = intersect(k, k) + 1;
  if (spec.h0_anticanonical < chi_anti)
    out.push_back({"h0_anticanonical", "below chi(-K) = K^2 + 1"});

  if (out.empty() && !is_effective(spec, -k))
    out.push_back({"curves", "-K is not effective relative to the catalog"});
  return out;
}

void require_valid(const SurfaceSpec& spec) {
  const auto v = validate_spec(spec);
  if (v.empty()) return;
  std::ostringstream msg;
  msg << "invalid surface spec:";
  for (const auto& item : v) msg << ' ' << item.field << ": " << item.rule << ';';
  fail(ErrorKind::SpecInconsistency, msg.str());
}

bool satisfies_rows(const RestrictionMap& map, const DivisorClass& f) {
  for (const auto& row : map.rows) {
    if (row.coeffs.size() != f.rank()) fail(ErrorKind::Dimension, "restriction row length mismatch");
    const Integer v = dot(row.coeffs, f);
    if (row.modulus == 0) {
      if (v != 0) return false;
    } else if (!mpz_divisible_p(v.get_mpz_t(), row.modulus.get_mpz_t())) {
      return false;
    }
  }
  return true;
}

bool lambda_contains(const SurfaceSpec& spec, const DivisorClass& f) {
  if (f.rank() != spec.rank()) fail(ErrorKind::Dimension, "class length does not match the surface");
  if (intersect(f, spec.canonical()) != 0)
    fail(ErrorKind::Domain, "restriction kernel is only consulted for classes with F.K = 0");
  return satisfies_rows(spec.restriction, f);
}

std::optional<Integer> tau(const SurfaceSpec& spec, const DivisorClass& canonical) {
  const DivisorClass anti = -canonical;
  Integer result = 1;
  for (const auto& row : spec.restriction.rows) {
    const Integer v = dot(row.coeffs, anti);
    if (row.modulus == 0) {
      if (v != 0) return std::nullopt;
      continue;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), row.modulus.get_mpz_t(), v.get_mpz_t());
    const Integer order = row.modulus / g;
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), order.get_mpz_t());
  }
  return result;
}

std::optional<Integer> tau(const SurfaceSpec& spec) { return tau(spec, spec.canonical()); }

namespace {

// All m in Z^n with sum m = s and sum m^2 = q, lexicographic. Cauchy-Schwarz
// (s^2 <= k q over the k remaining coordinates) and parity prune the tree.
void solve_sum_and_squares(int n, long s, long q, std::vector<long>& prefix,
                           const std::function<void(const std::vector<long>&)>& emit) {
  const int k = n - static_cast<int>(prefix.size());
  if (k == 0) {
    if (s == 0 && q == 0) emit(prefix);
    return;
  }
  if (q < 0 || s * s > static_cast<long>(k) * q || ((s - q) % 2) != 0) return;
  const long b = static_cast<long>(std::sqrt(static_cast<double>(q)) + 1e-9);
  for (long x = -b; x <= b; ++x) {
    prefix.push_back(x);
    solve_sum_and_squares(n, s - x, q - x * x, prefix, emit);
    prefix.pop_back();
  }
}

// Largest d >= 0 satisfying the Cauchy-Schwarz necessary condition, or -1.
long cs_max_degree(int n, long square, long kdot) {
  // sum m = -kdot - 3d, sum m^2 = d^2 - square; need (sum m)^2 <= n * sum m^2
  long best = -1;
  for (long d = 0; d <= 64; ++d) {
    const long s = -kdot - 3 * d;
    const long q = d * d - square;
    if (s * s <= static_cast<long>(n) * q) best = d;
  }
  return best;
}

Enumeration enumerate_quadric(int n, long square, long kdot, long degree_bound,
                              const std::function<bool(const DivisorClass&)>& keep) {
  Enumeration out;
  long top = degree_bound;
  if (n < 9) {
    out.max_degree = cs_max_degree(n, square, kdot);
    if (degree_bound >= *out.max_degree) {
      out.saturated = true;
      top = *out.max_degree;
    }
  }
  std::vector<long> prefix;
  for (long d = 0; d <= top; ++d) {
    const long s = -kdot - 3 * d;
    const long q = d * d - square;
    solve_sum_and_squares(n, s, q, prefix, [&](const std::vector<long>& m) {
      std::vector<Integer> c;
      c.reserve(m.size() + 1);
      c.emplace_back(d);
      for (long x : m) c.emplace_back(x);
      DivisorClass cls(std::move(c));
      if (keep(cls)) out.classes.push_back(std::move(cls));
    });
  }
  return out;
}

bool is_negative_degree_zero_root(const DivisorClass& f) {
  // degree-0 roots are E_i - E_j; keep only i < j
  if (f[0] != 0) return false;
  for (std::size_t i = 1; i < f.rank(); ++i) {
    if (f[i] == 1) return false;
    if (f[i] == -1) return true;
  }
  return false;
}

} // namespace

Enumeration enumerate_exceptional_classes(int n, long degree_bound) {
  if (degree_bound < 0) fail(ErrorKind::Domain, "degree bound must be >= 0");
  return enumerate_quadric(n, -1, -1, degree_bound, [](const DivisorClass&) { return true; });
}

Enumeration enumerate_exceptional_classes(const SurfaceSpec& spec, long degree_bound) {
  return enumerate_exceptional_classes(spec.n, degree_bound);
}

Enumeration enumerate_root_classes(int n, long degree_bound) {
  if (degree_bound < 0) fail(ErrorKind::Domain, "degree bound must be >= 0");
  return enumerate_quadric(n, -2, 0, degree_bound,
                           [](const DivisorClass& f) { return !is_negative_degree_zero_root(f); });
}

Enumeration enumerate_root_classes(const SurfaceSpec& spec, long degree_bound) {
  if (degree_bound < 0) fail(ErrorKind::Domain, "degree bound must be >= 0");
  return enumerate_quadric(spec.n, -2, 0, degree_bound, [&](const DivisorClass& f) {
    return !is_negative_degree_zero_root(f) && lambda_contains(spec, f);
  });
}

namespace {

RestrictionRow unit_row(std::size_t rank, std::size_t i, long modulus = 0) {
  RestrictionRow row;
  row.coeffs.assign(rank, Integer(0));
  row.coeffs[i] = 1;
  row.modulus = modulus;
  return row;
}

// m_j - m_{j+1} = 0 for 1 <= j < 9: K-perp meets the kernel in Z K.
std::vector<RestrictionRow> equal_multiplicity_rows(std::size_t rank) {
  std::vector<RestrictionRow> rows;
  for (std::size_t j = 1; j + 1 < rank; ++j) {
    RestrictionRow row;
    row.coeffs.assign(rank, Integer(0));
    row.coeffs[j] = 1;
    row.coeffs[j + 1] = -1;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<NegativeCurve> exceptional_catalog(int n, long degree) {
  std::vector<NegativeCurve> curves;
  for (auto& c : enumerate_exceptional_classes(n, degree).classes) curves.push_back({std::move(c), false});
  return curves;
}

} // namespace

SurfaceSpec builtin_spec(const std::string& kind, int n, long param, long catalog_degree) {
  SurfaceSpec spec;
  spec.n = n;
  if (kind == "delpezzo") {
    if (n < 0 || n > 8) fail(ErrorKind::Domain, "delpezzo needs 0 <= n <= 8");
    spec.curves = exceptional_catalog(n, 64);
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i)
      spec.restriction.rows.push_back(unit_row(spec.rank(), i));
    spec.h0_anticanonical = 10 - n;
  } else if (kind == "cubic_pencil" || kind == "torsion") {
    if (n != 9) fail(ErrorKind::Domain, kind + " needs n = 9");
    if (catalog_degree < 0) fail(ErrorKind::Domain, "catalog degree must be >= 0");
    spec.curves = exceptional_catalog(n, catalog_degree);
    spec.restriction.rows = equal_multiplicity_rows(spec.rank());
    if (kind == "cubic_pencil") {
      spec.h0_anticanonical = 2;
    } else {
      if (param < 2) fail(ErrorKind::Domain, "torsion needs tau >= 2");
      spec.restriction.rows.push_back(unit_row(spec.rank(), 1, param));
      spec.h0_anticanonical = 1;
    }
  } else {
    fail(ErrorKind::Domain, "unknown builtin kind: " + kind);
  }
  spec.ample = DivisorClass::basis(spec.rank(), 0) - Integer(2) * spec.canonical();
  spec.normalize();
  require_valid(spec);
  return spec;
}

} // namespace ratsurf
