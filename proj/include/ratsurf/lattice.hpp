#ifndef RATSURF_LATTICE_HPP
#define RATSURF_LATTICE_HPP

// Picard lattice of a blowup of the plane at n points, in an exceptional
// configuration basis E0, E1, ..., En. The intersection form is
// diag(1, -1, ..., -1) and a class is stored by its coefficients against the
// basis, so K = -3 E0 + E1 + ... + En has coordinates (-3; 1, ..., 1).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ratsurf {

using Integer = mpz_class;

class DivisorClass {
public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Integer> coords);
  DivisorClass(std::initializer_list<long> coords);

  static DivisorClass zero(std::size_t rank);
  /// The basis class E_index in a lattice of the given rank.
  static DivisorClass basis(std::size_t rank, std::size_t index);
  static DivisorClass from_int64(std::span<const std::int64_t> coords);

  std::size_t rank() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const noexcept { return coords_; }
  /// Coefficient of E0, which equals the intersection with E0.
  const Integer& degree() const { return coords_.at(0); }
  bool is_zero() const noexcept;

  /// True when every coordinate fits the fast pairing path.
  bool is_small() const noexcept { return small_; }
  std::span<const std::int64_t> small_coords() const noexcept { return small_coords_; }

  DivisorClass operator-() const;
  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(const Integer& k, const DivisorClass& a);
  DivisorClass& operator+=(const DivisorClass& other) { return *this = *this + other; }
  DivisorClass& operator-=(const DivisorClass& other) { return *this = *this - other; }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order on coordinates; shorter vectors first.
  friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b);

  /// "(d; m1, ..., mn)"
  std::string to_string() const;

  /// Exact division of every coordinate; the caller guarantees divisibility.
  DivisorClass divided_by(const Integer& k) const;
  /// gcd of all coordinates (0 for the zero class).
  Integer content() const;

private:
  void refresh_small();

  std::vector<Integer> coords_;
  std::vector<std::int64_t> small_coords_;
  bool small_ = false;
};

/// d_F d_G - sum m_i m'_i. Throws a dimension error on rank mismatch.
Integer intersect(const DivisorClass& f, const DivisorClass& g);

/// (-3; 1, ..., 1). Throws a dimension error for rank 0.
DivisorClass canonical_class(std::size_t rank);

/// Euler characteristic (F^2 - K.F)/2 + 1 against the canonical class of
/// the ambient surface.
Integer chi_riemann_roch(const DivisorClass& f);

/// Arithmetic genus (F^2 + K.F)/2 + 1.
Integer adjunction_genus(const DivisorClass& f);
Integer adjunction_genus(const DivisorClass& f, const DivisorClass& canonical);

/// Orthogonal projection onto E-perp: F + (F.E) E. E must be exceptional
/// against the ambient canonical class.
DivisorClass contract_project(const DivisorClass& f, const DivisorClass& e);

/// A sequence of contractions of exceptional curves, kept inside the ambient
/// lattice. Pulling back K_Y along the contraction of E gives K_X - E, which
/// is exactly the projection of K_X onto E-perp, so the current canonical
/// element is the projection of the ambient one.
class LatticeContext {
public:
  explicit LatticeContext(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<DivisorClass>& contracted() const noexcept { return contracted_; }
  const DivisorClass& canonical() const noexcept { return canonical_; }

  bool is_exceptional(const DivisorClass& e) const;
  /// Projection of F onto the perp of every contracted class.
  DivisorClass project(const DivisorClass& f) const;
  /// New context with E contracted. E must be exceptional here and orthogonal
  /// to everything already contracted.
  LatticeContext contract(const DivisorClass& e) const;

private:
  std::size_t rank_;
  std::vector<DivisorClass> contracted_;
  DivisorClass canonical_;
};

} // namespace ratsurf

#endif // RATSURF_LATTICE_HPP
