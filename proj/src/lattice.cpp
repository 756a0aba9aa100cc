#include "ratsurf/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ratsurf/error.hpp"

namespace ratsurf {

namespace {

// Coordinates at most 2^31 in absolute value keep each product below 2^62,
// and the __int128 accumulator absorbs any realistic rank.
constexpr std::int64_t kSmallLimit = std::int64_t{1} << 31;

Integer from_int128(__int128 v) {
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max())
    return Integer(static_cast<long>(v));
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

void check_ranks(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank())
    fail(ErrorKind::Dimension, "rank mismatch: " + std::to_string(a.rank()) + " vs " +
                                   std::to_string(b.rank()));
}

} // namespace

DivisorClass::DivisorClass(std::vector<Integer> coords) : coords_(std::move(coords)) {
  refresh_small();
}

DivisorClass::DivisorClass(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
  refresh_small();
}

void DivisorClass::refresh_small() {
  small_ = true;
  small_coords_.clear();
  small_coords_.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (!c.fits_slong_p() || c.get_si() >= kSmallLimit || c.get_si() <= -kSmallLimit) {
      small_ = false;
      small_coords_.clear();
      return;
    }
    small_coords_.push_back(c.get_si());
  }
}

DivisorClass DivisorClass::zero(std::size_t rank) {
  return DivisorClass(std::vector<Integer>(rank, Integer(0)));
}

DivisorClass DivisorClass::basis(std::size_t rank, std::size_t index) {
  if (index >= rank) fail(ErrorKind::Dimension, "basis index out of range");
  std::vector<Integer> c(rank, Integer(0));
  c[index] = 1;
  return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::from_int64(std::span<const std::int64_t> coords) {
  std::vector<Integer> c;
  c.reserve(coords.size());
  for (auto v : coords) c.emplace_back(static_cast<long>(v));
  return DivisorClass(std::move(c));
}

bool DivisorClass::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

DivisorClass DivisorClass::operator-() const {
  std::vector<Integer> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return DivisorClass(std::move(c));
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  check_ranks(a, b);
  std::vector<Integer> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
  return DivisorClass(std::move(c));
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  check_ranks(a, b);
  std::vector<Integer> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
  return DivisorClass(std::move(c));
}

DivisorClass operator*(const Integer& k, const DivisorClass& a) {
  std::vector<Integer> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coords_[i];
  return DivisorClass(std::move(c));
}

std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank()) return a.rank() <=> b.rank();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string DivisorClass::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i == 1) out << "; ";
    else if (i > 1) out << ", ";
    out << coords_[i];
  }
  out << ')';
  return out.str();
}

DivisorClass DivisorClass::divided_by(const Integer& k) const {
  if (k == 0) fail(ErrorKind::Domain, "division of a class by zero");
  std::vector<Integer> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), coords_[i].get_mpz_t(), k.get_mpz_t());
  return DivisorClass(std::move(c));
}

Integer DivisorClass::content() const {
  Integer g = 0;
  for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Integer intersect(const DivisorClass& f, const DivisorClass& g) {
  check_ranks(f, g);
  if (f.rank() == 0) return 0;
  if (f.is_small() && g.is_small()) {
    auto a = f.small_coords();
    auto b = g.small_coords();
    __int128 acc = static_cast<__int128>(a[0]) * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) acc -= static_cast<__int128>(a[i]) * b[i];
    return from_int128(acc);
  }
  Integer acc = f[0] * g[0];
  for (std::size_t i = 1; i < f.rank(); ++i) acc -= f[i] * g[i];
  return acc;
}

DivisorClass canonical_class(std::size_t rank) {
  if (rank == 0) fail(ErrorKind::Dimension, "canonical class needs rank >= 1");
  std::vector<Integer> c(rank, Integer(1));
  c[0] = -3;
  return DivisorClass(std::move(c));
}

Integer chi_riemann_roch(const DivisorClass& f) {
  const auto k = canonical_class(f.rank());
  const Integer twice = intersect(f, f) - intersect(k, f);
  if (!mpz_even_p(twice.get_mpz_t()))
    fail(ErrorKind::Invariant, "F^2 - K.F is odd for " + f.to_string());
  return twice / 2 + 1;
}

Integer adjunction_genus(const DivisorClass& f, const DivisorClass& canonical) {
  const Integer twice = intersect(f, f) + intersect(canonical, f);
  if (!mpz_even_p(twice.get_mpz_t()))
    fail(ErrorKind::Invariant, "F^2 + K.F is odd for " + f.to_string());
  return twice / 2 + 1;
}

Integer adjunction_genus(const DivisorClass& f) {
  return adjunction_genus(f, canonical_class(f.rank()));
}

DivisorClass contract_project(const DivisorClass& f, const DivisorClass& e) {
  const auto k = canonical_class(e.rank());
  if (intersect(e, e) != -1 || intersect(e, k) != -1)
    fail(ErrorKind::Domain, "not an exceptional class: " + e.to_string());
  return f + intersect(f, e) * e;
}

LatticeContext::LatticeContext(std::size_t rank) : rank_(rank), canonical_(canonical_class(rank)) {}

bool LatticeContext::is_exceptional(const DivisorClass& e) const {
  return e.rank() == rank_ && intersect(e, e) == -1 && intersect(e, canonical_) == -1;
}

DivisorClass LatticeContext::project(const DivisorClass& f) const {
  // contracted classes are pairwise orthogonal with square -1
  DivisorClass out = f;
  for (const auto& e : contracted_) out += intersect(f, e) * e;
  return out;
}

LatticeContext LatticeContext::contract(const DivisorClass& e) const {
  if (!is_exceptional(e))
    fail(ErrorKind::Domain, "not exceptional in the current context: " + e.to_string());
  for (const auto& prev : contracted_)
    if (intersect(prev, e) != 0)
      fail(ErrorKind::Domain, "contracted classes must be orthogonal: " + e.to_string());
  LatticeContext next = *this;
  next.contracted_.push_back(e);
  next.canonical_ = canonical_ + intersect(canonical_, e) * e;
  return next;
}

} // namespace ratsurf
