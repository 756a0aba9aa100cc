#include "ratsurf/oracle.hpp"

#include <limits>
#include <string>

#include "ratsurf/error.hpp"

namespace ratsurf::oracle {

namespace {

std::int64_t form(const Point& a, const Point& b) {
  std::int64_t acc = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) acc -= a[i] * b[i];
  return acc;
}

Point canonical_point(std::size_t rank) {
  Point k(rank, 1);
  k[0] = -3;
  return k;
}

Point to_point(const DivisorClass& c) {
  Point p;
  p.reserve(c.rank());
  for (const auto& x : c.coords()) {
    if (!x.fits_slong_p()) fail(ErrorKind::Refusal, "oracle only handles machine-size coordinates");
    p.push_back(x.get_si());
  }
  return p;
}

} // namespace

SearchBox SearchBox::uniform(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  return {std::vector<std::int64_t>(rank, lo), std::vector<std::int64_t>(rank, hi)};
}

std::uint64_t SearchBox::volume() const {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (upper[i] < lower[i]) return 0;
    const auto width = static_cast<std::uint64_t>(upper[i] - lower[i]) + 1;
    if (v > std::numeric_limits<std::uint64_t>::max() / width) return std::numeric_limits<std::uint64_t>::max();
    v *= width;
  }
  return v;
}

void scan_box(const SearchBox& box, const std::function<void(const Point&)>& visit, std::uint64_t cap) {
  if (box.lower.size() != box.upper.size() || box.lower.empty())
    fail(ErrorKind::Refusal, "search box needs matching nonempty bounds");
  for (std::size_t i = 0; i < box.lower.size(); ++i)
    if (box.lower[i] > box.upper[i]) fail(ErrorKind::Refusal, "search box has lower > upper");
  if (box.volume() > cap)
    fail(ErrorKind::Refusal, "search box volume exceeds cap of " + std::to_string(cap));

  Point p = box.lower;
  for (;;) {
    visit(p);
    std::size_t i = p.size();
    while (i > 0) {
      --i;
      if (p[i] < box.upper[i]) {
        ++p[i];
        break;
      }
      p[i] = box.lower[i];
      if (i == 0) return;
    }
  }
}

std::vector<DivisorClass> brute_solve_quadratic(std::size_t rank, std::int64_t self_int, std::int64_t k_pairing,
                                                const SearchBox& box, std::uint64_t cap) {
  if (box.lower.size() != rank) fail(ErrorKind::Refusal, "search box rank does not match");
  Point anti = canonical_point(rank);
  for (auto& x : anti) x = -x;
  std::vector<DivisorClass> out;
  scan_box(box, [&](const Point& p) {
    if (form(p, p) == self_int && form(p, anti) == k_pairing) out.push_back(DivisorClass::from_int64(p));
  }, cap);
  return out;
}

std::size_t MonoidSearch::PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

MonoidSearch::MonoidSearch(std::vector<Point> generators, std::uint64_t state_cap)
    : generators_(std::move(generators)), state_cap_(state_cap) {
  if (generators_.empty()) return;
  const std::size_t rank = generators_.front().size();
  for (const auto& g : generators_)
    if (g.size() != rank) fail(ErrorKind::Dimension, "generators of different lengths");

  // E0, E0 - E_i and -K are tried; keep the ones no generator meets negatively
  std::vector<Point> candidates;
  Point e0(rank, 0);
  e0[0] = 1;
  candidates.push_back(e0);
  for (std::size_t i = 1; i < rank; ++i) {
    Point w = e0;
    w[i] = -1;
    candidates.push_back(w);
  }
  Point anti = canonical_point(rank);
  for (auto& x : anti) x = -x;
  candidates.push_back(anti);
  for (auto& w : candidates) {
    bool ok = true;
    for (const auto& g : generators_) ok = ok && form(w, g) >= 0;
    if (ok) prune_.push_back(std::move(w));
  }
}

bool MonoidSearch::search(const Point& residual, std::int64_t budget) {
  bool zero = true;
  for (auto x : residual) zero = zero && x == 0;
  if (zero) return true;
  if (budget <= 0) return false;
  for (const auto& w : prune_)
    if (form(w, residual) < 0) return false;
  auto it = failed_.find(residual);
  if (it != failed_.end() && it->second >= budget) return false;

  Point next(residual.size());
  for (const auto& g : generators_) {
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = residual[i] - g[i];
    if (search(next, budget - 1)) return true;
  }
  failed_[residual] = budget;
  if (failed_.size() > state_cap_)
    fail(ErrorKind::Refusal, "monoid search exceeded " + std::to_string(state_cap_) + " states");
  return false;
}

bool MonoidSearch::contains(const Point& f, std::int64_t coeff_bound) {
  if (!generators_.empty() && f.size() != generators_.front().size())
    fail(ErrorKind::Dimension, "class length does not match the generators");
  return search(f, coeff_bound);
}

bool brute_monoid_membership(std::span<const DivisorClass> generators, const DivisorClass& f,
                             std::int64_t coeff_bound) {
  std::vector<Point> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(to_point(g));
  MonoidSearch search(std::move(gens));
  return search.contains(to_point(f), coeff_bound);
}

bool brute_check_chain(std::span<const DivisorClass> classes, const DivisorClass* pencil) {
  if (classes.empty()) return false;
  std::vector<Point> n;
  for (const auto& c : classes) n.push_back(to_point(c));
  const std::size_t rank = n.front().size();
  for (const auto& p : n)
    if (p.size() != rank) return false;
  const Point k = canonical_point(rank);
  const std::size_t t = n.size();
  for (std::size_t i = 0; i < t; ++i) {
    const std::int64_t sq = form(n[i], n[i]);
    const std::int64_t kd = form(n[i], k);
    if (i + 1 < t ? (sq != -2 || kd != 0) : (sq != -1 || kd != -1)) return false;
    for (std::size_t j = i + 1; j < t; ++j)
      if (form(n[i], n[j]) != (j == i + 1 ? 1 : 0)) return false;
  }
  if (pencil) {
    const Point c = to_point(*pencil);
    if (c.size() != rank || form(c, k) != 0) return false;
    for (std::size_t i = 0; i < t; ++i)
      if (form(c, n[i]) != (i == 0 ? 1 : 0)) return false;
  }
  return true;
}

} // namespace ratsurf::oracle
