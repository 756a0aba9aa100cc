#ifndef RATSURF_ORACLE_HPP
#define RATSURF_ORACLE_HPP

// Brute-force counterparts to the engine, used to cross-check it. Nothing in
// here calls the engine; the intersection form is recomputed locally on
// machine integers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ratsurf/lattice.hpp"

namespace ratsurf::oracle {

inline constexpr std::uint64_t kDefaultVolumeCap = 10'000'000;

using Point = std::vector<std::int64_t>;

/// Inclusive per-coordinate bounds.
struct SearchBox {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;

  static SearchBox uniform(std::size_t rank, std::int64_t lo, std::int64_t hi);
  /// Number of lattice points; saturates at UINT64_MAX.
  std::uint64_t volume() const;
};

/// Visits every point of the box in lexicographic order. Refuses (Refusal
/// error) when the volume exceeds the cap or the box is malformed.
void scan_box(const SearchBox& box, const std::function<void(const Point&)>& visit,
              std::uint64_t cap = kDefaultVolumeCap);

/// Every class in the box with F^2 = self_int and F.(-K) = k_pairing, so
/// exceptional classes are (-1, 1) and roots (-2, 0).
std::vector<DivisorClass> brute_solve_quadratic(std::size_t rank, std::int64_t self_int, std::int64_t k_pairing,
                                                const SearchBox& box, std::uint64_t cap = kDefaultVolumeCap);

/// Bounded search for F as a sum of at most `coeff_bound` generators (with
/// repetition). States are memoized across calls on the same instance.
class MonoidSearch {
public:
  explicit MonoidSearch(std::vector<Point> generators, std::uint64_t state_cap = kDefaultVolumeCap);

  bool contains(const Point& f, std::int64_t coeff_bound);
  std::size_t states() const noexcept { return failed_.size(); }

private:
  struct PointHash {
    std::size_t operator()(const Point& p) const noexcept;
  };

  bool search(const Point& residual, std::int64_t budget);

  std::vector<Point> generators_;
  // functionals every generator meets nonnegatively; residuals must too
  std::vector<Point> prune_;
  std::unordered_map<Point, std::int64_t, PointHash> failed_;
  std::uint64_t state_cap_;
};

bool brute_monoid_membership(std::span<const DivisorClass> generators, const DivisorClass& f,
                             std::int64_t coeff_bound);

/// Checks a claimed chain N_1..N_t: N_i^2 = -2 for i < t, N_t^2 = -1,
/// N_i.N_{i+1} = 1, N_i.N_j = 0 for j > i+1, with N_i.K = 0 for i < t and
/// N_t.K = -1 (so each N_i has genus 0). With a pencil C, also C.K = 0,
/// C.N_1 = 1 and C.N_i = 0 for i > 1.
bool brute_check_chain(std::span<const DivisorClass> classes, const DivisorClass* pencil = nullptr);

} // namespace ratsurf::oracle

#endif // RATSURF_ORACLE_HPP
