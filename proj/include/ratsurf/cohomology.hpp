#ifndef RATSURF_COHOMOLOGY_HPP
#define RATSURF_COHOMOLOGY_HPP

#include <optional>
#include <vector>

#include "ratsurf/cone.hpp"
#include "ratsurf/lattice.hpp"
#include "ratsurf/surface.hpp"

namespace ratsurf {

/// Which of the four regimes of a nef class F applies, by -K.F and the
/// restriction of F to an anticanonical divisor D.
enum class CaseLabel {
  A,  // -K.F >= 2
  B,  // -K.F == 1
  C,  // -K.F == 0, F|D trivial
  D   // -K.F == 0, F|D nontrivial: the fixed part contains an anticanonical divisor
};

enum class BasePoint { None, UniqueOnD, ContainedInFixedPart };

const char* to_string(CaseLabel c) noexcept;
const char* to_string(BasePoint b) noexcept;

struct DinNResult {
  Integer s = 0;
  Integer r = 0;
  std::optional<Integer> tau;  // nullopt means no multiple of -K_Y restricts trivially
  Integer sigma = 0;
  std::vector<DivisorClass> contracted;
  Integer terminal_k_sq = 0;
};

struct Cohomology {
  Integer h0 = 0;
  Integer h1 = 0;
  Integer h2 = 0;
};

/// Fixed part of a case-B class arranged as N_1, ..., N_t (N_t the (-1)-curve)
/// with free part H = r C.
struct ChainReport {
  std::vector<DivisorClass> chain;
  DivisorClass pencil;
  Integer multiplicity = 0;
  bool valid = false;
};

struct AnalysisReport {
  CaseLabel case_label = CaseLabel::A;
  Integer h0 = 0;
  Integer h1 = 0;
  Integer h2 = 0;
  DivisorClass fixed_part;
  /// Fixed components with multiplicity, as found by probing.
  std::vector<std::pair<DivisorClass, Integer>> fixed_components;
  BasePoint base_point = BasePoint::None;
  Integer components_of_general_section_of_f_minus_k = 1;
  std::optional<DinNResult> dinN;
  std::optional<ChainReport> chain;
};

/// Case label and h^1 of a nef class without computing its fixed part.
struct NefCohomology {
  CaseLabel case_label = CaseLabel::A;
  Integer h1 = 0;
  std::optional<DinNResult> dinN;
};

NefCohomology nef_cohomology(const SurfaceSpec& spec, const DivisorClass& f);

AnalysisReport analyze_nef(const SurfaceSpec& spec, const DivisorClass& f);

/// Largest sum N of catalog curves (and copies of the anticanonical divisor
/// when it is rigid) with h^0(F - N) = h^0(F).
std::vector<std::pair<DivisorClass, Integer>> fixed_components(const SurfaceSpec& spec, const DivisorClass& f);
DivisorClass fixed_part_class(const SurfaceSpec& spec, const std::vector<std::pair<DivisorClass, Integer>>& parts);

DinNResult dinN_reduce(const SurfaceSpec& spec, const DivisorClass& f);

Cohomology h_all(const SurfaceSpec& spec, const DivisorClass& f);

Integer components_of_general_section(const SurfaceSpec& spec, const DivisorClass& f);

/// Verdict for a nef, fixed-component-free class: a base point exists iff
/// F.D = 1, and then it is unique and on D.
BasePoint base_point_report(const SurfaceSpec& spec, const DivisorClass& f);

/// Orders a case-B fixed part into a chain and checks every intersection
/// condition against the free part.
ChainReport chain_report(const SurfaceSpec& spec, const DivisorClass& f,
                         const std::vector<std::pair<DivisorClass, Integer>>& fixed);

} // namespace ratsurf

#endif // RATSURF_COHOMOLOGY_HPP
