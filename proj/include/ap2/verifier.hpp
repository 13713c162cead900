#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ap2/complex.hpp"
#include "ap2/families.hpp"
#include "ap2/homology.hpp"
#include "ap2/poset.hpp"

namespace ap2 {

struct Hypotheses {
  bool p_odd = false;
  bool derived_rank2 = false;  // G' elementary abelian of rank 2
  bool center_cyclic = false;
  bool all_met() const { return p_odd && derived_rank2 && center_cyclic; }
};

enum class TheoremOutcome {
  HypothesesNotMet,
  EmptyPoset,
  Contractible,   // witnessed conical contraction, homology cross-checked zero
  Acyclic,        // homology all zero without a conical certificate
  SingleDegree,
  Violation,
};

std::string format_theorem_outcome(TheoremOutcome o);

struct PipelineStats {
  long long poset_members = 0;
  std::vector<std::pair<int, long long>> members_by_rank;
  std::vector<long long> f_vector;
};

// Same-dimension check for one group: evaluates the hypotheses, detects the
// noncyclic-center contractible case, runs the poset/complex/homology
// pipeline, and classifies the sphere signature. Violation is only possible
// when all hypotheses hold, and is treated as evidence of a bug: the verdict
// then carries a full witness bundle.
struct TheoremVerdict {
  std::string label;
  long long p = 0;
  Hypotheses hypotheses;
  TheoremOutcome outcome = TheoremOutcome::HypothesesNotMet;
  ContractKind contract_kind = ContractKind::None;
  std::optional<HomologyReport> homology;
  PipelineStats stats;
  std::string violation;  // witness bundle, empty unless outcome == Violation
};

TheoremVerdict check_theorem_same_dimension(const GroupPtr& g, long long p,
                                            const Limits& limits = {});

// M' <= Z assertion. Abelian groups pass vacuously; otherwise requires a
// cyclic center, |G'| = p^2 and nonempty chi.
struct Step2Result {
  bool vacuous = false;
  bool holds = false;
  Subgroup m;
  Subgroup m_derived;
  std::optional<std::pair<elem_t, elem_t>> witness;  // pair in M with [x,y] outside Z
};

Step2Result check_step2_assertion(const GroupPtr& g, const Limits& limits = {});

// Homology-level consequence of the wedge decomposition. Parts enter
// suspended: expected b~_j(whole) = sum_i b~_(j-1)(part_i), where an empty
// part complex contributes 1 in degree 0 (the suspension of the empty
// complex is a 0-sphere). With empty chi the whole complex must be acyclic.
struct WedgePartReport {
  IsoHint part;                   // P_i = C_M(E_i)
  bool empty_complex = false;
  std::vector<long long> betti;
};

struct WedgeCheck {
  DecompositionRecord record;
  bool chi_empty = false;
  bool m_complex_contractible = false;  // A_p(M)_{>=2}, certificate expected
  std::vector<long long> whole_betti;
  std::vector<WedgePartReport> parts;
  std::vector<long long> expected_betti;
  bool holds = false;
};

WedgeCheck check_wedge_additivity(const GroupPtr& g, const Limits& limits = {});

// Checkable consequences of the central-product classification for
// |G'| = p with cyclic center. Round-trip checks run only for groups the
// family builders produced (built_from != nullptr); foreign groups get
// consequences only.
struct Cor22Report {
  bool derived_central = false;       // G' <= Z(G)
  bool derived_is_omega = false;      // G' equals the order-p central subgroup
  bool form_consistent = false;       // order fits p^(2l+1) resp. p^(n+2l-1)
  int l = 0;                          // number of extraspecial factors implied
  long long exponent = 0;
  bool roundtrip_checked = false;
  bool roundtrip_ok = false;
  bool consequences_hold = false;
  std::string detail;
};

Cor22Report check_cor22_structure(const GroupPtr& g,
                                  const FamilySpec* built_from = nullptr,
                                  const Limits& limits = {});

// Question explorer for p = 2: reports whether the nonzero reduced Betti
// degrees form at most two consecutive integers. No pass/fail semantics.
struct P2Exploration {
  HomologyReport homology;
  std::vector<int> degrees;
  bool consecutive_le2 = false;
  PipelineStats stats;
};

P2Exploration explore_question_p2(const GroupPtr& g, const Limits& limits = {});

}  // namespace ap2
