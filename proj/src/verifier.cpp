#include "ap2/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ap2/errors.hpp"
#include "ap2/util.hpp"

namespace ap2 {

std::string format_theorem_outcome(TheoremOutcome o) {
  switch (o) {
    case TheoremOutcome::HypothesesNotMet:
      return "hypotheses_not_met";
    case TheoremOutcome::EmptyPoset:
      return "empty_poset";
    case TheoremOutcome::Contractible:
      return "contractible";
    case TheoremOutcome::Acyclic:
      return "acyclic";
    case TheoremOutcome::SingleDegree:
      return "single_degree";
    case TheoremOutcome::Violation:
      return "VIOLATION";
  }
  return "?";
}

namespace {

PipelineStats stats_of(const ElemAbPoset& poset) {
  PipelineStats s;
  s.poset_members = poset.size();
  s.members_by_rank = poset.members_by_rank();
  return s;
}

// Everything needed to re-check a violation independently.
std::string witness_bundle(const GroupPtr& g, const ElemAbPoset& poset,
                           const HomologyReport& rep) {
  std::ostringstream out;
  out << "group=" << g->label() << " order=" << g->order() << "\n";
  out << "members(rank:elements):\n";
  for (std::size_t i = 0; i < poset.members.size(); ++i) {
    out << "  " << poset.ranks[i] << ":";
    for (elem_t e : poset.members[i].elements()) out << " " << e;
    out << "\n";
  }
  out << "f_vector:";
  for (long long f : rep.f_vector) out << " " << f;
  out << "\nsnf_diagonals:\n";
  for (std::size_t k = 1; k < rep.boundary_snf.size(); ++k) {
    out << "  del_" << k << ":";
    for (long long d : rep.boundary_snf[k].diagonal) out << " " << d;
    out << "\n";
  }
  out << "betti:";
  for (const auto& d : rep.degrees) out << " " << d.betti;
  out << "\ntorsion:";
  for (std::size_t j = 0; j < rep.degrees.size(); ++j)
    for (long long t : rep.degrees[j].torsion)
      out << " deg" << j << ":" << t;
  out << "\ntable:";
  for (elem_t v : g->raw_table()) out << " " << v;
  out << "\n";
  return out.str();
}

}  // namespace

TheoremVerdict check_theorem_same_dimension(const GroupPtr& g, long long p,
                                            const Limits& limits) {
  TheoremVerdict v;
  v.label = g->label();
  v.p = p;
  if (!g->is_p_group(p))
    throw InputError(g->label() + " is not a p-group for p=" + std::to_string(p));

  v.hypotheses.p_odd = (p % 2 != 0);
  Subgroup derived = derived_subgroup(g);
  auto drank = derived.elementary_rank(p);
  v.hypotheses.derived_rank2 = (drank && *drank == 2);
  v.hypotheses.center_cyclic = center(g).is_cyclic();

  ElemAbPoset poset = enumerate_elementary_abelian(g, p, 2, limits);
  v.stats = stats_of(poset);

  if (poset.size() == 0) {
    v.outcome = TheoremOutcome::EmptyPoset;
    return v;
  }
  if (!v.hypotheses.p_odd || !v.hypotheses.derived_rank2) {
    v.outcome = TheoremOutcome::HypothesesNotMet;
    return v;
  }

  SimplicialComplex complex = order_complex(poset, limits);
  v.stats.f_vector = complex.f_vector();
  HomologyReport rep = reduced_homology(complex);

  ContractCert cert = contractible_via_center(g, poset);
  if (!v.hypotheses.center_cyclic && !cert.contractible)
    throw InternalError("noncyclic center must yield a contraction certificate");
  if (cert.contractible) {
    if (!rep.all_zero())
      throw InternalError("contraction certificate with nonzero homology");
    v.contract_kind = cert.kind;
    v.outcome = TheoremOutcome::Contractible;
    v.homology = std::move(rep);
    return v;
  }

  switch (rep.signature.kind) {
    case SignatureKind::Acyclic:
      v.outcome = TheoremOutcome::Acyclic;
      break;
    case SignatureKind::SingleDegree:
      v.outcome = TheoremOutcome::SingleDegree;
      break;
    case SignatureKind::MultiDegree:
    case SignatureKind::TorsionPresent:
      v.outcome = TheoremOutcome::Violation;
      v.violation = witness_bundle(g, poset, rep);
      break;
    case SignatureKind::Empty:
      throw InternalError("nonempty poset reported an empty complex");
  }
  v.homology = std::move(rep);
  return v;
}

Step2Result check_step2_assertion(const GroupPtr& g, const Limits& limits) {
  auto p_opt = g->p_group_prime();
  if (!p_opt) throw InputError(g->label() + " is not a p-group");
  const long long p = *p_opt;

  if (g->is_abelian()) {
    std::vector<elem_t> all;
    for (long long i = 0; i < g->order(); ++i) all.push_back(static_cast<elem_t>(i));
    Step2Result r{true, true, Subgroup(g, std::move(all)),
                  Subgroup(g, {g->identity()}), std::nullopt};
    return r;
  }

  Subgroup derived = derived_subgroup(g);
  if (derived.size() != p * p)
    throw InputError("step 2 requires |G'| = p^2, got " +
                     std::to_string(derived.size()));
  ElemAbPoset poset = enumerate_elementary_abelian(g, p, 2, limits);
  ChiResult chi = chi_set(g, poset);  // enforces cyclic center
  if (chi.chi.empty()) throw InputError("step 2 requires nonempty chi");

  // M' as the closure of all commutators inside M
  const auto& m_elems = chi.m.elements();
  std::vector<elem_t> comms;
  std::optional<std::pair<elem_t, elem_t>> witness;
  for (elem_t a : m_elems)
    for (elem_t b : m_elems) {
      elem_t c = g->commutator(a, b);
      if (c != g->identity()) comms.push_back(c);
      if (!witness && !chi.z.contains(c)) witness = std::make_pair(a, b);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  Subgroup m_derived =
      comms.empty() ? Subgroup(g, {g->identity()}) : closure(g, comms);

  const bool holds = m_derived.size() <= p && chi.z.contains_all(m_derived);
  if (holds != !witness.has_value())
    throw InternalError("step 2 witness disagrees with subgroup check");
  return Step2Result{false, holds, std::move(chi.m), std::move(m_derived),
                     witness};
}

namespace {

std::vector<long long> betti_vector(const HomologyReport& rep) {
  std::vector<long long> b;
  for (const auto& d : rep.degrees) b.push_back(d.betti);
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

std::vector<std::vector<long long>> torsion_vector(const HomologyReport& rep) {
  std::vector<std::vector<long long>> t;
  for (const auto& d : rep.degrees) t.push_back(d.torsion);
  while (!t.empty() && t.back().empty()) t.pop_back();
  return t;
}

}  // namespace

WedgeCheck check_wedge_additivity(const GroupPtr& g, const Limits& limits) {
  auto p_opt = g->p_group_prime();
  if (!p_opt) throw InputError(g->label() + " is not a p-group");
  const long long p = *p_opt;

  ElemAbPoset poset = enumerate_elementary_abelian(g, p, 2, limits);
  WedgeCheck check{wedge_decompose(g, poset), false, false, {}, {}, {}, false};
  check.chi_empty = check.record.chi.empty();

  HomologyReport whole = reduced_homology(order_complex(poset, limits));
  check.whole_betti = betti_vector(whole);
  const auto whole_torsion = torsion_vector(whole);

  // A_p(M)_{>=2} must be contractible: E0 is central in M of rank 2
  {
    auto m_table = subgroup_table(check.record.m);
    ElemAbPoset m_poset = enumerate_elementary_abelian(m_table.group, p, 2, limits);
    check.m_complex_contractible =
        contractible_via_center(m_table.group, m_poset).contractible;
    if (!check.m_complex_contractible)
      throw InternalError("A_p(M) lacks the guaranteed contraction certificate");
  }

  if (check.chi_empty) {
    // the whole complex must then be contractible; empty counts as vacuous
    check.holds = whole.empty_complex || whole.all_zero();
    return check;
  }

  std::vector<std::vector<long long>> expected_torsion;
  for (const Subgroup& part : check.record.locals) {
    auto part_table = subgroup_table(part);
    ElemAbPoset part_poset =
        enumerate_elementary_abelian(part_table.group, p, 2, limits);
    HomologyReport rep = reduced_homology(order_complex(part_poset, limits));

    WedgePartReport pr;
    pr.part = part.iso_hint();
    pr.empty_complex = rep.empty_complex;
    pr.betti = betti_vector(rep);

    // suspension shift: degree j of the part lands in degree j+1 of the whole;
    // an empty part complex suspends to a 0-sphere
    if (rep.empty_complex) {
      if (check.expected_betti.empty()) check.expected_betti.resize(1, 0);
      check.expected_betti[0] += 1;
    } else {
      if (check.expected_betti.size() < pr.betti.size() + 1)
        check.expected_betti.resize(pr.betti.size() + 1, 0);
      for (std::size_t j = 0; j < pr.betti.size(); ++j)
        check.expected_betti[j + 1] += pr.betti[j];
      const auto part_torsion = torsion_vector(rep);
      if (expected_torsion.size() < part_torsion.size() + 1)
        expected_torsion.resize(part_torsion.size() + 1);
      for (std::size_t j = 0; j < part_torsion.size(); ++j)
        expected_torsion[j + 1].insert(expected_torsion[j + 1].end(),
                                       part_torsion[j].begin(),
                                       part_torsion[j].end());
    }
    check.parts.push_back(std::move(pr));
  }
  while (!check.expected_betti.empty() && check.expected_betti.back() == 0)
    check.expected_betti.pop_back();
  for (auto& t : expected_torsion) std::sort(t.begin(), t.end());
  while (!expected_torsion.empty() && expected_torsion.back().empty())
    expected_torsion.pop_back();

  check.holds = (check.whole_betti == check.expected_betti) &&
                (whole_torsion == expected_torsion);
  return check;
}

Cor22Report check_cor22_structure(const GroupPtr& g, const FamilySpec* built_from,
                                  const Limits& limits) {
  auto p_opt = g->p_group_prime();
  if (!p_opt) throw InputError(g->label() + " is not a p-group");
  const long long p = *p_opt;

  Subgroup derived = derived_subgroup(g);
  if (derived.size() != p)
    throw InputError("structure check requires |G'| = p, got " +
                     std::to_string(derived.size()));
  Subgroup zc = center(g);
  if (!zc.is_cyclic())
    throw InputError("structure check requires a cyclic center");

  Cor22Report rep;
  rep.exponent = g->exponent();
  rep.derived_central = zc.contains_all(derived);

  std::vector<elem_t> zel;
  for (elem_t c : zc.elements())
    if (c == g->identity() || g->element_order(c) == p) zel.push_back(c);
  Subgroup omega(g, std::move(zel));
  rep.derived_is_omega = (omega == derived);

  const int e = *power_exponent(g->order(), p);
  const int n = *power_exponent(rep.exponent, p);
  if (n == 1) {
    // exponent-p form: central product of l extraspecial p_+ groups
    rep.form_consistent = (e % 2 == 1) && e >= 3;
    rep.l = (e - 1) / 2;
    rep.detail = "exponent p: expects order p^(2l+1)";
  } else {
    // S(n,1,0) * (l-1 copies of p_+^(1+2)): order p^(n+1+2(l-1))
    rep.form_consistent = ((e - n - 1) % 2 == 0) && e >= n + 1;
    rep.l = (e - n + 1) / 2;
    rep.detail = "exponent p^" + std::to_string(n) + ": expects order p^(n+1+2(l-1))";
  }

  if (built_from) {
    std::vector<FamilySpec> factors;
    if (built_from->kind == FamilySpec::Kind::CentralProduct) {
      factors = built_from->factors;
      for (auto& f : factors) f.p = built_from->p;
    } else {
      factors = {*built_from};
    }
    bool buildable = true;
    for (const auto& f : factors)
      if (f.kind == FamilySpec::Kind::CentralProduct ||
          f.kind == FamilySpec::Kind::JordanSemidirect)
        buildable = false;
    if (buildable) {
      rep.roundtrip_checked = true;
      long long order = 1, center_order = 1, expo = 1;
      const long long k = static_cast<long long>(factors.size());
      for (const auto& f : factors) {
        GroupPtr fg = build_family(f, limits);
        order *= fg->order();
        center_order *= center(fg).size();
        expo = std::lcm(expo, fg->exponent());
      }
      const long long amalgam = ipow(p, static_cast<int>(k - 1));
      rep.roundtrip_ok = (g->order() == order / amalgam) &&
                         (zc.size() == center_order / amalgam) &&
                         (rep.exponent == expo);
    } else {
      rep.detail += "; roundtrip skipped for this family kind";
    }
  }

  rep.consequences_hold = rep.derived_central && rep.derived_is_omega &&
                          rep.form_consistent &&
                          (!rep.roundtrip_checked || rep.roundtrip_ok);
  return rep;
}

P2Exploration explore_question_p2(const GroupPtr& g, const Limits& limits) {
  if (!g->is_p_group(2))
    throw InputError(g->label() + " is not a 2-group");

  ElemAbPoset poset = enumerate_elementary_abelian(g, 2, 2, limits);
  P2Exploration ex;
  ex.stats = stats_of(poset);
  SimplicialComplex complex = order_complex(poset, limits);
  ex.stats.f_vector = complex.f_vector();
  ex.homology = reduced_homology(complex);
  for (int j = 0; j < static_cast<int>(ex.homology.degrees.size()); ++j)
    if (ex.homology.degrees[j].betti > 0) ex.degrees.push_back(j);
  ex.consecutive_le2 =
      ex.degrees.size() <= 1 ||
      (ex.degrees.size() == 2 && ex.degrees[1] == ex.degrees[0] + 1);
  return ex;
}

}  // namespace ap2
