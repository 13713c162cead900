#include "ap2/poset.hpp"

#include <algorithm>
#include <set>

#include "ap2/errors.hpp"
#include "ap2/util.hpp"

namespace ap2 {

bool ElemAbPoset::leq(int i, int j) const {
  const auto& a = members[i].elements();
  const auto& b = members[j].elements();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::vector<int>> ElemAbPoset::strict_above() const {
  const int n = static_cast<int>(members.size());
  std::vector<std::vector<int>> above(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (ranks[j] <= ranks[i]) continue;
      if (leq(i, j)) above[i].push_back(j);
    }
  return above;
}

std::vector<std::pair<int, long long>> ElemAbPoset::members_by_rank() const {
  std::vector<std::pair<int, long long>> counts;
  for (int r : ranks) {
    if (counts.empty() || counts.back().first != r) counts.emplace_back(r, 0);
    ++counts.back().second;
  }
  return counts;
}

ElemAbPoset enumerate_elementary_abelian(const GroupPtr& g, long long p,
                                         int min_rank, const Limits& limits) {
  if (!is_prime(p)) throw InputError("p=" + std::to_string(p) + " is not prime");
  if (!g->is_p_group(p))
    throw InputError(g->label() + " (order " + std::to_string(g->order()) +
                     ") is not a p-group for p=" + std::to_string(p));
  if (min_rank < 1) throw InputError("min_rank must be >= 1");

  const long long n = g->order();
  std::vector<elem_t> order_p;
  for (long long x = 0; x < n; ++x)
    if (g->element_order(static_cast<elem_t>(x)) == p)
      order_p.push_back(static_cast<elem_t>(x));

  // rank-1 level: one subgroup per order-p cyclic subgroup
  std::set<std::vector<elem_t>> level;
  for (elem_t x : order_p) {
    std::vector<elem_t> cyc;
    cyc.reserve(p);
    elem_t cur = g->identity();
    for (long long k = 0; k < p; ++k) {
      cyc.push_back(cur);
      cur = g->mul(cur, x);
    }
    std::sort(cyc.begin(), cyc.end());
    level.insert(std::move(cyc));
  }

  long long total = static_cast<long long>(level.size());
  if (total > limits.max_poset_members)
    throw CapError("poset member count exceeds cap " +
                   std::to_string(limits.max_poset_members));

  std::vector<std::pair<int, std::vector<elem_t>>> keep;
  int rank = 1;
  while (!level.empty()) {
    if (rank >= min_rank)
      for (const auto& elems : level) keep.emplace_back(rank, elems);

    std::set<std::vector<elem_t>> next;
    for (const auto& elems : level) {
      for (elem_t x : order_p) {
        if (std::binary_search(elems.begin(), elems.end(), x)) continue;
        bool commutes = true;
        for (elem_t e : elems)
          if (g->mul(e, x) != g->mul(x, e)) {
            commutes = false;
            break;
          }
        if (!commutes) continue;
        // E * <x>, a rank r+1 elementary abelian subgroup
        std::vector<elem_t> bigger;
        bigger.reserve(elems.size() * p);
        elem_t xp = g->identity();
        for (long long k = 0; k < p; ++k) {
          for (elem_t e : elems) bigger.push_back(g->mul(e, xp));
          xp = g->mul(xp, x);
        }
        std::sort(bigger.begin(), bigger.end());
        if (next.insert(std::move(bigger)).second) {
          if (++total > limits.max_poset_members)
            throw CapError("poset member count exceeds cap " +
                           std::to_string(limits.max_poset_members));
        }
      }
    }
    level = std::move(next);
    ++rank;
  }

  ElemAbPoset poset;
  poset.parent = g;
  poset.p = p;
  poset.min_rank = min_rank;
  poset.members.reserve(keep.size());
  poset.ranks.reserve(keep.size());
  for (auto& [r, elems] : keep) {
    poset.ranks.push_back(r);
    poset.members.emplace_back(g, std::move(elems));
  }
  return poset;
}

ElemAbPoset subposet_above(const ElemAbPoset& poset, const Subgroup& z) {
  ElemAbPoset sub;
  sub.parent = poset.parent;
  sub.p = poset.p;
  sub.min_rank = poset.min_rank;
  for (std::size_t i = 0; i < poset.members.size(); ++i) {
    const Subgroup& m = poset.members[i];
    if (m.size() > z.size() && m.contains_all(z)) {
      sub.members.push_back(m);
      sub.ranks.push_back(poset.ranks[i]);
    }
  }
  return sub;
}

ChiResult chi_set(const GroupPtr& g, const ElemAbPoset& poset) {
  if (poset.min_rank > 2)
    throw InputError("chi_set needs a poset enumerated with min_rank <= 2");
  auto p_opt = g->p_group_prime();
  if (!p_opt) throw InputError(g->label() + " is not a p-group");
  const long long p = *p_opt;

  Subgroup zc = center(g);
  if (!zc.is_cyclic())
    throw InputError("center not cyclic (order " + std::to_string(zc.size()) + ")");

  Subgroup e0 = derived_subgroup(g);
  if (e0.size() != p && e0.size() != p * p)
    throw InputError("derived subgroup has order " + std::to_string(e0.size()) +
                     ", expected p or p^2");
  if (e0.size() == p * p) {
    auto r = e0.elementary_rank(p);
    if (!r || *r != 2)
      throw InputError(
          "derived subgroup is cyclic of order p^2, not elementary abelian");
  }

  // the unique order-p subgroup of the cyclic center
  std::vector<elem_t> zel;
  for (elem_t c : zc.elements())
    if (c == g->identity() || g->element_order(c) == p) zel.push_back(c);
  Subgroup z(g, std::move(zel));
  if (z.size() != p) throw InternalError("cyclic center without unique C_p");

  Subgroup m = centralizer(g, e0.elements());

  ChiResult out{std::move(e0), std::move(m), std::move(z), {}};
  for (std::size_t i = 0; i < poset.members.size(); ++i) {
    if (poset.ranks[i] != 2) continue;
    const Subgroup& e = poset.members[i];
    if (e.contains_all(out.z) && !out.m.contains_all(e)) out.chi.push_back(e);
  }
  return out;
}

ChiResult chi_set(const GroupPtr& g, const Limits& limits) {
  auto p_opt = g->p_group_prime();
  if (!p_opt) throw InputError(g->label() + " is not a p-group");
  return chi_set(g, enumerate_elementary_abelian(g, *p_opt, 2, limits));
}

}  // namespace ap2
