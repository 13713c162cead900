#pragma once

#include <vector>

#include "ap2/group.hpp"

namespace ap2 {

// Inclusion poset of elementary abelian subgroups of rank >= min_rank.
// Members are sorted by (rank, element list), so inclusion implies index
// order: members[i] < members[j] as subgroups is only possible when i < j.
struct ElemAbPoset {
  GroupPtr parent;
  long long p = 0;
  int min_rank = 2;
  std::vector<Subgroup> members;
  std::vector<int> ranks;

  long long size() const { return static_cast<long long>(members.size()); }

  // members[i] <= members[j] as sets (reflexive inclusion)
  bool leq(int i, int j) const;

  // above[i] = ascending indices j with members[i] strictly contained in members[j]
  std::vector<std::vector<int>> strict_above() const;

  std::vector<std::pair<int, long long>> members_by_rank() const;
};

// Complete BFS enumeration: rank-1 subgroups from the order-p elements, rank
// r+1 by adjoining a commuting order-p element outside a rank-r member.
// Aborts with CapError when the member count passes limits.max_poset_members.
ElemAbPoset enumerate_elementary_abelian(const GroupPtr& g, long long p,
                                         int min_rank = 2, const Limits& limits = {});

// Members strictly containing z, with the relation restricted.
ElemAbPoset subposet_above(const ElemAbPoset& poset, const Subgroup& z);

// The data of the rank-2 selection: E0 = G', M = C_G(E0), Z = the order-p
// subgroup of the cyclic center, chi = rank-2 members containing Z and not
// contained in M.
struct ChiResult {
  Subgroup e0;
  Subgroup m;
  Subgroup z;
  std::vector<Subgroup> chi;
};

// Requires a cyclic center and |G'| in {p, p^2}. The poset must have been
// enumerated with min_rank <= 2 on the same group.
ChiResult chi_set(const GroupPtr& g, const ElemAbPoset& poset);
ChiResult chi_set(const GroupPtr& g, const Limits& limits = {});

}  // namespace ap2
