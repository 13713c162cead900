#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ap2/group.hpp"
#include "ap2/poset.hpp"

namespace ap2 {

// Finite simplicial complex on vertices {0..vertex_count-1}. faces_by_dim[k]
// lists the k-dimensional faces as strictly increasing (k+1)-tuples in
// lexicographic order; the face set is downward closed.
struct SimplicialComplex {
  long long vertex_count = 0;
  std::vector<std::vector<std::vector<int>>> faces_by_dim;

  bool empty() const { return faces_by_dim.empty() || faces_by_dim[0].empty(); }
  int dim() const { return static_cast<int>(faces_by_dim.size()) - 1; }
  std::vector<long long> f_vector() const;
  long long total_faces() const;
  // alternating sum of the f-vector
  long long euler_characteristic() const;
};

// Order complex: k-faces are the chains m_0 < m_1 < ... < m_k of the poset.
// Subchains of chains are chains, so downward closure is automatic.
SimplicialComplex order_complex(const ElemAbPoset& poset, const Limits& limits = {});

// Downward closure of the given faces (synthetic-complex helper for tests and
// oracles). Vertices not covered by any face are kept as isolated 0-faces
// only if listed as singleton faces.
SimplicialComplex from_maximal_faces(long long vertex_count,
                                     const std::vector<std::vector<int>>& maximal,
                                     const Limits& limits = {});

// Positive contractibility certificates; homology can refute but never certify
// contractibility, so only witnessed verdicts are reported.
enum class ContractKind { None, CenterRank, MaximumElement, MinimumElement };

struct ContractCert {
  bool contractible = false;
  ContractKind kind = ContractKind::None;
  std::optional<Subgroup> witness;  // W = Omega_1(Z(G)), or the max/min member
  std::string detail;
};

std::string format_contract_kind(ContractKind k);

// Checks, in order: Omega_1(Z(G)) of rank >= max(2, min_rank) (conical
// contraction E -> E*W >= W), a maximum member, a minimum member.
ContractCert contractible_via_center(const GroupPtr& g, const ElemAbPoset& poset);

// The decomposition data of the cyclic-center case: M = C_G(E0), Z, the
// rank-2 members chi = {E_1..E_k} outside M, and the local groups
// P_i = C_M(E_i). Empty chi is carried through (the whole complex is then
// expected to be contractible); M = G is rejected as inapplicable.
struct DecompositionRecord {
  Subgroup e0;
  Subgroup m;
  Subgroup z;
  std::vector<Subgroup> chi;
  std::vector<Subgroup> locals;
};

DecompositionRecord wedge_decompose(const GroupPtr& g, const ElemAbPoset& poset);
DecompositionRecord wedge_decompose(const GroupPtr& g, const Limits& limits = {});

}  // namespace ap2
