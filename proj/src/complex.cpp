#include "ap2/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ap2/errors.hpp"

namespace ap2 {

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> f;
  f.reserve(faces_by_dim.size());
  for (const auto& faces : faces_by_dim)
    f.push_back(static_cast<long long>(faces.size()));
  return f;
}

long long SimplicialComplex::total_faces() const {
  long long total = 0;
  for (const auto& faces : faces_by_dim) total += static_cast<long long>(faces.size());
  return total;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  long long sign = 1;
  for (const auto& faces : faces_by_dim) {
    chi += sign * static_cast<long long>(faces.size());
    sign = -sign;
  }
  return chi;
}

SimplicialComplex order_complex(const ElemAbPoset& poset, const Limits& limits) {
  const auto above = poset.strict_above();
  SimplicialComplex c;
  c.vertex_count = poset.size();

  long long total = 0;
  std::vector<int> chain;
  // Vertices ascend along chains (inclusion implies index order), so visiting
  // start vertices and successors in ascending order emits each dimension in
  // lexicographic order.
  std::function<void(int)> extend = [&](int v) {
    chain.push_back(v);
    const std::size_t dim = chain.size() - 1;
    if (dim >= c.faces_by_dim.size()) c.faces_by_dim.emplace_back();
    c.faces_by_dim[dim].push_back(chain);
    if (++total > limits.max_faces)
      throw CapError("face count exceeds cap " + std::to_string(limits.max_faces));
    for (int w : above[v]) extend(w);
    chain.pop_back();
  };
  for (int v = 0; v < poset.size(); ++v) extend(v);
  return c;
}

SimplicialComplex from_maximal_faces(long long vertex_count,
                                     const std::vector<std::vector<int>>& maximal,
                                     const Limits& limits) {
  if (vertex_count < 0) throw InputError("vertex count must be nonnegative");
  std::set<std::vector<int>> faces;
  for (const auto& face : maximal) {
    std::vector<int> f = face;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InputError("face has a repeated vertex");
    for (int v : f)
      if (v < 0 || v >= vertex_count) throw InputError("face vertex out of range");
    // all nonempty subsets
    const std::size_t n = f.size();
    if (n > 20) throw InputError("face too large");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(f[i]);
      if (faces.insert(std::move(sub)).second &&
          static_cast<long long>(faces.size()) > limits.max_faces)
        throw CapError("face count exceeds cap " + std::to_string(limits.max_faces));
    }
  }

  SimplicialComplex c;
  c.vertex_count = vertex_count;
  // set iteration is lexicographic; its restriction to faces of one size is
  // still lexicographic, so each dimension bucket comes out sorted
  for (const auto& f : faces) {
    const std::size_t dim = f.size() - 1;
    if (dim >= c.faces_by_dim.size()) c.faces_by_dim.resize(dim + 1);
    c.faces_by_dim[dim].push_back(f);
  }
  return c;
}

std::string format_contract_kind(ContractKind k) {
  switch (k) {
    case ContractKind::None:
      return "none";
    case ContractKind::CenterRank:
      return "center_rank";
    case ContractKind::MaximumElement:
      return "maximum_element";
    case ContractKind::MinimumElement:
      return "minimum_element";
  }
  return "none";
}

ContractCert contractible_via_center(const GroupPtr& g, const ElemAbPoset& poset) {
  ContractCert cert;

  auto p_opt = g->p_group_prime();
  if (p_opt) {
    const long long p = *p_opt;
    // W = Omega_1(Z(G)): generated by the order-p central elements
    Subgroup zc = center(g);
    std::vector<elem_t> gens;
    for (elem_t c : zc.elements())
      if (g->element_order(c) == p) gens.push_back(c);
    if (!gens.empty()) {
      Subgroup w = closure(g, gens);
      auto rank = w.elementary_rank(p);
      if (rank && *rank >= 2 && *rank >= poset.min_rank) {
        cert.contractible = true;
        cert.kind = ContractKind::CenterRank;
        cert.witness = w;
        cert.detail = "Omega_1(Z) has rank " + std::to_string(*rank) +
                      "; E -> E*W is a conical contraction";
        return cert;
      }
    }
  }

  const long long n = poset.size();
  if (n == 0) {
    cert.detail = "empty poset";
    return cert;
  }
  // maximum: the unique member of top rank, containing every member
  {
    const int top = poset.ranks.back();
    if (n == 1 || poset.ranks[n - 2] != top) {
      bool is_max = true;
      for (long long i = 0; i + 1 < n && is_max; ++i)
        is_max = poset.leq(static_cast<int>(i), static_cast<int>(n - 1));
      if (is_max) {
        cert.contractible = true;
        cert.kind = ContractKind::MaximumElement;
        cert.witness = poset.members.back();
        cert.detail = "poset has a maximum member";
        return cert;
      }
    }
  }
  // minimum: the unique member of bottom rank, contained in every member
  {
    const int bottom = poset.ranks.front();
    if (n == 1 || poset.ranks[1] != bottom) {
      bool is_min = true;
      for (long long j = 1; j < n && is_min; ++j)
        is_min = poset.leq(0, static_cast<int>(j));
      if (is_min) {
        cert.contractible = true;
        cert.kind = ContractKind::MinimumElement;
        cert.witness = poset.members.front();
        cert.detail = "poset has a minimum member";
        return cert;
      }
    }
  }
  cert.detail = "no certificate found";
  return cert;
}

DecompositionRecord wedge_decompose(const GroupPtr& g, const ElemAbPoset& poset) {
  ChiResult chi = chi_set(g, poset);  // enforces cyclic center, |G'| in {p, p^2}
  if (chi.m.size() == g->order())
    throw InputError(
        "decomposition inapplicable: M = G (the derived subgroup is central)");

  DecompositionRecord rec{std::move(chi.e0), std::move(chi.m), std::move(chi.z),
                          std::move(chi.chi), {}};
  rec.locals.reserve(rec.chi.size());
  for (const Subgroup& e : rec.chi) {
    if (!e.contains_all(rec.z) || !rec.m.contains_all(rec.z))
      throw InternalError("chi member does not sit above Z");
    Subgroup ce = centralizer(g, e.elements());
    // P_i = C_M(E_i) = M intersect C_G(E_i)
    std::vector<elem_t> inter;
    std::set_intersection(rec.m.elements().begin(), rec.m.elements().end(),
                          ce.elements().begin(), ce.elements().end(),
                          std::back_inserter(inter));
    rec.locals.emplace_back(g, std::move(inter));
  }
  return rec;
}

DecompositionRecord wedge_decompose(const GroupPtr& g, const Limits& limits) {
  auto p_opt = g->p_group_prime();
  if (!p_opt) throw InputError(g->label() + " is not a p-group");
  return wedge_decompose(g, enumerate_elementary_abelian(g, *p_opt, 2, limits));
}

}  // namespace ap2
