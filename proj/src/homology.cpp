#include "ap2/homology.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "ap2/errors.hpp"

namespace ap2 {

using boost::multiprecision::cpp_int;

void SparseIntMatrix::add(int r, int c, long long v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw InputError("matrix entry out of range");
  if (v != 0) entries.push_back({r, c, v});
}

SparseIntMatrix SparseIntMatrix::from_dense(
    const std::vector<std::vector<long long>>& a) {
  SparseIntMatrix m;
  m.rows = static_cast<long long>(a.size());
  m.cols = a.empty() ? 0 : static_cast<long long>(a[0].size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (static_cast<long long>(a[r].size()) != m.cols)
      throw InputError("ragged dense matrix");
    for (std::size_t c = 0; c < a[r].size(); ++c)
      if (a[r][c] != 0)
        m.entries.push_back({static_cast<int>(r), static_cast<int>(c), a[r][c]});
  }
  return m;
}

namespace {

struct OverflowSignal {};

long long ops_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
long long ops_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
long long ops_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
long long ops_abs(long long v) {
  if (v == std::numeric_limits<long long>::min()) throw OverflowSignal{};
  return v < 0 ? -v : v;
}
long long ops_gcd(long long a, long long b) { return std::gcd(a, b); }

cpp_int ops_mul(const cpp_int& a, const cpp_int& b) { return a * b; }
cpp_int ops_sub(const cpp_int& a, const cpp_int& b) { return a - b; }
cpp_int ops_add(const cpp_int& a, const cpp_int& b) { return a + b; }
cpp_int ops_abs(const cpp_int& v) { return v < 0 ? cpp_int(-v) : v; }
cpp_int ops_gcd(const cpp_int& a, const cpp_int& b) {
  return boost::multiprecision::gcd(a, b);
}

// q with |a - q*b| <= |b|/2 (balanced remainder keeps entries small)
template <typename Int>
Int balanced_quot(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = ops_sub(a, ops_mul(q, b));
  Int ab = ops_abs(b);
  Int r2 = ops_add(r, r);
  if (r2 > ab)
    q += (b > 0 ? 1 : -1);
  else if (r2 < ops_sub(Int(0), ab))
    q -= (b > 0 ? 1 : -1);
  return q;
}

template <typename Int>
std::vector<Int> snf_diagonal(long long nrows, long long ncols,
                              const std::vector<SparseIntMatrix::Entry>& entries) {
  std::vector<std::map<int, Int>> rows(nrows);
  std::vector<std::set<int>> colrows(ncols);
  for (const auto& e : entries) {
    if (!rows[e.row].emplace(e.col, Int(e.value)).second)
      throw InputError("duplicate matrix entry");
    colrows[e.col].insert(e.row);
  }

  std::vector<char> row_done(nrows, 0), col_done(ncols, 0);

  // lazy min-heap of pivot candidates; stale keys are dropped on pop
  using Cand = std::tuple<Int, long long, int, int>;  // (|v|, fill, row, col)
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
  auto fill_of = [&](int r, int c) {
    return static_cast<long long>(rows[r].size() - 1) *
           static_cast<long long>(colrows[c].size() - 1);
  };
  auto push_cand = [&](int r, int c) {
    auto it = rows[r].find(c);
    if (it == rows[r].end()) return;
    heap.emplace(ops_abs(it->second), fill_of(r, c), r, c);
  };
  for (const auto& e : entries) push_cand(e.row, e.col);

  // rows[r2] -= q * rows[r]
  auto row_sub = [&](int r2, int r, const Int& q) {
    for (const auto& [c, v] : rows[r]) {
      Int delta = ops_mul(q, v);
      auto it = rows[r2].find(c);
      if (it == rows[r2].end()) {
        Int nv = ops_sub(Int(0), delta);
        if (nv != 0) {
          rows[r2].emplace(c, std::move(nv));
          colrows[c].insert(r2);
          push_cand(r2, c);
        }
      } else {
        it->second = ops_sub(it->second, delta);
        if (it->second == 0) {
          rows[r2].erase(it);
          colrows[c].erase(r2);
        } else {
          push_cand(r2, c);
        }
      }
    }
  };

  std::vector<Int> diag;
  while (!heap.empty()) {
    auto [av, fill, r, c] = heap.top();
    heap.pop();
    if (row_done[r] || col_done[c]) continue;
    auto it = rows[r].find(c);
    if (it == rows[r].end()) continue;
    if (ops_abs(it->second) != av || fill_of(r, c) != fill) {
      push_cand(r, c);  // refresh the stale candidate
      continue;
    }

    int pr = r, pc = c;
    while (true) {
      const Int pv = rows[pr].at(pc);
      // clear column pc by row operations
      {
        std::vector<int> others(colrows[pc].begin(), colrows[pc].end());
        for (int r2 : others) {
          if (r2 == pr) continue;
          Int q = balanced_quot(rows[r2].at(pc), pv);
          if (q != 0) row_sub(r2, pr, q);
        }
      }
      // a leftover remainder in the column is a strictly smaller pivot
      {
        int best = -1;
        for (int r2 : colrows[pc])
          if (r2 != pr && (best == -1 || ops_abs(rows[r2].at(pc)) <
                                             ops_abs(rows[best].at(pc))))
            best = r2;
        if (best != -1) {
          push_cand(pr, pc);  // the abandoned pivot entry stays live
          pr = best;
          continue;
        }
      }
      // clear row pr by column operations; column pc holds only the pivot
      // now, so each operation touches row pr alone
      {
        std::vector<int> cols_of_row;
        for (const auto& [c2, v2] : rows[pr])
          if (c2 != pc) cols_of_row.push_back(c2);
        for (int c2 : cols_of_row) {
          Int& v2 = rows[pr].at(c2);
          Int q = balanced_quot(v2, pv);
          if (q != 0) v2 = ops_sub(v2, ops_mul(q, pv));
          if (v2 == 0) {
            rows[pr].erase(c2);
            colrows[c2].erase(pr);
          } else if (q != 0) {
            push_cand(pr, c2);
          }
        }
      }
      {
        int best = -1;
        for (const auto& [c2, v2] : rows[pr])
          if (c2 != pc &&
              (best == -1 || ops_abs(v2) < ops_abs(rows[pr].at(best))))
            best = c2;
        if (best != -1) {
          push_cand(pr, pc);  // the abandoned pivot entry stays live
          pc = best;
          continue;
        }
      }
      break;  // pivot is isolated
    }

    diag.push_back(ops_abs(rows[pr][pc]));
    row_done[pr] = 1;
    col_done[pc] = 1;
    for (const auto& [c2, v2] : rows[pr]) colrows[c2].erase(pr);
    rows[pr].clear();
  }

  // restore the divisibility chain: the multiset of pivots determines the
  // invariant factors via pairwise gcd/lcm exchanges
  std::sort(diag.begin(), diag.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] == 0) continue;
        Int g = ops_gcd(diag[i], diag[j]);
        Int l = ops_mul(diag[i] / g, diag[j]);
        diag[i] = g;
        diag[j] = l;
        changed = true;
      }
    if (changed) std::sort(diag.begin(), diag.end());
  }
  return diag;
}

}  // namespace

SNFResult smith_normal_form(const SparseIntMatrix& a) {
  SNFResult out;
  try {
    auto diag = snf_diagonal<long long>(a.rows, a.cols, a.entries);
    out.diagonal = std::move(diag);
  } catch (const OverflowSignal&) {
    auto diag = snf_diagonal<cpp_int>(a.rows, a.cols, a.entries);
    out.escalated = true;
    out.diagonal.reserve(diag.size());
    for (const cpp_int& d : diag) {
      if (d > std::numeric_limits<long long>::max())
        throw CapError("invariant factor exceeds 64-bit range: " + d.str());
      out.diagonal.push_back(d.convert_to<long long>());
    }
  }
  out.rank = static_cast<long long>(out.diagonal.size());
  return out;
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int k) {
  if (k < 1 || k > c.dim()) throw InputError("boundary degree out of range");
  const auto& lower = c.faces_by_dim[k - 1];
  const auto& upper = c.faces_by_dim[k];

  SparseIntMatrix m;
  m.rows = static_cast<long long>(lower.size());
  m.cols = static_cast<long long>(upper.size());
  m.entries.reserve(upper.size() * (k + 1));

  std::vector<int> facet(k);
  for (std::size_t j = 0; j < upper.size(); ++j) {
    const auto& face = upper[j];
    long long sign = 1;
    for (int drop = 0; drop <= k; ++drop) {
      facet.clear();
      for (int i = 0; i <= k; ++i)
        if (i != drop) facet.push_back(face[i]);
      auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      if (it == lower.end() || *it != facet)
        throw InternalError("complex is not downward closed");
      m.entries.push_back({static_cast<int>(it - lower.begin()),
                           static_cast<int>(j), sign});
      sign = -sign;
    }
  }
  return m;
}

bool HomologyReport::all_zero() const {
  for (const auto& d : degrees)
    if (d.betti != 0 || !d.torsion.empty()) return false;
  return true;
}

bool HomologyReport::has_torsion() const {
  for (const auto& d : degrees)
    if (!d.torsion.empty()) return true;
  return false;
}

namespace {

long long component_count(const SimplicialComplex& c) {
  std::vector<int> parent(c.faces_by_dim[0].size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  // vertex index within the complex = position in the 0-face list
  std::map<int, int> vertex_pos;
  for (std::size_t i = 0; i < c.faces_by_dim[0].size(); ++i)
    vertex_pos[c.faces_by_dim[0][i][0]] = static_cast<int>(i);
  if (c.dim() >= 1)
    for (const auto& edge : c.faces_by_dim[1])
      parent[find(vertex_pos.at(edge[0]))] = find(vertex_pos.at(edge[1]));
  long long components = 0;
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (find(static_cast<int>(v)) == static_cast<int>(v)) ++components;
  return components;
}

}  // namespace

HomologyReport reduced_homology(const SimplicialComplex& c) {
  HomologyReport rep;
  if (c.empty()) {
    rep.empty_complex = true;
    rep.signature = sphere_signature(rep);
    return rep;
  }

  const int dim = c.dim();
  rep.f_vector = c.f_vector();
  rep.euler_characteristic = c.euler_characteristic();
  rep.degrees.resize(dim + 1);

  rep.boundary_snf.resize(dim + 1);  // [0] unused
  for (int k = 1; k <= dim; ++k)
    rep.boundary_snf[k] = smith_normal_form(boundary_matrix(c, k));

  auto rank_of = [&](int k) -> long long {
    return (k >= 1 && k <= dim) ? rep.boundary_snf[k].rank : 0;
  };

  const long long components = component_count(c);
  rep.degrees[0].betti = components - 1;
  if (components - 1 != rep.f_vector[0] - 1 - rank_of(1))
    throw InternalError("component count disagrees with rank of del_1");

  for (int j = 1; j <= dim; ++j) {
    rep.degrees[j].betti = rep.f_vector[j] - rank_of(j) - rank_of(j + 1);
    if (rep.degrees[j].betti < 0) throw InternalError("negative Betti number");
  }
  for (int j = 0; j < dim; ++j)
    for (long long d : rep.boundary_snf[j + 1].diagonal)
      if (d > 1) rep.degrees[j].torsion.push_back(d);

  long long reduced_sum = 0, sign = 1;
  for (int j = 0; j <= dim; ++j) {
    reduced_sum += sign * rep.degrees[j].betti;
    sign = -sign;
  }
  if (1 + reduced_sum != rep.euler_characteristic)
    throw InternalError("Euler characteristic mismatch");

  rep.signature = sphere_signature(rep);
  return rep;
}

Signature sphere_signature(const HomologyReport& report) {
  Signature s;
  if (report.empty_complex) {
    s.kind = SignatureKind::Empty;
    return s;
  }
  for (int j = 0; j < static_cast<int>(report.degrees.size()); ++j)
    if (report.degrees[j].betti > 0) s.degrees.push_back(j);

  if (report.has_torsion()) {
    s.kind = SignatureKind::TorsionPresent;
  } else if (s.degrees.empty()) {
    s.kind = SignatureKind::Acyclic;
  } else if (s.degrees.size() == 1) {
    s.kind = SignatureKind::SingleDegree;
    s.degree = s.degrees[0];
    s.count = report.degrees[s.degree].betti;
  } else {
    s.kind = SignatureKind::MultiDegree;
  }
  return s;
}

std::string format_signature(const Signature& s) {
  std::ostringstream out;
  switch (s.kind) {
    case SignatureKind::Empty:
      out << "empty";
      break;
    case SignatureKind::Acyclic:
      out << "acyclic";
      break;
    case SignatureKind::SingleDegree:
      out << "single_degree(" << s.degree << ", " << s.count << ")";
      break;
    case SignatureKind::MultiDegree: {
      out << "multi_degree(";
      for (std::size_t i = 0; i < s.degrees.size(); ++i) {
        if (i) out << ",";
        out << s.degrees[i];
      }
      out << ")";
      break;
    }
    case SignatureKind::TorsionPresent:
      out << "torsion_present";
      break;
  }
  return out.str();
}

}  // namespace ap2
