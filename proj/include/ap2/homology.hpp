#pragma once

#include <string>
#include <vector>

#include "ap2/complex.hpp"

namespace ap2 {

// Sparse integer matrix as an entry list (duplicates forbidden, zeros omitted).
struct SparseIntMatrix {
  long long rows = 0;
  long long cols = 0;
  struct Entry {
    int row;
    int col;
    long long value;
  };
  std::vector<Entry> entries;

  void add(int r, int c, long long v);
  static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& a);
};

struct SNFResult {
  std::vector<long long> diagonal;  // invariant factors d_1 | d_2 | ..., all >= 1
  long long rank = 0;               // == diagonal.size()
  bool escalated = false;           // overflowed 64-bit and reran in big integers
};

// Exact Smith normal form by sparse elimination: pivots chosen by
// (|value|, fill-in) from a lazy heap, balanced-remainder reduction, and a
// final gcd/lcm pass to restore the divisibility chain. 64-bit arithmetic
// with overflow detection; on overflow the whole reduction reruns in
// arbitrary precision. CapError if an invariant factor exceeds 64 bits.
SNFResult smith_normal_form(const SparseIntMatrix& a);

// Boundary map del_k of the complex: rows are (k-1)-faces, columns k-faces,
// entries the alternating-sign incidences. Requires 1 <= k <= dim.
SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int k);

struct DegreeHomology {
  long long betti = 0;
  std::vector<long long> torsion;  // invariant factors > 1, ascending
};

enum class SignatureKind { Empty, Acyclic, SingleDegree, MultiDegree, TorsionPresent };

// Verdict on which sphere dimensions occur: single_degree(d, count) means the
// reduced homology is Z^count concentrated in degree d, torsion-free.
struct Signature {
  SignatureKind kind = SignatureKind::Empty;
  int degree = -1;               // SingleDegree
  long long count = 0;           // SingleDegree
  std::vector<int> degrees;      // MultiDegree: degrees with nonzero betti
  bool operator==(const Signature&) const = default;
};

std::string format_signature(const Signature& s);

struct HomologyReport {
  bool empty_complex = false;
  std::vector<DegreeHomology> degrees;   // index = degree, 0..dim
  std::vector<long long> f_vector;
  long long euler_characteristic = 0;
  std::vector<SNFResult> boundary_snf;   // index k = SNF of del_k, k >= 1
  Signature signature;

  bool all_zero() const;
  bool has_torsion() const;
};

// Reduced integral homology of the whole complex. b~_0 comes from a
// union-find component count (cross-checked against rank del_1); higher
// degrees from f_j - rank del_j - rank del_(j+1); torsion in degree j from
// the invariant factors of del_(j+1). The empty complex is reported via the
// empty_complex flag, not a degree -1 entry.
HomologyReport reduced_homology(const SimplicialComplex& c);

Signature sphere_signature(const HomologyReport& report);

}  // namespace ap2
