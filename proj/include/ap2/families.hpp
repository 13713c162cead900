#pragma once

#include <string>
#include <vector>

#include "ap2/group.hpp"

namespace ap2 {

// Parameterized family of finite p-groups, parsed from / formatted to a
// canonical one-line text form:
//
//   S0 n=<n> m=<m> p=<p>            <x,y | x^(p^n)=y^(p^m)=1, [x,y]=x^(p^(n-1))>, n >= 2
//   S1 n=<n> m=<m> p=<p>            <x,y,z | x^(p^n)=y^(p^m)=z^p=1, [x,y]=z central>
//   extraspecial_plus p=<p>         alias of S1 n=1 m=1
//   extraspecial_minus p=<p>        alias of S0 n=2 m=1
//   abelian [f1,f2,...] p=<p>       direct product of C_fi, each fi a power of p
//   central_product [F1, F2, ...] p=<p>
//       factors F are S0(n,m), S1(n,m), abelian(f1,...), extraspecial_plus,
//       extraspecial_minus; all factors share the prime
//   jordan_semidirect d=<d> p=<p>   (C_p)^d semidirect C_p, single Jordan block action
struct FamilySpec {
  enum class Kind {
    S0,
    S1,
    ExtraspecialPlus,
    ExtraspecialMinus,
    Abelian,
    CentralProduct,
    JordanSemidirect,
  };

  Kind kind = Kind::Abelian;
  long long p = 0;
  int n = 0;
  int m = 0;
  int d = 0;
  std::vector<long long> invariant_factors;
  std::vector<FamilySpec> factors;

  bool operator==(const FamilySpec&) const = default;
};

FamilySpec parse_family(const std::string& text);
std::string format_family(const FamilySpec& spec);

// Validates parameters, builds the multiplication table by normal-form
// arithmetic, re-validates through GroupTable::from_table, and self-checks the
// defining relations. Label is the canonical text form.
GroupPtr build_family(const FamilySpec& spec, const Limits& limits = {});
GroupPtr build_family(const std::string& text, const Limits& limits = {});

GroupPtr build_S0(int n, int m, long long p, const Limits& limits = {});
GroupPtr build_S1(int n, int m, long long p, const Limits& limits = {});
GroupPtr build_extraspecial(long long p, bool plus, const Limits& limits = {});
GroupPtr build_abelian(const std::vector<long long>& invariant_factors, long long p,
                       const Limits& limits = {});
GroupPtr build_jordan_semidirect(long long p, int d, const Limits& limits = {});
// Builds the full direct product of the factors, then quotients by the central
// subgroup identifying all designated order-p central elements pairwise (full
// amalgamation into one shared central C_p; no other pattern is supported).
GroupPtr build_central_product(const std::vector<FamilySpec>& factors, long long p,
                               const Limits& limits = {});

// Abstract group generated by permutations of {0..degree-1}; elements are the
// distinct permutations, composition (g*h)(i) = h[g[i]].
GroupPtr group_from_permutations(const std::string& label, int degree,
                                 const std::vector<std::vector<int>>& generators,
                                 const Limits& limits = {});

}  // namespace ap2
