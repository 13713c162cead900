#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ap2/errors.hpp"
#include "ap2/families.hpp"
#include "ap2/group.hpp"

using namespace ap2;

namespace {

bool throws_with(const std::string& text, const std::string& needle) {
  try {
    (void)build_family(text);
  } catch (const InputError& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

long long count_order(const GroupPtr& g, int k) {
  long long c = 0;
  for (elem_t x = 0; x < g->order(); ++x)
    if (g->element_order(x) == k) ++c;
  return c;
}

}  // namespace

TEST_CASE("parse and format roundtrip") {
  const char* canonical[] = {
      "S0 n=2 m=1 p=3",
      "S1 n=2 m=1 p=3",
      "extraspecial_plus p=5",
      "extraspecial_minus p=3",
      "abelian [9,3] p=3",
      "abelian [3] p=3",
      "central_product [extraspecial_plus, extraspecial_plus] p=3",
      "central_product [S0(2,1), extraspecial_plus] p=3",
      "central_product [S1(1,1), abelian(9)] p=3",
      "jordan_semidirect d=3 p=5",
  };
  for (const char* text : canonical) {
    FamilySpec spec = parse_family(text);
    CHECK(format_family(spec) == text);
    CHECK(parse_family(format_family(spec)) == spec);
  }
  // whitespace and ordering tolerance normalizes to canonical text
  CHECK(format_family(parse_family("  S0   n=2   m=1   p=3 ")) ==
        "S0 n=2 m=1 p=3");
  CHECK(format_family(parse_family("abelian [ 9 , 3 ] p=3")) ==
        "abelian [9,3] p=3");
  CHECK(format_family(parse_family(
            "central_product [ S0( 2 , 1 ) , extraspecial_plus ] p=3")) ==
        "central_product [S0(2,1), extraspecial_plus] p=3");
}

TEST_CASE("parse errors name the position") {
  CHECK(throws_with("", "expected a word"));
  CHECK(throws_with("S0 n=2 m=1", "missing p="));
  CHECK(throws_with("S2 n=2 m=1 p=3", "unknown kind"));
  CHECK(throws_with("S0 n=2 m=1 p=3 extra", "trailing"));
  CHECK(throws_with("abelian [] p=3", "factor"));
  CHECK(throws_with("abelian [9,] p=3", "number"));
  CHECK(throws_with("central_product [jordan_semidirect(3)] p=3", "factor"));
  CHECK(throws_with("S0 n=x m=1 p=3", "number"));
}

TEST_CASE("family validation") {
  CHECK(throws_with("S0 n=1 m=1 p=3", "n >= 2"));
  CHECK(throws_with("S1 n=0 m=1 p=3", "n, m >= 1"));
  CHECK(throws_with("S0 n=2 m=0 p=3", "m >= 1"));
  CHECK(throws_with("extraspecial_plus p=4", "prime"));
  CHECK(throws_with("abelian [12] p=3", "power"));
  CHECK(throws_with("abelian [4] p=3", "power"));
  CHECK(throws_with("jordan_semidirect d=4 p=3", "Jordan block"));
  CHECK(throws_with("jordan_semidirect d=0 p=3", "d >= 1"));
  CHECK_NOTHROW(build_family("jordan_semidirect d=3 p=3"));
}

TEST_CASE("S0 structure") {
  GroupPtr g = build_S0(2, 1, 3);
  CHECK(g->order() == 27);
  CHECK(g->exponent() == 9);
  CHECK_FALSE(g->is_abelian());
  CHECK(center(g).size() == 3);
  CHECK(derived_subgroup(g).size() == 3);

  GroupPtr s220 = build_S0(2, 2, 3);
  CHECK(s220->order() == 81);
  CHECK(s220->exponent() == 9);
  Subgroup z = center(s220);
  CHECK(z.size() == 9);
  CHECK_FALSE(z.is_cyclic());
  CHECK(derived_subgroup(s220).size() == 3);

  GroupPtr d8 = build_S0(2, 1, 2);
  CHECK(d8->order() == 8);
  CHECK(d8->exponent() == 4);
  CHECK(count_order(d8, 2) == 5);  // dihedral: five involutions
}

TEST_CASE("S1 structure") {
  GroupPtr g = build_S1(2, 1, 3);
  CHECK(g->order() == 81);
  CHECK(g->exponent() == 9);
  Subgroup z = center(g);
  CHECK(z.size() == 9);
  CHECK_FALSE(z.is_cyclic());
  CHECK(derived_subgroup(g).size() == 3);

  GroupPtr h = build_S1(1, 1, 3);
  CHECK(h->order() == 27);
  CHECK(h->exponent() == 3);
  CHECK_FALSE(h->is_abelian());
}

TEST_CASE("extraspecial aliases") {
  GroupPtr plus = build_extraspecial(3, true);
  CHECK(plus->order() == 27);
  CHECK(plus->exponent() == 3);
  CHECK(center(plus).size() == 3);
  CHECK(derived_subgroup(plus) == center(plus));

  GroupPtr minus = build_extraspecial(3, false);
  CHECK(minus->order() == 27);
  CHECK(minus->exponent() == 9);
  CHECK(center(minus).size() == 3);
  CHECK(derived_subgroup(minus) == center(minus));

  GroupPtr plus5 = build_extraspecial(5, true);
  CHECK(plus5->order() == 125);
  CHECK(plus5->exponent() == 5);

  // aliases agree with their S-family counterparts up to label
  CHECK(build_family("extraspecial_minus p=3")->raw_table() ==
        build_S0(2, 1, 3)->raw_table());
  CHECK(build_family("extraspecial_plus p=3")->raw_table() ==
        build_S1(1, 1, 3)->raw_table());
}

TEST_CASE("abelian builder") {
  GroupPtr g = build_abelian({9, 3}, 3);
  CHECK(g->order() == 27);
  CHECK(g->is_abelian());
  CHECK(g->exponent() == 9);
  CHECK(count_order(g, 3) == 8);  // C9 x C3 has eight elements of order 3

  GroupPtr v = build_abelian({3, 3}, 3);
  CHECK(v->exponent() == 3);
  Subgroup whole(v, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(whole.elementary_rank(3) == 2);

  CHECK(build_abelian({27}, 3)->exponent() == 27);
}

TEST_CASE("jordan semidirect") {
  // d=1: the block is trivial, the action is trivial, the group is C_p x C_p
  GroupPtr j1 = build_jordan_semidirect(3, 1);
  CHECK(j1->order() == 9);
  CHECK(j1->is_abelian());
  CHECK(j1->exponent() == 3);

  // d=2: exponent p, nonabelian of order p^3
  GroupPtr j2 = build_jordan_semidirect(3, 2);
  CHECK(j2->order() == 27);
  CHECK_FALSE(j2->is_abelian());
  CHECK(j2->exponent() == 3);
  CHECK(center(j2).size() == 3);

  // d=3: the theorem showcase, order 81
  GroupPtr j3 = build_jordan_semidirect(3, 3);
  CHECK(j3->order() == 81);
  CHECK(j3->exponent() == 9);  // exponent p^2: the p-cycle piles up a shift
  Subgroup z = center(j3);
  CHECK(z.size() == 3);
  CHECK(z.is_cyclic());
  Subgroup d = derived_subgroup(j3);
  CHECK(d.size() == 9);
  CHECK(d.elementary_rank(3) == 2);

  GroupPtr j53 = build_jordan_semidirect(5, 3);
  CHECK(j53->order() == 625);
  CHECK(center(j53).size() == 5);
  CHECK(derived_subgroup(j53).elementary_rank(5) == 2);
}

TEST_CASE("central products") {
  GroupPtr cpp = build_family("central_product [extraspecial_plus, extraspecial_plus] p=3");
  CHECK(cpp->order() == 243);
  CHECK(cpp->exponent() == 3);
  CHECK(center(cpp).size() == 3);
  CHECK(derived_subgroup(cpp).size() == 3);

  GroupPtr cmp = build_family("central_product [S0(2,1), extraspecial_plus] p=3");
  CHECK(cmp->order() == 243);
  CHECK(cmp->exponent() == 9);
  CHECK(center(cmp).size() == 3);  // the amalgamated C_p, not 9
  CHECK(center(cmp).is_cyclic());
  CHECK(derived_subgroup(cmp).size() == 3);

  // amalgamating an abelian C_9 factor grows the center but not the rank-2 part
  GroupPtr hc9 = build_family("central_product [extraspecial_plus, abelian(9)] p=3");
  CHECK(hc9->order() == 81);
  CHECK(center(hc9).size() == 9);
  CHECK(center(hc9).is_cyclic());

  // H * C_3 identifies the centers and returns H itself
  GroupPtr hc3 = build_family("central_product [extraspecial_plus, abelian(3)] p=3");
  CHECK(hc3->order() == 27);
  CHECK(hc3->exponent() == 3);
  CHECK_FALSE(hc3->is_abelian());

  // a single factor is just a relabeled copy
  GroupPtr single = build_family("central_product [extraspecial_plus] p=3");
  CHECK(single->order() == 27);
  CHECK(single->raw_table() == build_extraspecial(3, true)->raw_table());

  // intermediate direct product respects the cap
  Limits tight;
  tight.max_order = 500;
  CHECK_THROWS_AS(
      build_family("central_product [extraspecial_plus, extraspecial_plus] p=3",
                   tight),
      CapError);
}

TEST_CASE("builders are deterministic") {
  const char* texts[] = {
      "S0 n=2 m=2 p=3",
      "central_product [S0(2,1), extraspecial_plus] p=3",
      "jordan_semidirect d=3 p=3",
  };
  for (const char* text : texts)
    CHECK(build_family(text)->raw_table() == build_family(text)->raw_table());
}

TEST_CASE("permutation groups") {
  // quaternion group from its left-regular representation
  const std::vector<std::vector<int>> q8gens = {{1, 4, 3, 6, 5, 0, 7, 2},
                                                {2, 7, 4, 1, 6, 3, 0, 5}};
  GroupPtr q8 = group_from_permutations("Q8", 8, q8gens);
  CHECK(q8->order() == 8);
  CHECK(q8->exponent() == 4);
  CHECK(center(q8).size() == 2);
  CHECK(derived_subgroup(q8).size() == 2);
  CHECK(count_order(q8, 2) == 1);  // unique involution
  CHECK(count_order(q8, 4) == 6);

  // single 9-cycle gives C9
  GroupPtr c9 = group_from_permutations("C9", 9, {{1, 2, 3, 4, 5, 6, 7, 8, 0}});
  CHECK(c9->order() == 9);
  Subgroup whole(c9, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(whole.is_cyclic());

  // determinism
  CHECK(group_from_permutations("Q8", 8, q8gens)->raw_table() ==
        q8->raw_table());

  // validation
  CHECK_THROWS_AS(group_from_permutations("bad", 3, {{0, 0, 1}}), InputError);
  CHECK_THROWS_AS(group_from_permutations("bad", 3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(group_from_permutations("bad", 3, {{0, 1, 3}}), InputError);
  Limits tight;
  tight.max_order = 4;
  CHECK_THROWS_AS(group_from_permutations("C9", 9, {{1, 2, 3, 4, 5, 6, 7, 8, 0}}, tight),
                  CapError);
}

TEST_CASE("build_family text overload and labels") {
  GroupPtr g = build_family("extraspecial_plus p=3");
  CHECK(g->label() == "extraspecial_plus p=3");
  GroupPtr j = build_family("jordan_semidirect d=3 p=3");
  CHECK(j->label() == "jordan_semidirect d=3 p=3");
  GroupPtr c = build_family("central_product [S0(2,1), extraspecial_plus] p=3");
  CHECK(c->label() == "central_product [S0(2,1), extraspecial_plus] p=3");
}
