#include "doctest.h"
#include "twochar/errors.hpp"
#include "twochar/group.hpp"

using namespace twochar;

TEST_SUITE("group") {
  TEST_CASE("builtin orders, classes and commuting pairs") {
    const GroupPtr s3 = symmetric(3);
    CHECK(s3->order() == 6);
    CHECK(s3->conjugacy_classes().classes.size() == 3);
    CHECK(s3->commuting_pairs().pairs.size() == 18);
    const GroupPtr q8 = quaternion8();
    CHECK(q8->conjugacy_classes().classes.size() == 5);
    CHECK(q8->commuting_pairs().pairs.size() == 40);
    CHECK(dihedral(4)->conjugacy_classes().classes.size() == 5);
    CHECK(symmetric(4)->commuting_pairs().pairs.size() == 24 * 5);
    CHECK(cyclic(1)->order() == 1);
    CHECK(direct_product(cyclic(2), cyclic(2))->is_abelian());
    CHECK_FALSE(q8->is_abelian());
  }

  TEST_CASE("commuting pairs equal |G| times the class number") {
    for (const GroupPtr& g : {cyclic(6), dihedral(3), dihedral(4), dihedral(6), quaternion8(), symmetric(4)}) {
      CHECK(g->commuting_pairs().pairs.size() == g->order() * g->conjugacy_classes().classes.size());
    }
  }

  TEST_CASE("permutations") {
    const Permutation p = parse_cycles("(1 2 3)", 3);
    CHECK(p == Permutation{1, 2, 0});
    CHECK(format_cycles(p) == "(1 2 3)");
    CHECK(format_cycles(identity_permutation(3)) == "()");
    CHECK(compose(p, inverse(p)) == identity_permutation(3));
    CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 4)", 3), ParseError);
  }

  TEST_CASE("permutation product acts right to left") {
    const GroupPtr g = FiniteGroup::from_permutation_generators(3, {parse_cycles("(1 2)", 3), parse_cycles("(2 3)", 3)});
    CHECK(g->order() == 6);
    const int a = *g->find_permutation(parse_cycles("(1 2)", 3));
    const int b = *g->find_permutation(parse_cycles("(2 3)", 3));
    CHECK(g->permutation(g->mul(a, b)) == compose(g->permutation(a), g->permutation(b)));
    CHECK_THROWS_AS(FiniteGroup::from_permutation_generators(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)}, 100),
                    SizeCapError);
  }

  TEST_CASE("invalid multiplication tables") {
    CHECK_THROWS_AS(FiniteGroup::from_mult_table({{0, 1}, {1, 1}}), ValidationError);
    // a Latin square with identity that is not associative (order 5 loop)
    const std::vector<std::vector<int>> loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_mult_table(loop), ValidationError);
  }

  TEST_CASE("subgroups, cosets, conjugacy") {
    const GroupPtr s3 = symmetric(3);
    const int t = *s3->find_permutation(parse_cycles("(1 2)", 3));
    const Subgroup h = Subgroup::generated_by(s3, {t});
    CHECK(h.order() == 2);
    CHECK(h.index() == 3);
    const auto reps = left_coset_representatives(h);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0] == s3->identity());
    const int u = *s3->find_permutation(parse_cycles("(1 3)", 3));
    const Subgroup k = Subgroup::generated_by(s3, {u});
    const auto s = conjugate_subgroup_witness(h, k);
    REQUIRE(s.has_value());
    CHECK(h.conjugate(*s) == k);
    const Subgroup c3 = Subgroup::generated_by(s3, {*s3->find_permutation(parse_cycles("(1 2 3)", 3))});
    CHECK_FALSE(conjugate_subgroup_witness(h, c3).has_value());
    CHECK_THROWS_AS(Subgroup(s3, {s3->identity(), t, u}), ValidationError);
    CHECK(centralizer(s3, t).order() == 2);
    CHECK(centralizer(s3, s3->identity()).order() == 6);
  }

  TEST_CASE("dihedral and quaternion labels") {
    const GroupPtr d4 = dihedral(4);
    CHECK(d4->find_label("rs").has_value());
    CHECK(d4->element_order(*d4->find_label("r")) == 4);
    const GroupPtr q8 = quaternion8();
    const int i = *q8->find_label("i"), j = *q8->find_label("j");
    CHECK(q8->label(q8->mul(i, j)) == "k");
    CHECK(q8->label(q8->mul(j, i)) == "-k");
  }
}
