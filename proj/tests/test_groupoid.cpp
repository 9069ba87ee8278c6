#include "doctest.h"
#include "twochar/errors.hpp"
#include "twochar/groupoid.hpp"

using namespace twochar;

TEST_SUITE("groupoid") {
  TEST_CASE("group as a one-object groupoid") {
    const GroupPtr s3 = symmetric(3);
    const GroupoidPtr g = FiniteGroupoid::from_group(s3);
    CHECK(g->num_objects() == 1);
    CHECK(g->num_morphisms() == 6);
    CHECK(g->identity(0) == s3->identity());
    for (int a = 0; a < 6; ++a) CHECK(g->inverse(a) == s3->inv(a));
  }

  TEST_CASE("inertia groupoid numbering") {
    const GroupPtr s3 = symmetric(3);
    const Inertia lam = inertia(s3);
    CHECK(lam.groupoid->num_objects() == 6);
    CHECK(lam.groupoid->num_morphisms() == 36);
    for (int u = 0; u < 6; ++u) {
      for (int g = 0; g < 6; ++g) {
        const int m = lam.morphism(u, g);
        CHECK(m == u * 6 + g);
        CHECK(lam.groupoid->src(m) == u);
        CHECK(lam.groupoid->tgt(m) == s3->conj(g, u));
      }
    }
  }

  TEST_CASE("skeleton of an inertia groupoid is a union of centralizers") {
    const GroupPtr d4 = dihedral(4);
    const GroupoidSkeleton sk = skeleton(inertia(d4).groupoid);
    CHECK(sk.components.size() == d4->conjugacy_classes().classes.size());
    for (const auto& c : sk.components) {
      CHECK(c.group->order() == centralizer(d4, c.representative).order());
      CHECK(static_cast<int>(c.objects.size()) * c.group->order() == d4->order());
    }
    const GroupoidPtr& l = sk.groupoid;
    for (int m = 0; m < l->num_morphisms(); ++m) {
      const int t = sk.transported(m);
      CHECK(t >= 0);
    }
  }

  TEST_CASE("invalid groupoid data") {
    // two objects, one non-invertible arrow between them
    std::vector<Morphism> ms{{0, 0}, {1, 1}, {0, 1}};
    std::vector<int> comp(9, -1);
    comp[0 * 3 + 0] = 0;
    comp[1 * 3 + 1] = 1;
    comp[2 * 3 + 0] = 2;
    comp[1 * 3 + 2] = 2;
    CHECK_THROWS_AS(FiniteGroupoid::create(2, ms, comp), ValidationError);
  }

  TEST_CASE("maps and faithfulness") {
    const GroupPtr s3 = symmetric(3);
    const int t = *s3->find_permutation(parse_cycles("(1 2)", 3));
    const Subgroup h = Subgroup::generated_by(s3, {t});
    const InertiaInclusion inc = groupoid_map_from_inclusion(h);
    CHECK(inc.map.faithful);
    CHECK(inc.sub.groupoid->num_objects() == 2);
    const GroupoidPtr g = FiniteGroupoid::from_group(s3);
    CHECK(identity_map(g).faithful);
    // the map to the trivial group is a functor but not faithful
    const GroupoidPtr one = FiniteGroupoid::from_group(cyclic(1));
    const GroupoidMap collapse = make_groupoid_map(g, one, {0}, std::vector<int>(6, 0));
    CHECK_FALSE(collapse.faithful);
    // a map that breaks composition
    std::vector<int> bad(6, 0);
    bad[t] = t;
    CHECK_THROWS_AS(make_groupoid_map(g, g, {0}, bad), ValidationError);
  }
}
