#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "twochar/errors.hpp"
#include "twochar/two_rep.hpp"

using namespace twochar;

namespace {

GroupPtr klein() { return direct_product(cyclic(2), cyclic(2)); }

std::vector<int> bilinear_table() {
  std::vector<int> e(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) e[a * 4 + b] = (a % 2) * (b / 2);
  return e;
}

int perm(const GroupPtr& g, const char* cycles) { return *g->find_permutation(parse_cycles(cycles, g->degree())); }

}  // namespace

TEST_SUITE("two_rep") {
  TEST_CASE("validation") {
    const GroupPtr s3 = symmetric(3);
    CHECK(check_two_rep(TwoRep::trivial(s3, 1, 3)).ok);
    const GroupPtr k = klein();
    const TwoRep rho = from_cocycle(Cocycle(k, 2, bilinear_table()));
    CHECK(check_two_rep(rho).ok);
    std::vector<CycNumber> coh = rho.coh_table();
    coh[1 * 4 + 2] *= CycNumber::integer(2, -1);
    const Report r = check_two_rep(TwoRep(k, 2, 1, rho.sigmas(), coh, rho.units()));
    CHECK_FALSE(r.ok);
    CHECK(r.witness.find("law") != std::string::npos);
    coh[1 * 4 + 2] = CycNumber::zero(2);
    CHECK_THROWS_AS(TwoRep(k, 2, 1, rho.sigmas(), coh, rho.units()), ValidationError);
  }

  TEST_CASE("quasi-invertible dimension matrices") {
    CHECK(quasi_invertible({{1, 0}, {0, 1}}) == Permutation{0, 1});
    CHECK(quasi_invertible({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}) == Permutation{1, 2, 0});
    CHECK_FALSE(quasi_invertible({{2, 0}, {0, 1}}).has_value());
    CHECK_FALSE(quasi_invertible({{1, 1}, {0, 1}}).has_value());
    CHECK_THROWS_AS(quasi_invertible({{1, 0}}), ShapeError);
    const GroupPtr s3 = symmetric(3);
    const Subgroup h = Subgroup::generated_by(s3, {perm(s3, "(1 2)")});
    const TwoRep ind = induce_two_rep(h, TwoRep::trivial(h.as_group(), 1, 1));
    for (int g = 0; g < 6; ++g) CHECK(quasi_invertible(dim_matrix(ind, g)) == ind.sigma(g));
  }

  TEST_CASE("traces and psi") {
    const GroupPtr s3 = symmetric(3);
    const TwoRep triv = TwoRep::trivial(s3, 1, 4);
    for (int g = 0; g < 6; ++g) CHECK(categorical_trace(triv, g).dim() == 4);
    const Subgroup h = Subgroup::generated_by(s3, {perm(s3, "(1 2)")});
    const TwoRep ind = induce_two_rep(h, TwoRep::trivial(h.as_group(), 1, 1));
    CHECK(check_two_rep(ind).ok);
    CHECK(categorical_trace(ind, s3->identity()).dim() == 3);
    CHECK(categorical_trace(ind, perm(s3, "(1 2)")).dim() == 1);
    CHECK(categorical_trace(ind, perm(s3, "(1 2 3)")).dim() == 0);
    const GroupPtr k = klein();
    const TwoRep rho = from_cocycle(Cocycle(k, 2, bilinear_table()));
    for (int g = 0; g < 4; ++g) {
      CHECK(categorical_trace(rho, g).dim() == 1);
      CHECK(psi(rho, g, k->identity()).is_identity());
    }
  }

  TEST_CASE("psi is functorial and trace_rep is a functor") {
    std::mt19937_64 rng(21);
    for (const GroupPtr& g : {symmetric(3), quaternion8(), dihedral(4), klein()}) {
      const TwoRep rho = random_two_rep(g, 4, 6, rng);
      REQUIRE(check_two_rep(rho).ok);
      const int n = g->order();
      for (int x = 0; x < n; ++x) {
        CHECK(psi(rho, x, g->identity()).is_identity());
        for (int h1 = 0; h1 < n; ++h1)
          for (int h2 = 0; h2 < n; ++h2)
            CHECK(psi(rho, x, g->mul(h1, h2)) == psi(rho, g->conj(h2, x), h1) * psi(rho, x, h2));
      }
      CHECK(check_functor(trace_rep(rho, inertia(g))).ok);
    }
  }

  TEST_CASE("two-characters") {
    const GroupPtr k = klein();
    const TwoClassFunction chi = two_character(from_cocycle(Cocycle(k, 2, bilinear_table())));
    // (1,0) is element 2, (0,1) is element 1
    CHECK(chi.value(2, 1) == CycNumber::integer(2, -1));
    const GroupPtr s3 = symmetric(3);
    const TwoClassFunction t = two_character(TwoRep::trivial(s3, 1, 3));
    for (const CycNumber& v : t.values()) CHECK(v == CycNumber::integer(1, 3));
    std::mt19937_64 rng(4);
    const TwoRep rho = random_two_rep(dihedral(4), 4, 6, rng);
    const TwoClassFunction c = two_character(rho);
    for (int g = 0; g < 8; ++g) CHECK(c.value(g, dihedral(4)->identity()) == CycNumber::integer(4, categorical_trace(rho, g).dim()));
  }

  TEST_CASE("joint trace") {
    std::mt19937_64 rng(8);
    for (const GroupPtr& g : {symmetric(3), dihedral(4), quaternion8()}) {
      const TwoRep rho = random_two_rep(g, 4, 6, rng);
      const TwoClassFunction chi = two_character(rho);
      for (const auto& [a, b] : g->commuting_pairs().pairs) {
        CHECK(joint_trace(rho, a, b, canonical_eta(rho, a, b)) == chi.value(a, b));
        // scaling eta scales tau
        std::vector<CycNumber> eta = canonical_eta(rho, a, b);
        const CycNumber lambda = CycNumber::integer(4, 3);
        for (auto& x : eta) x *= lambda;
        CHECK(joint_trace(rho, a, b, eta) == chi.value(a, b) * lambda);
      }
      const int e = g->identity();
      for (int a = 0; a < g->order(); ++a) {
        CHECK(joint_trace(rho, a, e, std::vector<CycNumber>(rho.n(), CycNumber::one(4))) ==
              CycNumber::integer(4, categorical_trace(rho, a).dim()));
      }
      std::vector<CycNumber> bad(rho.n(), CycNumber::one(4));
      bad[0] = CycNumber::zero(4);
      CHECK_THROWS_AS(joint_trace(rho, e, e, bad), ValidationError);
      CHECK_THROWS_AS(joint_trace(rho, e, e, {}), ValidationError);
    }
  }

  TEST_CASE("direct sums") {
    std::mt19937_64 rng(12);
    const GroupPtr g = quaternion8();
    const TwoRep a = random_two_rep(g, 4, 4, rng), b = random_two_rep(g, 4, 4, rng);
    const TwoRep s = direct_sum(a, b);
    CHECK(check_two_rep(s).ok);
    for (int x = 0; x < 8; ++x) CHECK(categorical_trace(s, x).dim() == categorical_trace(a, x).dim() + categorical_trace(b, x).dim());
    CHECK(two_character(s) == two_character(a) + two_character(b));
    const TwoRep empty = TwoRep::trivial(g, 4, 0);
    CHECK(two_character(direct_sum(a, empty)) == two_character(a));
  }

  TEST_CASE("induction") {
    const GroupPtr s3 = symmetric(3);
    const Subgroup whole = Subgroup::whole(s3);
    std::mt19937_64 rng(2);
    const TwoRep rho = random_two_rep(whole.as_group(), 2, 3, rng);
    const TwoRep same = induce_two_rep(whole, rho);
    CHECK(same.n() == rho.n());
    CHECK(same.coh_table() == rho.coh_table());

    const Subgroup h = Subgroup::generated_by(s3, {perm(s3, "(1 2)")});
    const TwoRep triv = TwoRep::trivial(h.as_group(), 1, 1);
    const TwoRep ind = induce_two_rep(h, triv);
    CHECK(two_character(ind) == hkr_induced_2class(h, two_character(triv)));
    // another transversal gives the same 2-character
    std::vector<int> reps = left_coset_representatives(h);
    std::reverse(reps.begin(), reps.end());
    for (int& r : reps) r = s3->mul(r, perm(s3, "(1 2)"));
    const TwoRep other = induce_two_rep(h, triv, reps);
    CHECK(check_two_rep(other).ok);
    CHECK(two_character(other) == two_character(ind));
  }

  TEST_CASE("decomposition") {
    const GroupPtr k = klein();
    const Cocycle bil(k, 2, bilinear_table());
    const Decomposition d = decompose(from_cocycle(bil));
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0].subgroup.order() == 4);
    REQUIRE(d.parts[0].cocycle.has_value());
    CHECK(are_cohomologous(*d.parts[0].cocycle, bil).has_value());
    CHECK(d.verification.ok);

    const Decomposition t = decompose(TwoRep::trivial(k, 2, 3));
    CHECK(t.parts.size() == 3);
    for (const auto& p : t.parts) CHECK(p.cocycle->is_zero());

    std::mt19937_64 rng(9);
    const TwoRep rho = random_two_rep(dihedral(4), 4, 6, rng);
    const Decomposition r = decompose(rho);
    CHECK(r.verification.ok);
  }

  TEST_CASE("projective representations") {
    const GroupPtr k = klein();
    const Cocycle bil(k, 2, bilinear_table());
    auto mat = [](long a, long b, long c, long d) {
      CycMatrix m(2, 2, 2);
      m(0, 0) = CycNumber::integer(2, a);
      m(0, 1) = CycNumber::integer(2, b);
      m(1, 0) = CycNumber::integer(2, c);
      m(1, 1) = CycNumber::integer(2, d);
      return m;
    };
    const CycMatrix x = mat(0, 1, 1, 0), z = mat(1, 0, 0, -1), id = CycMatrix::identity(2, 2);
    // element (a1, a2) -> X^a1 Z^a2
    std::vector<CycMatrix> phi{id, z, x, x * z};
    CHECK(check_projective_rep(bil, phi).ok);
    CHECK_FALSE(check_projective_rep(Cocycle::zero(k, 2), phi).ok);
    std::vector<CycMatrix> honest{id, z, z, id};
    CHECK(check_projective_rep(Cocycle::zero(k, 2), honest).ok);
    CHECK_FALSE(check_projective_rep(bil, honest).ok);
  }

  TEST_CASE("induction theorem on small cases") {
    const GroupPtr s3 = symmetric(3);
    const Subgroup h = Subgroup::generated_by(s3, {perm(s3, "(1 2)")});
    CHECK(verify_induction_theorem(h, TwoRep::trivial(h.as_group(), 1, 1)).ok());
    const Subgroup whole = Subgroup::whole(s3);
    CHECK(verify_induction_theorem(whole, TwoRep::trivial(whole.as_group(), 1, 2)).ok());
    const GroupPtr q8 = quaternion8();
    const Subgroup z = Subgroup::generated_by(q8, {*q8->find_label("-1")});
    const Cocycle nontrivial(z.as_group(), 2, {0, 0, 0, 1});
    CHECK(verify_induction_theorem(z, from_cocycle(nontrivial)).ok());
    std::mt19937_64 rng(31);
    const GroupPtr d4 = dihedral(4);
    const Subgroup v = Subgroup::generated_by(d4, {*d4->find_label("s"), *d4->find_label("r^2")});
    CHECK(verify_induction_theorem(v, random_two_rep(v.as_group(), 4, 4, rng)).ok());
  }
}
