// Acceptance criteria, one PASS/FAIL line each.
//
// usage: acceptance [--seed S] [--expect-fail i,j,...]
// Exit status is 0 when the set of failing criteria equals the expected set
// (empty by default), 1 otherwise.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "twochar/suite.hpp"

using namespace twochar;

namespace {

struct Outcome {
  Report report;
  std::vector<std::string> notes;  // informational, not part of the verdict
};

using Clock = std::chrono::steady_clock;

std::string pair_text(const FiniteGroup& g, int a, int b) { return "(" + g.label(a) + ", " + g.label(b) + ")"; }

Report within(double seconds, double limit) {
  if (seconds < limit) return Report::pass();
  std::ostringstream s;
  s << "took " << std::fixed << std::setprecision(2) << seconds << " s, limit " << limit << " s";
  return Report::fail(s.str());
}

// ---- 1, 2, 9: the induction matrix ----

Outcome criterion1(const std::vector<MatrixCase>& matrix) {
  const auto t0 = Clock::now();
  for (const MatrixCase& c : matrix) {
    const InductionReport r = verify_induction_theorem(c.subgroup, from_cocycle(c.cocycle));
    if (!r.classes) return {Report::fail(c.label() + ": " + r.classes.witness), {}};
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  return {within(s, 60), {std::to_string(matrix.size()) + " cases"}};
}

Outcome criterion2(const std::vector<MatrixCase>& matrix) {
  for (const MatrixCase& c : matrix) {
    const TwoRep ind = induce_two_rep(c.subgroup, from_cocycle(c.cocycle));
    const TwoClassFunction left = two_character(ind);
    const TwoClassFunction right = hkr_induced_2class(c.subgroup, two_character(from_cocycle(c.cocycle)));
    const auto& g = *c.subgroup.parent();
    const auto& pairs = g.commuting_pairs().pairs;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (!(left.values()[i] == right.values()[i])) {
        return {Report::fail(c.label() + ": differs at " + pair_text(g, pairs[i].first, pairs[i].second)), {}};
      }
    }
  }
  // (S3, C2, trivial): 3 at (e,e); 1 on pairs of transpositions/identity; 0 with a 3-cycle
  const MatrixCase& s3c2 = matrix.front();
  const GroupPtr& s3 = s3c2.subgroup.parent();
  const TwoClassFunction chi = two_character(induce_two_rep(s3c2.subgroup, from_cocycle(s3c2.cocycle)));
  for (const auto& [a, b] : s3->commuting_pairs().pairs) {
    const int oa = s3->element_order(a), ob = s3->element_order(b);
    int expected = 1;
    if (oa == 3 || ob == 3) expected = 0;
    if (oa == 1 && ob == 1) expected = 3;
    if (!(chi.value(a, b) == CycNumber::integer(chi.level(), expected))) {
      return {Report::fail("S3 > C2 trivial: chi" + pair_text(*s3, a, b) + " = " + format_cyclotomic(chi.value(a, b)) +
                           ", expected " + std::to_string(expected)),
              {}};
    }
  }
  return {Report::pass(), {}};
}

Outcome criterion9(const std::vector<MatrixCase>& matrix) {
  for (const MatrixCase& c : matrix) {
    const Report r = decomposition_round_trip(c.subgroup, c.cocycle);
    if (!r) return {Report::fail(c.label() + ": " + r.witness), {}};
  }
  return {Report::pass(), {}};
}

// ---- 3: n = 1 closed form ----

Outcome criterion3() {
  const auto t0 = Clock::now();
  const GroupPtr k = direct_product(cyclic(2), cyclic(2));
  const auto tables = oracle::all_cocycles(*k, 2);
  int disagree = 0, corrected_disagree = 0, normalized = 0, normalized_disagree = 0;
  std::string first;
  for (const auto& e : tables) {
    const Cocycle c(k, 2, e);
    const TwoClassFunction chi = two_character(from_cocycle(c));
    const bool is_normalized = c.exponent(0, 0) == 0;
    normalized += is_normalized;
    bool ok = true, ok_corrected = true;
    for (int f = 0; f < 4; ++f) {
      for (int g = 0; g < 4; ++g) {
        const int gi = k->inv(g);
        const CycNumber closed = c.value(g, f, 2) * c.value(k->mul(g, f), gi, 2) / c.value(g, gi, 2);
        const CycNumber value = chi.value(f, g);
        if (!(closed == value)) {
          if (ok && first.empty()) {
            std::ostringstream s;
            s << "e(1,1) = " << c.exponent(0, 0) << ": chi" << pair_text(*k, f, g) << " = " << format_cyclotomic(value)
              << ", closed form " << format_cyclotomic(closed);
            first = s.str();
          }
          ok = false;
        }
        if (!(closed / c.value(0, 0, 2) == value)) ok_corrected = false;
      }
    }
    disagree += !ok;
    corrected_disagree += !ok_corrected;
    if (is_normalized) normalized_disagree += !ok;
  }
  const int bilinear = [&] {
    std::vector<int> e(16);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) e[a * 4 + b] = (a / 2) * (b % 2);
    return two_character(from_cocycle(Cocycle(k, 2, e))).value(2, 1) == CycNumber::integer(2, -1);
  }();
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();

  std::vector<std::string> notes;
  notes.push_back(std::to_string(tables.size()) + " cocycles; closed form as stated disagrees on " +
                  std::to_string(disagree));
  notes.push_back("closed form times c(1,1)^-1 disagrees on " + std::to_string(corrected_disagree) + " of " +
                  std::to_string(tables.size()));
  notes.push_back("normalized cocycles (e(1,1) = 0): closed form disagrees on " + std::to_string(normalized_disagree) +
                  " of " + std::to_string(normalized));
  notes.push_back(std::string("bilinear cocycle chi((1,0),(0,1)) = -1: ") + (bilinear ? "yes" : "no"));
  if (!bilinear) return {Report::fail("bilinear cocycle value is not -1"), notes};
  if (disagree > 0) return {Report::fail(std::to_string(disagree) + " cocycles disagree, first: " + first), notes};
  return {within(s, 10), notes};
}

// ---- 6: groupoid induction ----

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::vector<std::vector<int>> found;
  auto add = [&](const Subgroup& h) {
    for (const auto& m : found)
      if (m == h.members()) return false;
    found.push_back(h.members());
    return true;
  };
  for (int x = 0; x < g->order(); ++x) add(Subgroup::generated_by(g, {x}));
  // close under joins
  for (size_t i = 0; i < found.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> gens = found[i];
      gens.insert(gens.end(), found[j].begin(), found[j].end());
      add(Subgroup::generated_by(g, gens));
    }
  }
  std::vector<Subgroup> out;
  for (auto& m : found) out.emplace_back(g, m);
  return out;
}

Report compare_induction(const GroupoidMap& alpha, const GroupoidRep& v, const std::string& what) {
  const GroupoidRep ind = induce(alpha, v);
  const ClassFunction chi = character(ind);
  const ClassFunction cv = character(v);
  const FiniteGroupoid& target = *alpha.target;
  for (int x = 0; x < target.num_objects(); ++x) {
    const oracle::TensorInduction t = oracle::tensor_induction(alpha, v, x);
    if (t.dim != ind.dim(x)) {
      return Report::fail(what + ": dimension " + std::to_string(ind.dim(x)) + " at object " +
                          target.object_label(x) + ", oracle " + std::to_string(t.dim));
    }
    const auto& auts = target.automorphisms(x);
    for (size_t a = 0; a < auts.size(); ++a) {
      if (!(t.traces[a] == chi.at(auts[a]))) {
        return Report::fail(what + ": character differs from the tensor oracle at " + target.morphism_label(auts[a]));
      }
      if (!(induced_character_value(alpha, cv, x, auts[a]) == chi.at(auts[a]))) {
        return Report::fail(what + ": induced_character_value differs at " + target.morphism_label(auts[a]));
      }
    }
  }
  return Report::pass();
}

Outcome criterion6(std::mt19937_64& rng) {
  int pairs = 0;
  for (const auto& [name, g] : small_groups(12)) {
    const GroupoidPtr gg = FiniteGroupoid::from_group(g);
    for (const Subgroup& h : all_subgroups(g)) {
      const std::string what = name + " > subgroup of order " + std::to_string(h.order());
      const TwoRep rho = random_two_rep(h.as_group(), 4, 4, rng);
      // Lambda(H) -> Lambda(G) with the trace representation of a random 2-rep
      const InertiaInclusion inc = groupoid_map_from_inclusion(h);
      if (Report r = compare_induction(inc.map, trace_rep(rho, inc.sub), what + " (inertia)"); !r) return {r, {}};
      // H -> G with the linear representation h -> psi(rho, 1, h)
      const GroupoidPtr hg = FiniteGroupoid::from_group(h.as_group());
      std::vector<CycMatrix> mats;
      for (int x = 0; x < h.order(); ++x) mats.push_back(psi(rho, h.as_group()->identity(), x));
      const GroupoidRep v(hg, rho.level(), {rho.n()}, std::move(mats));
      if (Report r = check_functor(v); !r) return {Report::fail(what + ": test representation invalid"), {}};
      if (Report r = compare_induction(group_inclusion_map(h, hg, gg), v, what + " (group)"); !r) return {r, {}};
      ++pairs;
    }
  }
  return {Report::pass(), {std::to_string(pairs) + " (G, H) pairs"}};
}

// ---- 7: cohomology ----

Outcome criterion7() {
  const auto t0 = Clock::now();
  if (Report r = check_h2_cyclic(6, 6); !r) return {r, {}};
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const GroupPtr c = cyclic(n);
      const auto z = oracle::all_cocycles(*c, m);
      const auto b = oracle::all_coboundaries(*c, m);
      const auto factors = oracle::quotient_invariant_factors(z, b, m);
      if (!(CohomologyGroup(factors) == h2(*c, m))) {
        return {Report::fail("C" + std::to_string(n) + ", M = " + std::to_string(m) + ": enumeration gives " +
                             CohomologyGroup(factors).to_string() + ", Smith form " + h2(*c, m).to_string()),
                {}};
      }
    }
  }
  const GroupPtr k = direct_product(cyclic(2), cyclic(2));
  const auto z = oracle::all_cocycles(*k, 2);
  const auto b = oracle::all_coboundaries(*k, 2);
  const CohomologyGroup enumerated(oracle::quotient_invariant_factors(z, b, 2));
  const CohomologyGroup expected({2, 2, 2});
  if (!(enumerated == expected)) return {Report::fail("C2xC2 enumeration gives " + enumerated.to_string()), {}};
  if (!(h2(*k, 2) == expected)) return {Report::fail("C2xC2 Smith form gives " + h2(*k, 2).to_string()), {}};
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  return {within(s, 30), {"C2xC2: " + std::to_string(z.size()) + " cocycles of 65536 tables, " +
                              std::to_string(b.size()) + " coboundaries"}};
}

// ---- 10: cyclotomic kernel ----

Outcome criterion10(std::mt19937_64& rng) {
  const auto t0 = Clock::now();
  if (Report r = check_cyclotomic_identities(24, 300, rng); !r) return {r, {}};
  // numeric cross-check of products and inverses
  for (int t = 0; t < 200; ++t) {
    const int level = 1 + static_cast<int>(rng() % 24);
    std::vector<BigRational> ca(euler_phi(level)), cb(euler_phi(level));
    for (auto& q : ca) q = BigRational(static_cast<long>(rng() % 11) - 5);
    for (auto& q : cb) q = BigRational(static_cast<long>(rng() % 11) - 5);
    const CycNumber a(level, ca), b(level, cb);
    const auto diff = oracle::evaluate(a * b) - oracle::evaluate(a) * oracle::evaluate(b);
    if (std::abs(diff) > 1e-6 * (1 + std::abs(oracle::evaluate(a * b)))) {
      return {Report::fail("product disagrees numerically at level " + std::to_string(level)), {}};
    }
    if (!a.is_zero() && std::abs(oracle::evaluate(a.inverse()) * oracle::evaluate(a) - 1.0) > 1e-6) {
      return {Report::fail("inverse disagrees numerically at level " + std::to_string(level)), {}};
    }
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  return {within(s, 5), {}};
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else if (arg == "--expect-fail" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) expected_failures.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--seed S] [--expect-fail i,j,...]\n";
      return 2;
    }
  }

  std::mt19937_64 rng(seed);
  const std::vector<MatrixCase> matrix = induction_matrix();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"induction theorem on Lambda(G) classes", [&] { return criterion1(matrix); }},
      {"2-character of induced rep equals the transfer formula", [&] { return criterion2(matrix); }},
      {"n = 1 closed form on all C2xC2 cocycles, M = 2", [] { return criterion3(); }},
      {"2-class invariance, 200 random 2-reps", [&] { return Outcome{check_two_class_property(200, rng), {}}; }},
      {"psi functoriality, groups of order <= 8", [&] { return Outcome{check_psi_functoriality(3, rng), {}}; }},
      {"groupoid induction against the tensor oracle", [&] { return criterion6(rng); }},
      {"H^2 by Smith form and by enumeration", [] { return criterion7(); }},
      {"direct sum additivity, 50 random pairs", [&] { return Outcome{check_direct_sum_additivity(50, rng), {}}; }},
      {"decomposition round trip on the induction matrix", [&] { return criterion9(matrix); }},
      {"cyclotomic kernel identities", [&] { return criterion10(rng); }},
  };

  std::set<int> failed;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.report = Report::fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!o.report.ok) failed.insert(id);
    std::cout << (o.report.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << criteria[i].first
              << "  [" << std::fixed << std::setprecision(2) << s << " s]";
    if (!o.report.ok) std::cout << "  -- " << o.report.witness;
    std::cout << "\n";
    for (const auto& n : o.notes) std::cout << "      note: " << n << "\n";
  }
  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria passed\n";
  if (failed != expected_failures) {
    std::cout << "failing set differs from the expected set\n";
    return 1;
  }
  return 0;
}
