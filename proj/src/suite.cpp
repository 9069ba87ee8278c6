#include "twochar/suite.hpp"

#include <chrono>
#include <numeric>

namespace twochar {

namespace {

int element(const GroupPtr& g, const std::string& label) {
  auto idx = g->find_label(label);
  if (!idx) throw Error("no element labelled " + label);
  return *idx;
}

Subgroup generated(const GroupPtr& g, const std::vector<std::string>& labels) {
  std::vector<int> gens;
  for (const auto& l : labels) gens.push_back(element(g, l));
  return Subgroup::generated_by(g, gens);
}

std::string pair_text(const FiniteGroup& g, int a, int b) { return "(" + g.label(a) + ", " + g.label(b) + ")"; }

GroupPtr alternating4() {
  return FiniteGroup::from_permutation_generators(4, {parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)});
}

}  // namespace

std::optional<Cocycle> nontrivial_cocycle(const GroupPtr& g, int modulus) {
  if (h2(*g, modulus).is_trivial()) return std::nullopt;
  std::mt19937_64 rng(0x5eed);
  const Cocycle zero = Cocycle::zero(g, modulus);
  // each draw lies outside the trivial class with probability >= 1/2
  while (true) {
    Cocycle c = random_cocycle(g, modulus, rng);
    if (!are_cohomologous(c, zero)) return c;
  }
}

std::vector<MatrixCase> induction_matrix() {
  struct Spec {
    std::string group_name;
    GroupPtr group;
    std::string subgroup_name;
    std::vector<std::string> generators;
  };
  const GroupPtr s3 = symmetric(3), d4 = dihedral(4), q8 = quaternion8(), k4 = direct_product(cyclic(2), cyclic(2)),
                 s4 = symmetric(4);
  const std::vector<Spec> specs = {
      {"S3", s3, "C2 = <(1 2)>", {"(1 2)"}},
      {"S3", s3, "C3 = <(1 2 3)>", {"(1 2 3)"}},
      {"D4", d4, "C2 = <s>", {"s"}},
      {"D4", d4, "C2 = <rs>", {"rs"}},
      {"D4", d4, "C2 = <r^2>", {"r^2"}},
      {"Q8", q8, "center = <-1>", {"-1"}},
      {"C2xC2", k4, "C2 = <(1,0)>", {"(1,0)"}},
      {"S4", s4, "S3 = <(1 2), (1 2 3)>", {"(1 2)", "(1 2 3)"}},
  };
  std::vector<MatrixCase> out;
  for (const Spec& s : specs) {
    Subgroup h = generated(s.group, s.generators);
    out.push_back({s.group_name, s.subgroup_name, "trivial", h, Cocycle::zero(h.as_group(), 2)});
    if (auto c = nontrivial_cocycle(h.as_group(), 2)) {
      out.push_back({s.group_name, s.subgroup_name, "nontrivial", h, *c});
    }
  }
  return out;
}

Report decomposition_round_trip(const Subgroup& h, const Cocycle& omega) {
  const TwoRep ind = induce_two_rep(h, from_cocycle(omega));
  const Decomposition d = decompose(ind);
  if (!d.verification) return Report::fail("decomposition check: " + d.verification.witness);
  if (d.parts.size() != 1) return Report::fail(std::to_string(d.parts.size()) + " parts, expected 1");
  const DecompositionPart& p = d.parts.front();
  if (!p.cocycle) return Report::fail("base-point scalars are not roots of unity");
  const auto s = conjugate_subgroup_witness(h, p.subgroup);
  if (!s) return Report::fail("stabilizer is not conjugate to the subgroup");
  TransportedCocycle t = transport_cocycle(omega, h, *s);
  if (!(t.subgroup == p.subgroup)) return Report::fail("transported subgroup differs from the stabilizer");
  const int m = std::lcm(t.cocycle.modulus(), p.cocycle->modulus());
  const Cocycle a = change_modulus(t.cocycle, m);
  const Cocycle b = change_modulus(*p.cocycle, m);
  if (!are_cohomologous(a, b)) return Report::fail("transported cocycle is not cohomologous to the recovered one");
  return Report::pass();
}

std::vector<std::pair<std::string, GroupPtr>> small_groups(int max_order) {
  std::vector<std::pair<std::string, GroupPtr>> all;
  for (int n = 1; n <= 12; ++n) all.emplace_back("C" + std::to_string(n), cyclic(n));
  for (int n = 2; n <= 6; ++n) all.emplace_back("D" + std::to_string(n), dihedral(n));
  all.emplace_back("S3", symmetric(3));
  all.emplace_back("Q8", quaternion8());
  all.emplace_back("C2xC2", direct_product(cyclic(2), cyclic(2)));
  all.emplace_back("C2xC4", direct_product(cyclic(2), cyclic(4)));
  all.emplace_back("C2xC2xC2", direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)));
  all.emplace_back("C3xC3", direct_product(cyclic(3), cyclic(3)));
  all.emplace_back("C2xC6", direct_product(cyclic(2), cyclic(6)));
  all.emplace_back("A4", alternating4());
  all.emplace_back("S4", symmetric(4));
  std::vector<std::pair<std::string, GroupPtr>> out;
  for (auto& e : all)
    if (e.second->order() <= max_order) out.push_back(std::move(e));
  return out;
}

Report check_two_class_property(int count, std::mt19937_64& rng) {
  const auto groups = small_groups(12);
  const int levels[] = {2, 3, 4, 6};
  for (int t = 0; t < count; ++t) {
    const auto& [name, g] = groups[rng() % groups.size()];
    const int level = levels[rng() % 4];
    const TwoRep rho = random_two_rep(g, level, 6, rng);
    if (Report r = check_two_rep(rho); !r) return Report::fail(name + ": generated 2-rep invalid: " + r.witness);
    const int n = g->order();
    // traces of psi directly, without going through TwoClassFunction
    std::vector<std::optional<CycNumber>> chi(static_cast<size_t>(n) * n);
    for (const auto& [a, b] : g->commuting_pairs().pairs) chi[a * n + b] = matrix_trace(psi(rho, a, b));
    for (const auto& [a, b] : g->commuting_pairs().pairs) {
      for (int s = 0; s < n; ++s) {
        const int si = g->inv(s);
        const int a2 = g->conj(si, a), b2 = g->conj(si, b);
        if (!(*chi[a2 * n + b2] == *chi[a * n + b])) {
          return Report::fail(name + ": chi" + pair_text(*g, a2, b2) + " != chi" + pair_text(*g, a, b) +
                              " with s = " + g->label(s));
        }
      }
    }
  }
  return Report::pass();
}

Report check_psi_functoriality(int reps_per_group, std::mt19937_64& rng) {
  for (const auto& [name, g] : small_groups(8)) {
    const int n = g->order();
    for (int t = 0; t < reps_per_group; ++t) {
      const TwoRep rho = random_two_rep(g, t % 2 ? 4 : 2, 6, rng);
      for (int x = 0; x < n; ++x) {
        if (!psi(rho, x, g->identity()).is_identity()) return Report::fail(name + ": psi(1) != id at " + g->label(x));
        std::vector<CycMatrix> p;
        for (int h = 0; h < n; ++h) p.push_back(psi(rho, x, h));
        for (int h1 = 0; h1 < n; ++h1) {
          for (int h2 = 0; h2 < n; ++h2) {
            if (!(p[g->mul(h1, h2)] == psi(rho, g->conj(h2, x), h1) * p[h2])) {
              return Report::fail(name + ": psi(h1 h2) != psi(h1) psi(h2) at g = " + g->label(x) +
                                  ", h1 = " + g->label(h1) + ", h2 = " + g->label(h2));
            }
          }
        }
      }
    }
  }
  return Report::pass();
}

Report check_direct_sum_additivity(int count, std::mt19937_64& rng) {
  const auto groups = small_groups(12);
  for (int t = 0; t < count; ++t) {
    const auto& [name, g] = groups[rng() % groups.size()];
    const TwoRep a = random_two_rep(g, 4, 5, rng), b = random_two_rep(g, 4, 5, rng);
    const TwoRep s = direct_sum(a, b);
    if (Report r = check_two_rep(s); !r) return Report::fail(name + ": direct sum invalid: " + r.witness);
    for (int x = 0; x < g->order(); ++x) {
      if (categorical_trace(s, x).dim() != categorical_trace(a, x).dim() + categorical_trace(b, x).dim()) {
        return Report::fail(name + ": trace dimension not additive at " + g->label(x));
      }
    }
    const TwoClassFunction cs = two_character(s), ca = two_character(a), cb = two_character(b);
    const auto& pairs = g->commuting_pairs().pairs;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (!(cs.values()[i] == ca.values()[i] + cb.values()[i])) {
        return Report::fail(name + ": chi not additive at " + pair_text(*g, pairs[i].first, pairs[i].second));
      }
    }
  }
  return Report::pass();
}

Report check_cyclotomic_identities(int max_level, int random_triples, std::mt19937_64& rng) {
  for (int n = 1; n <= max_level; ++n) {
    const CycNumber z = root_of_unity(n, 1);
    if (!z.pow(n).is_one()) return Report::fail("z" + std::to_string(n) + "^" + std::to_string(n) + " != 1");
    CycNumber sum(n);
    for (int k = 0; k < n; ++k) {
      const CycNumber w = root_of_unity(n, k);
      sum += w;
      if (!(w * root_of_unity(n, n - k)).is_one()) return Report::fail("z^k z^-k != 1 at level " + std::to_string(n));
      if (!(w.inverse() == root_of_unity(n, -k))) return Report::fail("inverse of z^k at level " + std::to_string(n));
    }
    if (n >= 2 && !sum.is_zero()) return Report::fail("roots of unity do not sum to 0 at level " + std::to_string(n));
  }
  auto random_element = [&](int level) {
    std::vector<BigRational> c(euler_phi(level));
    for (auto& q : c) {
      q = BigRational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1);
      q.canonicalize();
    }
    return CycNumber(level, std::move(c));
  };
  for (int t = 0; t < random_triples; ++t) {
    const int level = 1 + static_cast<int>(rng() % 12);
    const CycNumber a = random_element(level), b = random_element(level), c = random_element(level);
    const std::string at = " at level " + std::to_string(level);
    if (!((a * b) * c == a * (b * c))) return Report::fail("associativity" + at);
    if (!(a * (b + c) == a * b + a * c)) return Report::fail("distributivity" + at);
    if (!(a * b == b * a) || !(a + b == b + a)) return Report::fail("commutativity" + at);
    if (!a.is_zero() && !(a * a.inverse()).is_one()) return Report::fail("a a^-1 != 1" + at);
    const int m = level * (2 + static_cast<int>(rng() % 2));
    if (!(embed(a * b, m) == embed(a, m) * embed(b, m)) || !(embed(a + b, m) == embed(a, m) + embed(b, m))) {
      return Report::fail("embed is not a ring map" + at);
    }
  }
  return Report::pass();
}

Report check_h2_cyclic(int max_n, int max_m) {
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= max_m; ++m) {
      const CohomologyGroup h = h2(*cyclic(n), m);
      const std::int64_t d = std::gcd(n, m);
      const CohomologyGroup expected(d > 1 ? std::vector<std::int64_t>{d} : std::vector<std::int64_t>{});
      if (!(h == expected)) {
        return Report::fail("H^2(C" + std::to_string(n) + ", Z/" + std::to_string(m) + ") = " + h.to_string() +
                            ", expected " + expected.to_string());
      }
    }
  }
  return Report::pass();
}

Report check_coboundaries(int per_group, std::mt19937_64& rng) {
  for (const auto& [name, g] : small_groups(12)) {
    for (int t = 0; t < per_group; ++t) {
      const int m = 2 + static_cast<int>(rng() % 5);
      std::vector<int> b(g->order());
      for (int& x : b) x = static_cast<int>(rng() % m);
      try {
        const Cocycle c = coboundary(g, m, b);
        if (!are_cohomologous(c, Cocycle::zero(g, m))) return Report::fail(name + ": coboundary not trivial in H^2");
      } catch (const ValidationError& e) {
        return Report::fail(name + ": coboundary fails the cocycle check: " + e.what());
      }
    }
  }
  return Report::pass();
}

std::vector<SuiteEntry> run_suite(std::uint64_t seed) {
  std::vector<SuiteEntry> out;
  auto timed = [&](std::string name, auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    try {
      r = fn();
    } catch (const Error& e) {
      r = Report::fail(std::string("error: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back({std::move(name), std::move(r), s});
  };
  for (const MatrixCase& c : induction_matrix()) {
    timed("induction " + c.label(), [&] {
      const InductionReport r = verify_induction_theorem(c.subgroup, from_cocycle(c.cocycle));
      if (!r.classes) return Report::fail("Lambda(G) characters: " + r.classes.witness);
      if (!r.pairs) return Report::fail("transfer formula: " + r.pairs.witness);
      return decomposition_round_trip(c.subgroup, c.cocycle);
    });
  }
  std::mt19937_64 rng(seed);
  timed("2-class invariance", [&] { return check_two_class_property(40, rng); });
  timed("psi functoriality", [&] { return check_psi_functoriality(1, rng); });
  timed("direct sum additivity", [&] { return check_direct_sum_additivity(20, rng); });
  timed("cyclotomic identities", [&] { return check_cyclotomic_identities(24, 100, rng); });
  timed("H^2 of cyclic groups", [] { return check_h2_cyclic(6, 6); });
  timed("coboundaries", [&] { return check_coboundaries(3, rng); });
  return out;
}

Json to_json(const std::vector<SuiteEntry>& entries) {
  Json cases = Json::array();
  bool ok = true;
  for (const SuiteEntry& e : entries) {
    ok = ok && e.report.ok;
    Json j{{"name", e.name}, {"pass", e.report.ok}};
    if (!e.report.ok) j["counterexample"] = e.report.witness;
    cases.push_back(std::move(j));
  }
  return Json{{"pass", ok}, {"cases", std::move(cases)}};
}

}  // namespace twochar
