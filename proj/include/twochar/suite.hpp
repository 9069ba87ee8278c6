#pragma once

// The built-in verification matrix and randomized property suites, shared
// by `twochar verify --suite` and the acceptance binary.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "twochar/cohomology.hpp"
#include "twochar/io.hpp"
#include "twochar/two_rep.hpp"

namespace twochar {

struct MatrixCase {
  std::string group_name;
  std::string subgroup_name;
  std::string cocycle_name;  // "trivial" or "nontrivial"
  Subgroup subgroup;
  Cocycle cocycle;  // on subgroup.as_group(), modulus 2
  std::string label() const { return group_name + " > " + subgroup_name + " / " + cocycle_name; }
};

/// (S3, C2), (S3, C3), (D4, <s>), (D4, <rs>), (D4, <r^2>), (Q8, center),
/// (C2xC2, C2), (S4, S3), each with the trivial cocycle and, when
/// H^2(H, Z/2) is nonzero, one cocycle outside the trivial class.
std::vector<MatrixCase> induction_matrix();

/// A cocycle on g with values mod M that is not a coboundary, or nullopt
/// when H^2(g, Z/M) = 0. Deterministic.
std::optional<Cocycle> nontrivial_cocycle(const GroupPtr& g, int modulus);

/// decompose(induce(h, rho_omega)) has a single part (H', omega') with
/// H' conjugate to h by some s and omega transported by s cohomologous to omega'.
Report decomposition_round_trip(const Subgroup& h, const Cocycle& omega);

/// Builtin groups of order <= max_order, with names.
std::vector<std::pair<std::string, GroupPtr>> small_groups(int max_order);

// Randomized property suites; each reports the first counterexample.
Report check_two_class_property(int count, std::mt19937_64& rng);
Report check_psi_functoriality(int reps_per_group, std::mt19937_64& rng);
Report check_direct_sum_additivity(int count, std::mt19937_64& rng);
Report check_cyclotomic_identities(int max_level, int random_triples, std::mt19937_64& rng);
Report check_h2_cyclic(int max_n, int max_m);
Report check_coboundaries(int per_group, std::mt19937_64& rng);

struct SuiteEntry {
  std::string name;
  Report report;
  double seconds = 0;
};

/// The induction matrix (theorem, transfer formula, decomposition) followed by
/// the property suites, in a fixed order.
std::vector<SuiteEntry> run_suite(std::uint64_t seed);

Json to_json(const std::vector<SuiteEntry>& entries);

}  // namespace twochar
