#pragma once

// Inhomogeneous 2-cocycles with values in the M-th roots of unity, stored
// additively: c(g, h) = zeta_M^e(g, h) with e(g, h) in Z/M.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twochar/cyclotomic.hpp"
#include "twochar/group.hpp"

namespace twochar {

inline constexpr int kDefaultH2Cap = 16;

/// Result of check_cocycle: on failure, the first triple (g1, g2, g3) in
/// lexicographic order violating the cocycle identity.
struct CocycleCheck {
  bool ok = true;
  int g1 = -1, g2 = -1, g3 = -1;
  explicit operator bool() const { return ok; }
};

/// e(g1 g2, g3) + e(g1, g2) == e(g1, g2 g3) + e(g2, g3) mod M for all triples.
/// `table` is row-major: table[g * n + h].
CocycleCheck check_cocycle(const FiniteGroup& g, int modulus, const std::vector<int>& table);

class Cocycle {
 public:
  /// Reduces entries mod M and validates the cocycle identity.
  Cocycle(GroupPtr group, int modulus, std::vector<int> exponents);

  static Cocycle zero(GroupPtr group, int modulus);

  const GroupPtr& group() const { return group_; }
  int modulus() const { return modulus_; }
  int exponent(int g, int h) const { return exponents_[static_cast<size_t>(g) * group_->order() + h]; }
  const std::vector<int>& exponents() const { return exponents_; }
  bool is_zero() const;

  /// zeta_M^e(g, h) at a level divisible by M.
  CycNumber value(int g, int h, int level) const;

  friend Cocycle operator+(const Cocycle& a, const Cocycle& b);
  friend Cocycle operator-(const Cocycle& a, const Cocycle& b);
  friend bool operator==(const Cocycle& a, const Cocycle& b);

 private:
  GroupPtr group_;
  int modulus_;
  std::vector<int> exponents_;
};

/// delta b (g, h) = b(g) + b(h) - b(gh) mod M.
Cocycle coboundary(GroupPtr group, int modulus, const std::vector<int>& b);

/// Some b with a - b' = delta b, or nullopt when the classes differ.
std::optional<std::vector<int>> are_cohomologous(const Cocycle& a, const Cocycle& b);

class CohomologyGroup {
 public:
  /// Factors > 1, each dividing the next.
  explicit CohomologyGroup(std::vector<std::int64_t> invariant_factors);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::int64_t order() const;
  bool is_trivial() const { return factors_.empty(); }
  /// "Z/2 x Z/2", or "trivial".
  std::string to_string() const;

  friend bool operator==(const CohomologyGroup& a, const CohomologyGroup& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<std::int64_t> factors_;
};

/// Canonical invariant factors of a direct sum of cyclic groups of the given orders.
std::vector<std::int64_t> canonical_invariant_factors(const std::vector<std::int64_t>& cyclic_orders);

/// H^2(G, Z/M) from Smith forms of the integer bar-complex coboundaries.
/// Throws SizeCapError when |G| exceeds the cap.
CohomologyGroup h2(const FiniteGroup& g, int modulus, int cap = kDefaultH2Cap);

/// The same cocycle read at a modulus divisible by the current one
/// (exponents scaled by new / old).
Cocycle change_modulus(const Cocycle& c, int modulus);

/// A cocycle drawn uniformly from Z^2(G, Z/M), via a Smith form of the
/// coboundary C^2 -> C^3.
Cocycle random_cocycle(GroupPtr group, int modulus, std::mt19937_64& rng);

/// Subtracts the constant coboundary e(1,1), giving e(1,g) = e(g,1) = 0.
Cocycle normalize_cocycle(const Cocycle& c);

struct TransportedCocycle {
  Subgroup subgroup;  // s H s^-1
  Cocycle cocycle;    // on subgroup.as_group()
};

/// e'(s h s^-1, s h' s^-1) = e(h, h') for c on h.as_group().
TransportedCocycle transport_cocycle(const Cocycle& c, const Subgroup& h, int s);

/// Invariant factors (nonzero diagonal, divisibility chain, ones kept) of an
/// integer matrix, rows x cols row-major. Throws Error on int64 overflow.
std::vector<std::int64_t> smith_invariant_factors(std::vector<std::int64_t> a, int rows, int cols);

}  // namespace twochar
