#pragma once

// 2-representations of a finite group on the 2-vector space [n].
//
// After a basis vector is fixed in every line L_g(j), a 2-representation is
// a permutation action sigma together with nonzero scalars
//   c_{g,h}(j) : rho(g) rho(h) => rho(gh) at column j,
//   d(j)       : rho(1) => id at column j,
// where column j of rho(g) rho(h) passes through sigma(h)(j). The coherence
// axioms become
//   c_{gh,k}(j) c_{g,h}(sigma_k j) = c_{g,hk}(j) c_{h,k}(j),
//   c_{1,g}(j) = d(sigma_g j),  c_{g,1}(j) = d(j).

#include <optional>
#include <random>
#include <vector>

#include "twochar/cohomology.hpp"
#include "twochar/cyclotomic.hpp"
#include "twochar/errors.hpp"
#include "twochar/group.hpp"
#include "twochar/grpd_rep.hpp"

namespace twochar {

class TwoRep {
 public:
  /// coh[(g * |G| + h) * n + j] = c_{g,h}(j); unit[j] = d(j). Shapes, levels
  /// and nonvanishing are checked here, the axioms by check_two_rep.
  TwoRep(GroupPtr group, int level, int n, std::vector<Permutation> sigma, std::vector<CycNumber> coh,
         std::vector<CycNumber> unit);

  /// sigma = id and all scalars 1.
  static TwoRep trivial(GroupPtr group, int level, int n);

  const GroupPtr& group() const { return group_; }
  int level() const { return level_; }
  int n() const { return n_; }
  const Permutation& sigma(int g) const { return sigma_[g]; }
  const std::vector<Permutation>& sigmas() const { return sigma_; }
  const CycNumber& coh(int g, int h, int j) const {
    return coh_[(static_cast<size_t>(g) * group_->order() + h) * n_ + j];
  }
  const std::vector<CycNumber>& coh_table() const { return coh_; }
  const CycNumber& unit(int j) const { return unit_[j]; }
  const std::vector<CycNumber>& units() const { return unit_; }

 private:
  GroupPtr group_;
  int level_;
  int n_;
  std::vector<Permutation> sigma_;
  std::vector<CycNumber> coh_;
  std::vector<CycNumber> unit_;
};

/// Homomorphism, twisted cocycle law and unit law, exhaustively.
Report check_two_rep(const TwoRep& rho);

/// The one-dimensional 2-rep with c_{g,h} = zeta_M^e(g,h) and d = c_{1,1}.
/// The level defaults to M.
TwoRep from_cocycle(const Cocycle& c, std::optional<int> level = std::nullopt);

/// The one-dimensional 2-rep with the given scalars c(h, h') (|G|^2 of them)
/// and d = c(1, 1).
TwoRep from_scalars(GroupPtr group, int level, std::vector<CycNumber> scalars);

/// Dimensions of the entries of a 2-matrix.
using DimMatrix = std::vector<std::vector<int>>;

/// The dimension pattern of rho(g): entry (sigma_g j, j) is 1.
DimMatrix dim_matrix(const TwoRep& rho, int g);

/// The permutation sigma with A(sigma j, j) = 1 and every other entry 0, if any.
/// Throws ShapeError for non-square input.
std::optional<Permutation> quasi_invertible(const DimMatrix& a);

struct TraceSpace {
  int element;
  std::vector<int> basis;  // Fix(sigma(element)), increasing
  int dim() const { return static_cast<int>(basis.size()); }
};

TraceSpace categorical_trace(const TwoRep& rho, int g);

/// The conjugation map Tr(rho(g)) -> Tr(rho(h g h^-1)), as a matrix in the
/// fixed-point bases.
CycMatrix psi(const TwoRep& rho, int g, int h);

/// The functor Lambda(G) -> Vect given by g -> Tr(rho(g)) and psi. `lam`
/// must be the inertia groupoid of rho.group().
GroupoidRep trace_rep(const TwoRep& rho, const Inertia& lam);

/// chi(g, h) = trace of psi(rho, g, h) on Tr(rho(g)).
TwoClassFunction two_character(const TwoRep& rho);

/// The joint trace of rho(g), rho(h) for a 2-isomorphism
/// eta : rho(h) rho(g) => rho(g) rho(h), given by its scalar at every column.
/// Throws ValidationError when sigma_g and sigma_h do not commute or eta is
/// malformed.
CycNumber joint_trace(const TwoRep& rho, int g, int h, const std::vector<CycNumber>& eta);

/// eta = phi_{g,h}^-1 phi_{h,g}, columnwise c_{h,g}(j) / c_{g,h}(j).
std::vector<CycNumber> canonical_eta(const TwoRep& rho, int g, int h);

TwoRep direct_sum(const TwoRep& a, const TwoRep& b);

/// Induction from a subgroup, with point (j, a) stored at j * n + a for the
/// coset representatives r_j of left_coset_representatives. rho must live
/// on h.as_group().
TwoRep induce_two_rep(const Subgroup& h, const TwoRep& rho);

/// Same as induce_two_rep with the given coset representatives (r_0 need
/// not be the identity).
TwoRep induce_two_rep(const Subgroup& h, const TwoRep& rho, const std::vector<int>& coset_reps);

struct DecompositionPart {
  Subgroup subgroup;               // stabilizer of base_point
  int base_point;
  std::vector<int> orbit;          // increasing
  std::vector<CycNumber> scalars;  // c_{h,h'}(base_point), local indices of subgroup
  std::optional<Cocycle> cocycle;  // exponent form, when every scalar is a root of unity
};

struct Decomposition {
  std::vector<DecompositionPart> parts;
  bool torsion = true;  // false when some part has non-root-of-unity scalars
  Report verification;  // two_character(rho) against the sum over the parts
};

/// Orbits of sigma with their stabilizers and base-point cocycles. Throws
/// ValidationError when a base-point table fails the cocycle identity.
Decomposition decompose(const TwoRep& rho);

/// phi(gh) == phi(g) phi(h) c(g, h) for all pairs.
Report check_projective_rep(const Cocycle& c, const std::vector<CycMatrix>& matrices);

struct InductionReport {
  Report classes;  // Lambda(G) characters of both sides
  Report pairs;    // 2-character against the transfer formula
  bool ok() const { return classes.ok && pairs.ok; }
};

/// Compares Tr(ind rho) with ind Tr(rho) classwise on Lambda(G), and
/// the 2-character of ind rho with hkr_induced_2class.
InductionReport verify_induction_theorem(const Subgroup& h, const TwoRep& rho);

/// A valid 2-rep of dimension at most max_n: a direct sum of inductions of
/// random cocycles (modulus = level) from random subgroups, changed by a
/// random gauge of nonzero scalars and a random relabelling of points.
TwoRep random_two_rep(const GroupPtr& group, int level, int max_n, std::mt19937_64& rng);

}  // namespace twochar
