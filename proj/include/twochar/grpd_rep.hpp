#pragma once

// Linear representations of finite groupoids over Q(zeta_N), their
// characters, restriction and induction.

#include <memory>
#include <vector>

#include "twochar/cyclotomic.hpp"
#include "twochar/errors.hpp"
#include "twochar/groupoid.hpp"

namespace twochar {

/// Conjugacy classes of automorphisms, i.e. isomorphism classes of objects
/// of the inertia groupoid. Classes are ordered by least member.
struct AutomorphismClasses {
  std::vector<std::vector<int>> classes;  // morphism ids, sorted; front() is the representative
  std::vector<int> class_of;              // morphism -> class, -1 for non-automorphisms
};

AutomorphismClasses automorphism_classes(const FiniteGroupoid& g);

class GroupoidRep {
 public:
  /// mats[m] has shape dims[tgt m] x dims[src m]. Shapes are checked here;
  /// functoriality is checked by check_functor.
  GroupoidRep(GroupoidPtr groupoid, int level, std::vector<int> dims, std::vector<CycMatrix> mats);

  /// The rep with every space k and every morphism acting by 1.
  static GroupoidRep trivial(GroupoidPtr groupoid, int level);

  const GroupoidPtr& groupoid() const { return groupoid_; }
  int level() const { return level_; }
  int dim(int object) const { return dims_[object]; }
  const std::vector<int>& dims() const { return dims_; }
  const CycMatrix& mat(int morphism) const { return mats_[morphism]; }
  const std::vector<CycMatrix>& mats() const { return mats_; }

 private:
  GroupoidPtr groupoid_;
  int level_;
  std::vector<int> dims_;
  std::vector<CycMatrix> mats_;
};

Report check_functor(const GroupoidRep& rep);

/// A function on conjugacy classes of automorphisms of a groupoid.
class ClassFunction {
 public:
  ClassFunction(GroupoidPtr groupoid, int level, std::vector<CycNumber> values);

  static ClassFunction constant(GroupoidPtr groupoid, const CycNumber& v);

  const GroupoidPtr& groupoid() const { return groupoid_; }
  int level() const { return level_; }
  const AutomorphismClasses& classes() const { return *classes_; }
  int num_classes() const { return static_cast<int>(values_.size()); }
  const CycNumber& value(int cls) const { return values_[cls]; }
  const std::vector<CycNumber>& values() const { return values_; }
  /// Value at an automorphism.
  const CycNumber& at(int automorphism) const;

  ClassFunction& operator+=(const ClassFunction& rhs);
  ClassFunction& operator-=(const ClassFunction& rhs);
  ClassFunction& operator*=(const ClassFunction& rhs);
  ClassFunction& operator*=(const CycNumber& s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const CycNumber& s) { return a *= s; }

  /// Throws ValidationError for functions on different groupoids.
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  void require_compatible(const ClassFunction& rhs) const;

  GroupoidPtr groupoid_;
  int level_;
  std::shared_ptr<const AutomorphismClasses> classes_;
  std::vector<CycNumber> values_;
};

ClassFunction character(const GroupoidRep& rep);

/// Precomposition with alpha : H -> rep.groupoid().
GroupoidRep restrict(const GroupoidRep& rep, const GroupoidMap& alpha);

/// Induction along a faithful alpha : H -> G, computed componentwise on
/// skeletons by classical induction with coset-representative bases.
/// Throws UnsupportedInputError when alpha is not faithful.
GroupoidRep induce(const GroupoidMap& alpha, const GroupoidRep& rep);

GroupoidRep direct_sum(const GroupoidRep& a, const GroupoidRep& b);

/// The induced character at the automorphism g of x, by the double sum
/// over objects y of H and morphisms s : x -> alpha(y) with s g s^-1 in
/// alpha(Aut_H(y)), weighted by 1 / (|orbit of y| |Aut_H(y)|).
CycNumber induced_character_value(const GroupoidMap& alpha, const ClassFunction& chi, int x, int g);

/// The inclusion H -> G of one-object groupoids.
GroupoidMap group_inclusion_map(const Subgroup& h, GroupoidPtr source, GroupoidPtr target);

/// A function on commuting pairs invariant under simultaneous conjugation.
class TwoClassFunction {
 public:
  /// values[i] belongs to commuting_pairs().pairs[i]; invariance is checked
  /// exhaustively and a violation throws ValidationError.
  TwoClassFunction(GroupPtr group, int level, std::vector<CycNumber> values);

  const GroupPtr& group() const { return group_; }
  int level() const { return level_; }
  const CycNumber& value(int g, int h) const;
  const std::vector<CycNumber>& values() const { return values_; }

  /// One representative per orbit of commuting pairs, by least pair index.
  std::vector<int> orbit_representatives() const;

  friend TwoClassFunction operator+(const TwoClassFunction& a, const TwoClassFunction& b);
  friend bool operator==(const TwoClassFunction& a, const TwoClassFunction& b);

 private:
  GroupPtr group_;
  int level_;
  std::vector<CycNumber> values_;
};

/// Reads a class function on Lambda(G) as a 2-class function: the
/// automorphism h of object g is the commuting pair (g, h).
TwoClassFunction to_two_class_function(const GroupPtr& group, const Inertia& lam, const ClassFunction& chi);

/// (1/|H|) sum over s in G with s g1 s^-1, s g2 s^-1 in H of chi(s g1 s^-1, s g2 s^-1).
TwoClassFunction hkr_induced_2class(const Subgroup& h, const TwoClassFunction& chi);

}  // namespace twochar
