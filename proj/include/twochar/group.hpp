#pragma once

// Finite groups given by multiplication tables.
//
// Elements are indices 0..n-1. mul(a, b) is the product ab; for
// permutation groups ab acts as "apply b, then a", so the attached
// permutation action is a left action.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twochar {

/// A permutation of {0..d-1} stored by images. Printed 1-based.
using Permutation = std::vector<int>;

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);
bool is_permutation(const Permutation& p);
Permutation identity_permutation(int degree);

/// Parses "(1 2)(3 4)" into a permutation of the given degree. "()" is the identity.
Permutation parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Permutation& p);

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;  // each sorted; front() is the representative
  std::vector<int> class_of;              // element -> class index
};

struct CommutingPairs {
  std::vector<std::pair<int, int>> pairs;  // ordered by (g, h)
  std::vector<int> index;                  // g * n + h -> pair index, -1 if gh != hg
  int find(int g, int h, int n) const { return index[static_cast<size_t>(g) * n + h]; }
};

inline constexpr int kDefaultGroupCap = 10080;

class FiniteGroup {
 public:
  /// Validates and wraps a multiplication table. Throws ValidationError
  /// naming a witness when an axiom fails. Associativity is checked
  /// exhaustively up to order 64 and on a deterministic sample above.
  static GroupPtr from_mult_table(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

  /// Closure of the generators, enumerated breadth-first from the identity.
  static GroupPtr from_permutation_generators(int degree, const std::vector<Permutation>& generators,
                                              int cap = kDefaultGroupCap);

  /// A complete list of permutations closed under composition, numbered as given.
  static GroupPtr from_permutation_list(int degree, std::vector<Permutation> elements);

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  /// s g s^-1
  int conj(int s, int g) const { return mul(mul(s, g), inverse_[s]); }
  int element_order(int g) const;
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;

  const std::string& label(int g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find_label(const std::string& label) const;

  /// Permutation action when the group was built from permutations.
  bool has_permutation_action() const { return !action_.empty(); }
  int degree() const { return degree_; }
  const Permutation& permutation(int g) const { return action_.at(g); }
  std::optional<int> find_permutation(const Permutation& p) const;

  const ConjugacyClasses& conjugacy_classes() const;
  const CommutingPairs& commuting_pairs() const;

  std::vector<std::vector<int>> table() const;

 private:
  FiniteGroup() = default;

  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  int degree_ = 0;
  std::vector<Permutation> action_;

  mutable std::once_flag classes_once_;
  mutable ConjugacyClasses classes_;
  mutable std::once_flag pairs_once_;
  mutable CommutingPairs pairs_;
};

/// Two groups with the same multiplication table, element by element.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

// Builtin groups. Element numbering:
//   cyclic(n):       k <-> a^k, labelled "k"
//   dihedral(n):     order 2n, k + n*e <-> r^k s^e, srs^-1 = r^-1
//   symmetric(n):    permutations of {1..n} in lexicographic order of images
//   quaternion8():   1, -1, i, -i, j, -j, k, -k
//   direct_product:  (a, b) <-> a * |H| + b, labelled "(la,lb)"
GroupPtr cyclic(int n);
GroupPtr dihedral(int n);
GroupPtr symmetric(int n);
GroupPtr quaternion8();
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);

/// A subgroup stored as a sorted element set of its parent, together with
/// a standalone copy whose element i is members()[i].
class Subgroup {
 public:
  /// Validates closure; throws ValidationError otherwise.
  Subgroup(GroupPtr parent, std::vector<int> elements);

  static Subgroup generated_by(GroupPtr parent, const std::vector<int>& generators);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  int index() const { return parent_->order() / order(); }
  bool contains(int g) const { return local_[g] >= 0; }
  /// Parent element -> standalone index, -1 when outside.
  int local(int g) const { return local_[g]; }
  int global(int local_index) const { return members_[local_index]; }
  /// The subgroup as a group in its own right.
  const GroupPtr& as_group() const { return standalone_; }

  /// s H s^-1
  Subgroup conjugate(int s) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<int> members_;
  std::vector<int> local_;
  GroupPtr standalone_;
};

Subgroup centralizer(const GroupPtr& g, int element);

/// One representative per left coset gH, least index first; r_1 is the identity.
std::vector<int> left_coset_representatives(const Subgroup& h);

/// Some s with s H1 s^-1 = H2 (least index), or nullopt.
std::optional<int> conjugate_subgroup_witness(const Subgroup& h1, const Subgroup& h2);

}  // namespace twochar
