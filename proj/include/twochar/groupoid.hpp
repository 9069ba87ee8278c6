#pragma once

// Finite groupoids, inertia groupoids and skeletons.

#include <memory>
#include <string>
#include <vector>

#include "twochar/group.hpp"

namespace twochar {

struct Morphism {
  int src;
  int tgt;
};

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

class FiniteGroupoid {
 public:
  /// `compose[f * M + g]` is f o g (g first) when tgt(g) == src(f), else -1.
  /// Identities and inverses are derived and every axiom is checked.
  static GroupoidPtr create(int num_objects, std::vector<Morphism> morphisms, std::vector<int> compose,
                            std::vector<std::string> object_labels = {},
                            std::vector<std::string> morphism_labels = {});

  /// A group as a one-object groupoid; morphism i is group element i.
  static GroupoidPtr from_group(const GroupPtr& g);

  FiniteGroupoid(const FiniteGroupoid&) = delete;
  FiniteGroupoid& operator=(const FiniteGroupoid&) = delete;

  int num_objects() const { return num_objects_; }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
  int src(int m) const { return morphisms_[m].src; }
  int tgt(int m) const { return morphisms_[m].tgt; }
  bool is_automorphism(int m) const { return src(m) == tgt(m); }
  /// f o g, or -1 when not composable.
  int compose(int f, int g) const { return compose_[static_cast<size_t>(f) * num_morphisms() + g]; }
  int identity(int object) const { return identity_[object]; }
  int inverse(int m) const { return inverse_[m]; }
  /// u -> g u g^-1 for an automorphism u of src(g).
  int conjugate(int g, int u) const { return compose(compose(g, u), inverse(g)); }

  /// Morphisms with the given source, increasing.
  const std::vector<int>& out(int object) const { return out_[object]; }
  /// Position of m inside out(src(m)).
  int out_position(int m) const { return out_position_[m]; }
  /// Automorphisms of the object, increasing.
  const std::vector<int>& automorphisms(int object) const { return automorphisms_[object]; }

  const std::string& object_label(int x) const { return object_labels_[x]; }
  const std::string& morphism_label(int m) const { return morphism_labels_[m]; }

 private:
  FiniteGroupoid() = default;

  int num_objects_ = 0;
  std::vector<Morphism> morphisms_;
  std::vector<int> compose_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> out_;
  std::vector<int> out_position_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<std::string> object_labels_;
  std::vector<std::string> morphism_labels_;
};

/// The inertia groupoid of a base groupoid together with its bookkeeping.
/// Objects are the automorphisms u of the base; for each base morphism g
/// out of src(u) there is one morphism u -> g u g^-1.
struct Inertia {
  GroupoidPtr base;
  GroupoidPtr groupoid;
  std::vector<int> object_auto;    // inertia object -> base automorphism
  std::vector<int> object_of_auto;  // base morphism -> inertia object, -1 if not an automorphism
  std::vector<int> morphism_base;  // inertia morphism -> base morphism
  std::vector<int> offset;         // inertia object -> id of its first outgoing morphism

  /// The inertia morphism labelled by base morphism g, out of object u.
  int morphism(int object, int base_morphism) const {
    return offset[object] + base->out_position(base_morphism);
  }
};

Inertia inertia_groupoid(const GroupoidPtr& base);

/// Inertia groupoid of a group: object u is element u, morphism u * n + g
/// is g : u -> g u g^-1.
Inertia inertia(const GroupPtr& g);

struct SkeletonComponent {
  int representative;
  std::vector<int> objects;        // increasing
  std::vector<int> automorphisms;  // Aut(representative); local element i
  GroupPtr group;                  // Aut(representative) as a group
};

struct GroupoidSkeleton {
  GroupoidPtr groupoid;
  std::vector<SkeletonComponent> components;
  std::vector<int> component_of;  // object -> component
  std::vector<int> transport;     // object -> least morphism from it to its representative
  std::vector<int> local_of;      // morphism -> local index in its component group, -1 unless an
                                  // automorphism of a representative

  /// Local group element t_y o m o t_x^-1 for m : x -> y.
  int transported(int m) const;
};

GroupoidSkeleton skeleton(const GroupoidPtr& g);

/// A functor between finite groupoids.
struct GroupoidMap {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<int> object_map;
  std::vector<int> morphism_map;
  bool faithful = false;
};

/// Checks functoriality and computes faithfulness; throws ValidationError.
GroupoidMap make_groupoid_map(GroupoidPtr source, GroupoidPtr target, std::vector<int> object_map,
                              std::vector<int> morphism_map);

GroupoidMap identity_map(const GroupoidPtr& g);

/// Lambda(H) -> Lambda(G) induced by a subgroup inclusion.
struct InertiaInclusion {
  Inertia sub;   // of H.as_group()
  Inertia full;  // of G
  GroupoidMap map;
};

InertiaInclusion groupoid_map_from_inclusion(const Subgroup& h);

}  // namespace twochar
