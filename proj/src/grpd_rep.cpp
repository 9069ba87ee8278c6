#include "twochar/grpd_rep.hpp"

#include <algorithm>
#include <map>

namespace twochar {

AutomorphismClasses automorphism_classes(const FiniteGroupoid& g) {
  AutomorphismClasses out;
  out.class_of.assign(g.num_morphisms(), -1);
  for (int u = 0; u < g.num_morphisms(); ++u) {
    if (!g.is_automorphism(u) || out.class_of[u] >= 0) continue;
    const int id = static_cast<int>(out.classes.size());
    std::vector<int> cls;
    for (int s : g.out(g.src(u))) {
      const int v = g.conjugate(s, u);
      if (out.class_of[v] < 0) {
        out.class_of[v] = id;
        cls.push_back(v);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

GroupoidRep::GroupoidRep(GroupoidPtr groupoid, int level, std::vector<int> dims, std::vector<CycMatrix> mats)
    : groupoid_(std::move(groupoid)), level_(level), dims_(std::move(dims)), mats_(std::move(mats)) {
  if (static_cast<int>(dims_.size()) != groupoid_->num_objects()) throw ShapeError("one dimension per object required");
  if (static_cast<int>(mats_.size()) != groupoid_->num_morphisms()) throw ShapeError("one matrix per morphism required");
  for (int d : dims_) {
    if (d < 0) throw ShapeError("negative dimension");
  }
  for (int m = 0; m < groupoid_->num_morphisms(); ++m) {
    const CycMatrix& a = mats_[m];
    if (a.rows() != dims_[groupoid_->tgt(m)] || a.cols() != dims_[groupoid_->src(m)]) {
      throw ShapeError("matrix of morphism " + groupoid_->morphism_label(m) + " has the wrong shape");
    }
    if (a.level() != level_) throw LevelMismatchError("matrix level differs from the representation level");
  }
}

GroupoidRep GroupoidRep::trivial(GroupoidPtr groupoid, int level) {
  std::vector<int> dims(groupoid->num_objects(), 1);
  std::vector<CycMatrix> mats(groupoid->num_morphisms(), CycMatrix::identity(level, 1));
  return GroupoidRep(std::move(groupoid), level, std::move(dims), std::move(mats));
}

Report check_functor(const GroupoidRep& rep) {
  const FiniteGroupoid& g = *rep.groupoid();
  for (int x = 0; x < g.num_objects(); ++x) {
    if (!rep.mat(g.identity(x)).is_identity()) {
      return Report::fail("identity of object " + g.object_label(x) + " does not act by the identity");
    }
  }
  for (int b = 0; b < g.num_morphisms(); ++b) {
    for (int a : g.out(g.tgt(b))) {
      if (!(rep.mat(g.compose(a, b)) == rep.mat(a) * rep.mat(b))) {
        return Report::fail("composition fails on (" + g.morphism_label(a) + ", " + g.morphism_label(b) + ")");
      }
    }
  }
  return Report::pass();
}

ClassFunction::ClassFunction(GroupoidPtr groupoid, int level, std::vector<CycNumber> values)
    : groupoid_(std::move(groupoid)),
      level_(level),
      classes_(std::make_shared<const AutomorphismClasses>(automorphism_classes(*groupoid_))),
      values_(std::move(values)) {
  if (values_.size() != classes_->classes.size()) {
    throw ShapeError("class function needs " + std::to_string(classes_->classes.size()) + " values, got " +
                     std::to_string(values_.size()));
  }
  for (const CycNumber& v : values_) {
    if (v.level() != level_) throw LevelMismatchError("class function value at the wrong level");
  }
}

ClassFunction ClassFunction::constant(GroupoidPtr groupoid, const CycNumber& v) {
  const size_t k = automorphism_classes(*groupoid).classes.size();
  return ClassFunction(std::move(groupoid), v.level(), std::vector<CycNumber>(k, v));
}

const CycNumber& ClassFunction::at(int automorphism) const {
  const int c = classes_->class_of.at(automorphism);
  if (c < 0) throw ParameterError("morphism is not an automorphism");
  return values_[c];
}

void ClassFunction::require_compatible(const ClassFunction& rhs) const {
  if (groupoid_ != rhs.groupoid_) throw ValidationError("class functions live on different groupoids");
  if (level_ != rhs.level_) throw LevelMismatchError("class functions at different levels");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
  require_compatible(rhs);
  for (size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& rhs) {
  require_compatible(rhs);
  for (size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& rhs) {
  require_compatible(rhs);
  for (size_t i = 0; i < values_.size(); ++i) values_[i] *= rhs.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const CycNumber& s) {
  for (CycNumber& v : values_) v *= s;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  a.require_compatible(b);
  return a.values_ == b.values_;
}

ClassFunction character(const GroupoidRep& rep) {
  const AutomorphismClasses cls = automorphism_classes(*rep.groupoid());
  std::vector<CycNumber> values;
  values.reserve(cls.classes.size());
  for (const auto& c : cls.classes) values.push_back(matrix_trace(rep.mat(c.front())));
  return ClassFunction(rep.groupoid(), rep.level(), std::move(values));
}

GroupoidRep restrict(const GroupoidRep& rep, const GroupoidMap& alpha) {
  if (alpha.target != rep.groupoid()) throw ValidationError("groupoid map does not land in the rep's groupoid");
  std::vector<int> dims;
  std::vector<CycMatrix> mats;
  for (int y : alpha.object_map) dims.push_back(rep.dim(y));
  for (int m : alpha.morphism_map) mats.push_back(rep.mat(m));
  return GroupoidRep(alpha.source, rep.level(), std::move(dims), std::move(mats));
}

namespace {

// One summand Ind_{alpha(K)}^{G_c} V(y0) of the induced rep at a
// representative object of the target.
struct InductionBlock {
  int source_rep;                 // representative object y0 of the source component
  std::vector<int> automorphisms;  // Aut_H(y0), local index = position
  std::vector<int> preimage;      // target local group element -> local index in K, or -1
  std::vector<int> reps;          // left coset representatives r_j (local elements)
  std::vector<int> coset_of;      // local element -> j with element in r_j S
  int dim;                        // dim V(y0)
};

}  // namespace

GroupoidRep induce(const GroupoidMap& alpha, const GroupoidRep& rep) {
  if (alpha.source != rep.groupoid()) throw ValidationError("rep does not live on the source of the groupoid map");
  if (!alpha.faithful) throw UnsupportedInputError("induction requires a faithful groupoid map");
  const FiniteGroupoid& g = *alpha.target;
  const GroupoidSkeleton skh = skeleton(alpha.source);
  const GroupoidSkeleton skg = skeleton(alpha.target);
  const int level = rep.level();

  std::vector<std::vector<InductionBlock>> blocks(skg.components.size());
  for (const SkeletonComponent& kc : skh.components) {
    const int y0 = kc.representative;
    const int x = alpha.object_map[y0];
    const int c = skg.component_of[x];
    const SkeletonComponent& gc = skg.components[c];
    const int s = skg.transport[x];
    InductionBlock b;
    b.source_rep = y0;
    b.automorphisms = kc.automorphisms;
    b.preimage.assign(gc.group->order(), -1);
    std::vector<int> image;
    for (size_t i = 0; i < kc.automorphisms.size(); ++i) {
      const int a = alpha.morphism_map[kc.automorphisms[i]];
      const int t = g.compose(g.compose(s, a), g.inverse(s));
      const int local = skg.local_of[t];
      b.preimage[local] = static_cast<int>(i);
      image.push_back(local);
    }
    const Subgroup sub(gc.group, image);
    b.reps = left_coset_representatives(sub);
    b.coset_of.assign(gc.group->order(), -1);
    for (size_t j = 0; j < b.reps.size(); ++j) {
      for (int k : sub.members()) b.coset_of[gc.group->mul(b.reps[j], k)] = static_cast<int>(j);
    }
    b.dim = rep.dim(y0);
    blocks[c].push_back(std::move(b));
  }

  std::vector<int> comp_dim(skg.components.size(), 0);
  for (size_t c = 0; c < blocks.size(); ++c) {
    for (const auto& b : blocks[c]) comp_dim[c] += static_cast<int>(b.reps.size()) * b.dim;
  }

  // matrices depend only on (component, transported local element)
  std::map<std::pair<int, int>, CycMatrix> cache;
  auto matrix_for = [&](int c, int el) -> const CycMatrix& {
    auto it = cache.find({c, el});
    if (it != cache.end()) return it->second;
    const FiniteGroup& grp = *skg.components[c].group;
    CycMatrix m(level, comp_dim[c], comp_dim[c]);
    int offset = 0;
    for (const auto& b : blocks[c]) {
      for (size_t j = 0; j < b.reps.size(); ++j) {
        const int grj = grp.mul(el, b.reps[j]);
        const int i = b.coset_of[grj];
        const int hh = grp.mul(grp.inv(b.reps[i]), grj);
        const CycMatrix& v = rep.mat(b.automorphisms[b.preimage[hh]]);
        for (int r = 0; r < b.dim; ++r)
          for (int q = 0; q < b.dim; ++q) m(offset + i * b.dim + r, offset + static_cast<int>(j) * b.dim + q) = v(r, q);
      }
      offset += static_cast<int>(b.reps.size()) * b.dim;
    }
    return cache.emplace(std::make_pair(c, el), std::move(m)).first->second;
  };

  std::vector<int> dims(g.num_objects());
  for (int x = 0; x < g.num_objects(); ++x) dims[x] = comp_dim[skg.component_of[x]];
  std::vector<CycMatrix> mats;
  mats.reserve(g.num_morphisms());
  for (int m = 0; m < g.num_morphisms(); ++m) {
    mats.push_back(matrix_for(skg.component_of[g.src(m)], skg.transported(m)));
  }
  return GroupoidRep(alpha.target, level, std::move(dims), std::move(mats));
}

GroupoidRep direct_sum(const GroupoidRep& a, const GroupoidRep& b) {
  if (a.groupoid() != b.groupoid()) throw ValidationError("direct sum of reps on different groupoids");
  if (a.level() != b.level()) throw LevelMismatchError("direct sum of reps at different levels");
  std::vector<int> dims;
  std::vector<CycMatrix> mats;
  for (int x = 0; x < a.groupoid()->num_objects(); ++x) dims.push_back(a.dim(x) + b.dim(x));
  for (int m = 0; m < a.groupoid()->num_morphisms(); ++m) mats.push_back(direct_sum(a.mat(m), b.mat(m)));
  return GroupoidRep(a.groupoid(), a.level(), std::move(dims), std::move(mats));
}

CycNumber induced_character_value(const GroupoidMap& alpha, const ClassFunction& chi, int x, int g) {
  if (chi.groupoid() != alpha.source) throw ValidationError("class function does not live on the source");
  if (!alpha.faithful) throw UnsupportedInputError("induced character formula requires a faithful groupoid map");
  const FiniteGroupoid& h = *alpha.source;
  const FiniteGroupoid& gg = *alpha.target;
  if (gg.src(g) != x || gg.tgt(g) != x) throw ParameterError("g is not an automorphism of x");
  const GroupoidSkeleton skh = skeleton(alpha.source);
  CycNumber total(chi.level());
  for (int y = 0; y < h.num_objects(); ++y) {
    const int ay = alpha.object_map[y];
    const auto& auts = h.automorphisms(y);
    CycNumber inner(chi.level());
    for (int s : gg.out(x)) {
      if (gg.tgt(s) != ay) continue;
      const int t = gg.conjugate(s, g);
      for (int k : auts) {
        if (alpha.morphism_map[k] == t) {
          inner += chi.at(k);
          break;
        }
      }
    }
    if (inner.is_zero()) continue;
    const long orbit = static_cast<long>(skh.components[skh.component_of[y]].objects.size());
    total += inner * BigRational(1, orbit * static_cast<long>(auts.size()));
  }
  return total;
}

GroupoidMap group_inclusion_map(const Subgroup& h, GroupoidPtr source, GroupoidPtr target) {
  std::vector<int> morphisms(h.order());
  for (int i = 0; i < h.order(); ++i) morphisms[i] = h.global(i);
  return make_groupoid_map(std::move(source), std::move(target), {0}, std::move(morphisms));
}

TwoClassFunction::TwoClassFunction(GroupPtr group, int level, std::vector<CycNumber> values)
    : group_(std::move(group)), level_(level), values_(std::move(values)) {
  const CommutingPairs& cp = group_->commuting_pairs();
  if (values_.size() != cp.pairs.size()) {
    throw ShapeError("2-class function needs one value per commuting pair");
  }
  for (const CycNumber& v : values_) {
    if (v.level() != level_) throw LevelMismatchError("2-class function value at the wrong level");
  }
  const int n = group_->order();
  for (size_t i = 0; i < cp.pairs.size(); ++i) {
    const auto [a, b] = cp.pairs[i];
    for (int s = 0; s < n; ++s) {
      const int si = group_->inv(s);
      const int j = cp.find(group_->conj(si, a), group_->conj(si, b), n);
      if (!(values_[j] == values_[i])) {
        throw ValidationError("not invariant under simultaneous conjugation: (" + group_->label(a) + ", " +
                              group_->label(b) + ") by " + group_->label(s));
      }
    }
  }
}

const CycNumber& TwoClassFunction::value(int g, int h) const {
  const int i = group_->commuting_pairs().find(g, h, group_->order());
  if (i < 0) throw ParameterError("(" + group_->label(g) + ", " + group_->label(h) + ") do not commute");
  return values_[i];
}

std::vector<int> TwoClassFunction::orbit_representatives() const {
  const CommutingPairs& cp = group_->commuting_pairs();
  const int n = group_->order();
  std::vector<char> seen(cp.pairs.size(), 0);
  std::vector<int> out;
  for (size_t i = 0; i < cp.pairs.size(); ++i) {
    if (seen[i]) continue;
    out.push_back(static_cast<int>(i));
    const auto [a, b] = cp.pairs[i];
    for (int s = 0; s < n; ++s) seen[cp.find(group_->conj(s, a), group_->conj(s, b), n)] = 1;
  }
  return out;
}

TwoClassFunction operator+(const TwoClassFunction& a, const TwoClassFunction& b) {
  if (a.group_ != b.group_) throw ValidationError("2-class functions on different groups");
  if (a.level_ != b.level_) throw LevelMismatchError("2-class functions at different levels");
  std::vector<CycNumber> values = a.values_;
  for (size_t i = 0; i < values.size(); ++i) values[i] += b.values_[i];
  return TwoClassFunction(a.group_, a.level_, std::move(values));
}

bool operator==(const TwoClassFunction& a, const TwoClassFunction& b) {
  if (a.group_ != b.group_) throw ValidationError("2-class functions on different groups");
  return a.values_ == b.values_;
}

TwoClassFunction to_two_class_function(const GroupPtr& group, const Inertia& lam, const ClassFunction& chi) {
  if (chi.groupoid() != lam.groupoid) throw ValidationError("class function is not on this inertia groupoid");
  if (lam.base->num_objects() != 1 || lam.base->num_morphisms() != group->order()) {
    throw ParameterError("inertia groupoid of this group expected");
  }
  std::vector<CycNumber> values;
  for (const auto& [g, h] : group->commuting_pairs().pairs) values.push_back(chi.at(lam.morphism(g, h)));
  return TwoClassFunction(group, chi.level(), std::move(values));
}

TwoClassFunction hkr_induced_2class(const Subgroup& h, const TwoClassFunction& chi) {
  if (chi.group() != h.as_group() && !same_group(*chi.group(), *h.as_group())) throw ValidationError("2-class function is not on the subgroup");
  const GroupPtr& g = h.parent();
  const int n = g->order();
  const BigRational weight(1, h.order());
  std::vector<CycNumber> values;
  for (const auto& [a, b] : g->commuting_pairs().pairs) {
    CycNumber sum(chi.level());
    for (int s = 0; s < n; ++s) {
      const int sa = h.local(g->conj(s, a)), sb = h.local(g->conj(s, b));
      if (sa >= 0 && sb >= 0) sum += chi.value(sa, sb);
    }
    values.push_back(sum * weight);
  }
  return TwoClassFunction(g, chi.level(), std::move(values));
}

}  // namespace twochar
