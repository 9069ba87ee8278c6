#include "twochar/groupoid.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "twochar/errors.hpp"

namespace twochar {

GroupoidPtr FiniteGroupoid::create(int num_objects, std::vector<Morphism> morphisms, std::vector<int> compose,
                                   std::vector<std::string> object_labels,
                                   std::vector<std::string> morphism_labels) {
  const int nm = static_cast<int>(morphisms.size());
  if (num_objects < 0) throw ValidationError("negative object count");
  if (compose.size() != static_cast<size_t>(nm) * nm) throw ValidationError("composition table has wrong size");
  for (int m = 0; m < nm; ++m) {
    const auto [s, t] = morphisms[m];
    if (s < 0 || s >= num_objects || t < 0 || t >= num_objects) {
      throw ValidationError("morphism " + std::to_string(m) + " has an endpoint out of range");
    }
  }
  auto comp = [&](int f, int g) { return compose[static_cast<size_t>(f) * nm + g]; };
  for (int f = 0; f < nm; ++f) {
    for (int g = 0; g < nm; ++g) {
      const bool composable = morphisms[g].tgt == morphisms[f].src;
      const int fg = comp(f, g);
      if (!composable) {
        if (fg != -1) {
          throw ValidationError("composition defined on non-composable pair (" + std::to_string(f) + "," +
                                std::to_string(g) + ")");
        }
        continue;
      }
      if (fg < 0 || fg >= nm) {
        throw ValidationError("composition missing on composable pair (" + std::to_string(f) + "," +
                              std::to_string(g) + ")");
      }
      if (morphisms[fg].src != morphisms[g].src || morphisms[fg].tgt != morphisms[f].tgt) {
        throw ValidationError("composite of (" + std::to_string(f) + "," + std::to_string(g) +
                              ") has the wrong endpoints");
      }
    }
  }
  std::vector<std::vector<int>> outgoing(num_objects), incoming(num_objects);
  for (int m = 0; m < nm; ++m) {
    outgoing[morphisms[m].src].push_back(m);
    incoming[morphisms[m].tgt].push_back(m);
  }
  // in a groupoid the identity is the only idempotent automorphism
  std::vector<int> identity(num_objects, -1);
  for (int x = 0; x < num_objects; ++x) {
    for (int e : outgoing[x]) {
      if (morphisms[e].tgt == x && comp(e, e) == e) {
        identity[x] = e;
        break;
      }
    }
    const int e = identity[x];
    bool ok = e >= 0;
    for (size_t i = 0; ok && i < outgoing[x].size(); ++i) ok = comp(outgoing[x][i], e) == outgoing[x][i];
    for (size_t i = 0; ok && i < incoming[x].size(); ++i) ok = comp(e, incoming[x][i]) == incoming[x][i];
    if (!ok) throw ValidationError("object " + std::to_string(x) + " has no identity morphism");
  }
  std::vector<int> inverse(nm, -1);
  for (int m = 0; m < nm; ++m) {
    for (int k : outgoing[morphisms[m].tgt]) {
      if (morphisms[k].tgt == morphisms[m].src && comp(k, m) == identity[morphisms[m].src] &&
          comp(m, k) == identity[morphisms[m].tgt]) {
        inverse[m] = k;
        break;
      }
    }
    if (inverse[m] < 0) throw ValidationError("morphism " + std::to_string(m) + " is not invertible");
  }
  for (int g = 0; g < nm; ++g) {
    for (int f : outgoing[morphisms[g].tgt]) {
      const int fg = comp(f, g);
      for (int h : incoming[morphisms[g].src]) {
        if (comp(fg, h) != comp(f, comp(g, h))) {
          throw ValidationError("composition not associative on (" + std::to_string(f) + "," + std::to_string(g) +
                                "," + std::to_string(h) + ")");
        }
      }
    }
  }

  std::shared_ptr<FiniteGroupoid> out(new FiniteGroupoid());
  out->num_objects_ = num_objects;
  out->morphisms_ = std::move(morphisms);
  out->compose_ = std::move(compose);
  out->identity_ = std::move(identity);
  out->inverse_ = std::move(inverse);
  out->out_.resize(num_objects);
  out->automorphisms_.resize(num_objects);
  out->out_position_.resize(nm);
  for (int m = 0; m < nm; ++m) {
    const int x = out->morphisms_[m].src;
    out->out_position_[m] = static_cast<int>(out->out_[x].size());
    out->out_[x].push_back(m);
    if (out->morphisms_[m].tgt == x) out->automorphisms_[x].push_back(m);
  }
  if (object_labels.empty()) {
    for (int x = 0; x < num_objects; ++x) object_labels.push_back("x" + std::to_string(x));
  }
  if (morphism_labels.empty()) {
    for (int m = 0; m < nm; ++m) morphism_labels.push_back("m" + std::to_string(m));
  }
  if (static_cast<int>(object_labels.size()) != num_objects || static_cast<int>(morphism_labels.size()) != nm) {
    throw ValidationError("label count mismatch");
  }
  out->object_labels_ = std::move(object_labels);
  out->morphism_labels_ = std::move(morphism_labels);
  return out;
}

GroupoidPtr FiniteGroupoid::from_group(const GroupPtr& g) {
  const int n = g->order();
  std::vector<Morphism> morphisms(n, Morphism{0, 0});
  std::vector<int> compose(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) compose[static_cast<size_t>(a) * n + b] = g->mul(a, b);
  return create(1, std::move(morphisms), std::move(compose), {"*"}, g->labels());
}

Inertia inertia_groupoid(const GroupoidPtr& base) {
  Inertia in;
  in.base = base;
  const int bm = base->num_morphisms();
  in.object_of_auto.assign(bm, -1);
  for (int m = 0; m < bm; ++m) {
    if (base->is_automorphism(m)) {
      in.object_of_auto[m] = static_cast<int>(in.object_auto.size());
      in.object_auto.push_back(m);
    }
  }
  const int no = static_cast<int>(in.object_auto.size());
  std::vector<Morphism> morphisms;
  std::vector<std::string> object_labels, morphism_labels;
  for (int u = 0; u < no; ++u) {
    const int uu = in.object_auto[u];
    object_labels.push_back(base->morphism_label(uu));
    in.offset.push_back(static_cast<int>(morphisms.size()));
    for (int g : base->out(base->src(uu))) {
      const int v = in.object_of_auto[base->conjugate(g, uu)];
      morphisms.push_back(Morphism{u, v});
      in.morphism_base.push_back(g);
      morphism_labels.push_back(base->morphism_label(g) + "@" + base->morphism_label(uu));
    }
  }
  const int nm = static_cast<int>(morphisms.size());
  std::vector<int> compose(static_cast<size_t>(nm) * nm, -1);
  for (int f = 0; f < nm; ++f) {
    for (int g = 0; g < nm; ++g) {
      if (morphisms[g].tgt != morphisms[f].src) continue;
      const int comp = base->compose(in.morphism_base[f], in.morphism_base[g]);
      compose[static_cast<size_t>(f) * nm + g] = in.morphism(morphisms[g].src, comp);
    }
  }
  in.groupoid = FiniteGroupoid::create(no, std::move(morphisms), std::move(compose), std::move(object_labels),
                                       std::move(morphism_labels));
  return in;
}

Inertia inertia(const GroupPtr& g) { return inertia_groupoid(FiniteGroupoid::from_group(g)); }

int GroupoidSkeleton::transported(int m) const {
  const int x = groupoid->src(m), y = groupoid->tgt(m);
  const int t = groupoid->compose(groupoid->compose(transport[y], m), groupoid->inverse(transport[x]));
  return local_of[t];
}

GroupoidSkeleton skeleton(const GroupoidPtr& g) {
  GroupoidSkeleton sk;
  sk.groupoid = g;
  const int no = g->num_objects();
  sk.component_of.assign(no, -1);
  sk.transport.assign(no, -1);
  sk.local_of.assign(g->num_morphisms(), -1);
  for (int x = 0; x < no; ++x) {
    if (sk.component_of[x] >= 0) continue;
    const int c = static_cast<int>(sk.components.size());
    SkeletonComponent comp;
    comp.representative = x;
    // least-index morphism x -> y, inverted, gives the transport y -> x
    for (int m : g->out(x)) {
      const int y = g->tgt(m);
      if (sk.component_of[y] < 0) {
        sk.component_of[y] = c;
        comp.objects.push_back(y);
      }
    }
    for (int y : comp.objects) {
      int best = -1;
      for (int m : g->out(y)) {
        if (g->tgt(m) == x && (best < 0 || m < best)) best = m;
      }
      sk.transport[y] = best;
    }
    std::sort(comp.objects.begin(), comp.objects.end());
    comp.automorphisms = g->automorphisms(x);
    const int k = static_cast<int>(comp.automorphisms.size());
    for (int i = 0; i < k; ++i) sk.local_of[comp.automorphisms[i]] = i;
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) {
      labels[i] = g->morphism_label(comp.automorphisms[i]);
      for (int j = 0; j < k; ++j) table[i][j] = sk.local_of[g->compose(comp.automorphisms[i], comp.automorphisms[j])];
    }
    comp.group = FiniteGroup::from_mult_table(std::move(table), std::move(labels));
    sk.components.push_back(std::move(comp));
  }
  return sk;
}

GroupoidMap make_groupoid_map(GroupoidPtr source, GroupoidPtr target, std::vector<int> object_map,
                              std::vector<int> morphism_map) {
  if (static_cast<int>(object_map.size()) != source->num_objects() ||
      static_cast<int>(morphism_map.size()) != source->num_morphisms()) {
    throw ValidationError("groupoid map has the wrong size");
  }
  for (int m = 0; m < source->num_morphisms(); ++m) {
    const int fm = morphism_map[m];
    if (fm < 0 || fm >= target->num_morphisms()) throw ValidationError("morphism image out of range");
    if (target->src(fm) != object_map[source->src(m)] || target->tgt(fm) != object_map[source->tgt(m)]) {
      throw ValidationError("morphism " + std::to_string(m) + " is not mapped compatibly with its endpoints");
    }
  }
  for (int g = 0; g < source->num_morphisms(); ++g) {
    for (int f : source->out(source->tgt(g))) {
      if (morphism_map[source->compose(f, g)] != target->compose(morphism_map[f], morphism_map[g])) {
        throw ValidationError("groupoid map does not preserve the composite of (" + std::to_string(f) + "," +
                              std::to_string(g) + ")");
      }
    }
  }
  for (int x = 0; x < source->num_objects(); ++x) {
    if (morphism_map[source->identity(x)] != target->identity(object_map[x])) {
      throw ValidationError("groupoid map does not preserve the identity of object " + std::to_string(x));
    }
  }
  GroupoidMap map{std::move(source), std::move(target), std::move(object_map), std::move(morphism_map), true};
  std::map<std::tuple<int, int, int>, int> seen;
  for (int m = 0; m < map.source->num_morphisms(); ++m) {
    auto key = std::make_tuple(map.source->src(m), map.source->tgt(m), map.morphism_map[m]);
    if (!seen.emplace(key, m).second) {
      map.faithful = false;
      break;
    }
  }
  return map;
}

GroupoidMap identity_map(const GroupoidPtr& g) {
  std::vector<int> objects(g->num_objects()), morphisms(g->num_morphisms());
  for (int x = 0; x < g->num_objects(); ++x) objects[x] = x;
  for (int m = 0; m < g->num_morphisms(); ++m) morphisms[m] = m;
  return make_groupoid_map(g, g, std::move(objects), std::move(morphisms));
}

InertiaInclusion groupoid_map_from_inclusion(const Subgroup& h) {
  InertiaInclusion inc{inertia(h.as_group()), inertia(h.parent()), {}};
  const int k = h.order();
  std::vector<int> objects(k);
  std::vector<int> morphisms(static_cast<size_t>(k) * k);
  for (int u = 0; u < k; ++u) {
    objects[u] = h.global(u);
    for (int g = 0; g < k; ++g) {
      morphisms[inc.sub.morphism(u, g)] = inc.full.morphism(h.global(u), h.global(g));
    }
  }
  inc.map = make_groupoid_map(inc.sub.groupoid, inc.full.groupoid, std::move(objects), std::move(morphisms));
  return inc;
}

}  // namespace twochar
