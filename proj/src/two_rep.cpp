#include "twochar/two_rep.hpp"

#include <algorithm>
#include <numeric>

namespace twochar {

TwoRep::TwoRep(GroupPtr group, int level, int n, std::vector<Permutation> sigma, std::vector<CycNumber> coh,
               std::vector<CycNumber> unit)
    : group_(std::move(group)),
      level_(level),
      n_(n),
      sigma_(std::move(sigma)),
      coh_(std::move(coh)),
      unit_(std::move(unit)) {
  const size_t order = group_->order();
  if (n_ < 0) throw ShapeError("negative dimension");
  if (sigma_.size() != order) throw ShapeError("one permutation per group element required");
  for (size_t g = 0; g < order; ++g) {
    if (static_cast<int>(sigma_[g].size()) != n_ || !is_permutation(sigma_[g])) {
      throw ShapeError("sigma(" + group_->label(static_cast<int>(g)) + ") is not a permutation of " +
                       std::to_string(n_) + " points");
    }
  }
  if (coh_.size() != order * order * n_) throw ShapeError("coherence table must have |G|^2 n entries");
  if (unit_.size() != static_cast<size_t>(n_)) throw ShapeError("unit table must have n entries");
  for (size_t i = 0; i < coh_.size(); ++i) {
    if (coh_[i].level() != level_) throw LevelMismatchError("coherence scalar at the wrong level");
    if (coh_[i].is_zero()) {
      const size_t j = i % n_, gh = i / n_;
      throw ValidationError("coherence scalar c_{" + group_->label(static_cast<int>(gh / order)) + "," +
                            group_->label(static_cast<int>(gh % order)) + "}(" + std::to_string(j + 1) +
                            ") is zero");
    }
  }
  for (int j = 0; j < n_; ++j) {
    if (unit_[j].level() != level_) throw LevelMismatchError("unit scalar at the wrong level");
    if (unit_[j].is_zero()) throw ValidationError("unit scalar d(" + std::to_string(j + 1) + ") is zero");
  }
}

TwoRep TwoRep::trivial(GroupPtr group, int level, int n) {
  const size_t order = group->order();
  std::vector<Permutation> sigma(order, identity_permutation(n));
  std::vector<CycNumber> coh(order * order * n, CycNumber::one(level));
  std::vector<CycNumber> unit(n, CycNumber::one(level));
  return TwoRep(std::move(group), level, n, std::move(sigma), std::move(coh), std::move(unit));
}

Report check_two_rep(const TwoRep& rho) {
  const FiniteGroup& g = *rho.group();
  const int order = g.order();
  const int n = rho.n();
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (compose(rho.sigma(a), rho.sigma(b)) != rho.sigma(g.mul(a, b))) {
        return Report::fail("sigma is not a homomorphism at (" + g.label(a) + ", " + g.label(b) + ")");
      }
    }
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const int ab = g.mul(a, b);
      for (int k = 0; k < order; ++k) {
        const int bk = g.mul(b, k);
        const Permutation& sk = rho.sigma(k);
        for (int j = 0; j < n; ++j) {
          if (!(rho.coh(ab, k, j) * rho.coh(a, b, sk[j]) == rho.coh(a, bk, j) * rho.coh(b, k, j))) {
            return Report::fail("coherence law fails at (g, h, k, j) = (" + g.label(a) + ", " + g.label(b) + ", " +
                                g.label(k) + ", " + std::to_string(j + 1) + ")");
          }
        }
      }
    }
  }
  const int e = g.identity();
  for (int a = 0; a < order; ++a) {
    for (int j = 0; j < n; ++j) {
      if (!(rho.coh(e, a, j) == rho.unit(rho.sigma(a)[j]))) {
        return Report::fail("left unit law fails at (g, j) = (" + g.label(a) + ", " + std::to_string(j + 1) + ")");
      }
      if (!(rho.coh(a, e, j) == rho.unit(j))) {
        return Report::fail("right unit law fails at (g, j) = (" + g.label(a) + ", " + std::to_string(j + 1) + ")");
      }
    }
  }
  return Report::pass();
}

TwoRep from_scalars(GroupPtr group, int level, std::vector<CycNumber> scalars) {
  const int order = group->order();
  const int e = group->identity();
  std::vector<CycNumber> unit{scalars.at(static_cast<size_t>(e) * order + e)};
  std::vector<Permutation> sigma(order, identity_permutation(1));
  return TwoRep(std::move(group), level, 1, std::move(sigma), std::move(scalars), std::move(unit));
}

TwoRep from_cocycle(const Cocycle& c, std::optional<int> level) {
  const int lvl = level.value_or(c.modulus());
  if (lvl < 1 || lvl % c.modulus() != 0) throw LevelMismatchError("level must be a multiple of the cocycle modulus");
  const int order = c.group()->order();
  std::vector<CycNumber> scalars;
  scalars.reserve(static_cast<size_t>(order) * order);
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) scalars.push_back(c.value(g, h, lvl));
  return from_scalars(c.group(), lvl, std::move(scalars));
}

DimMatrix dim_matrix(const TwoRep& rho, int g) {
  DimMatrix a(rho.n(), std::vector<int>(rho.n(), 0));
  for (int j = 0; j < rho.n(); ++j) a[rho.sigma(g)[j]][j] = 1;
  return a;
}

std::optional<Permutation> quasi_invertible(const DimMatrix& a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw ShapeError("dimension matrix must be square");
  }
  Permutation sigma(n, -1);
  std::vector<int> row_count(n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int d = a[i][j];
      if (d < 0) throw ShapeError("negative dimension");
      if (d == 0) continue;
      if (d != 1 || sigma[j] >= 0) return std::nullopt;
      sigma[j] = i;
      ++row_count[i];
    }
    if (sigma[j] < 0) return std::nullopt;
  }
  for (int c : row_count) {
    if (c != 1) return std::nullopt;
  }
  return sigma;
}

TraceSpace categorical_trace(const TwoRep& rho, int g) {
  TraceSpace t{g, {}};
  for (int j = 0; j < rho.n(); ++j) {
    if (rho.sigma(g)[j] == j) t.basis.push_back(j);
  }
  return t;
}

CycMatrix psi(const TwoRep& rho, int g, int h) {
  const FiniteGroup& grp = *rho.group();
  const int hi = grp.inv(h);
  const int hg = grp.mul(h, g);
  const TraceSpace src = categorical_trace(rho, g);
  const TraceSpace dst = categorical_trace(rho, grp.conj(h, g));
  std::vector<int> pos(rho.n(), -1);
  for (int r = 0; r < dst.dim(); ++r) pos[dst.basis[r]] = r;
  CycMatrix m(rho.level(), dst.dim(), src.dim());
  for (int col = 0; col < src.dim(); ++col) {
    const int i = src.basis[col];
    const int j = rho.sigma(h)[i];
    // u = phi_{h,h^-1}^-1 phi_1^-1 at column j, then the whiskered element
    // at i, then phi_{h,g,h^-1} = phi_{hg,h^-1} (phi_{h,g} rho(h^-1)).
    const CycNumber u = (rho.coh(h, hi, j) * rho.unit(j)).inverse();
    const CycNumber phi = rho.coh(hg, hi, j) * rho.coh(h, g, i);
    m(pos[j], col) = phi * u;
  }
  return m;
}

GroupoidRep trace_rep(const TwoRep& rho, const Inertia& lam) {
  const FiniteGroup& grp = *rho.group();
  if (lam.base->num_objects() != 1 || lam.base->num_morphisms() != grp.order()) {
    throw ParameterError("inertia groupoid of a different group");
  }
  const FiniteGroupoid& l = *lam.groupoid;
  std::vector<int> dims(l.num_objects());
  for (int u = 0; u < l.num_objects(); ++u) dims[u] = categorical_trace(rho, lam.object_auto[u]).dim();
  std::vector<CycMatrix> mats;
  mats.reserve(l.num_morphisms());
  for (int m = 0; m < l.num_morphisms(); ++m) {
    mats.push_back(psi(rho, lam.object_auto[l.src(m)], lam.morphism_base[m]));
  }
  return GroupoidRep(lam.groupoid, rho.level(), std::move(dims), std::move(mats));
}

TwoClassFunction two_character(const TwoRep& rho) {
  std::vector<CycNumber> values;
  for (const auto& [g, h] : rho.group()->commuting_pairs().pairs) values.push_back(matrix_trace(psi(rho, g, h)));
  return TwoClassFunction(rho.group(), rho.level(), std::move(values));
}

std::vector<CycNumber> canonical_eta(const TwoRep& rho, int g, int h) {
  if (!rho.group()->commute(g, h)) throw ParameterError("canonical eta needs commuting group elements");
  std::vector<CycNumber> eta;
  for (int j = 0; j < rho.n(); ++j) eta.push_back(rho.coh(h, g, j) / rho.coh(g, h, j));
  return eta;
}

CycNumber joint_trace(const TwoRep& rho, int g, int h, const std::vector<CycNumber>& eta) {
  const Permutation& sg = rho.sigma(g);
  const Permutation& sh = rho.sigma(h);
  if (compose(sg, sh) != compose(sh, sg)) throw ValidationError("sigma(g) and sigma(h) do not commute");
  if (static_cast<int>(eta.size()) != rho.n()) throw ValidationError("eta needs one scalar per column");
  for (const CycNumber& x : eta) {
    if (x.level() != rho.level()) throw ValidationError("eta scalar at the wrong level");
    if (x.is_zero()) throw ValidationError("eta has a zero scalar");
  }
  const int hi = rho.group()->inv(h);
  const TraceSpace a = categorical_trace(rho, g);
  const int k = a.dim();
  std::vector<int> pos(rho.n(), -1);
  for (int r = 0; r < k; ++r) pos[a.basis[r]] = r;
  // Tr(A) -> Tr(BAC): insert u at column j = sigma_h(i)
  CycMatrix insert(rho.level(), k, k);
  // Tr(BAC) -> Tr(ABC): eta whiskered by C, read at column sigma_{h^-1}(j)
  CycMatrix swap(rho.level(), k, k);
  // Tr(ABC) -> Tr(A): u^-1 whiskered by A
  CycMatrix remove(rho.level(), k, k);
  for (int col = 0; col < k; ++col) {
    const int i = a.basis[col];
    const int j = sh[i];
    const CycNumber u_inv = rho.coh(h, hi, j) * rho.unit(j);
    insert(pos[j], col) = u_inv.inverse();
    swap(col, col) = eta[rho.sigma(hi)[i]];
    remove(col, col) = rho.coh(h, hi, i) * rho.unit(i);
  }
  return matrix_trace(remove * swap * insert);
}

TwoRep direct_sum(const TwoRep& a, const TwoRep& b) {
  if (a.group() != b.group() && !same_group(*a.group(), *b.group())) {
    throw ValidationError("direct sum of 2-reps of different groups");
  }
  if (a.level() != b.level()) throw LevelMismatchError("direct sum of 2-reps at different levels");
  const int order = a.group()->order();
  const int n = a.n() + b.n();
  std::vector<Permutation> sigma(order);
  for (int g = 0; g < order; ++g) {
    sigma[g] = a.sigma(g);
    for (int j : b.sigma(g)) sigma[g].push_back(j + a.n());
  }
  std::vector<CycNumber> coh;
  coh.reserve(static_cast<size_t>(order) * order * n);
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      for (int j = 0; j < a.n(); ++j) coh.push_back(a.coh(g, h, j));
      for (int j = 0; j < b.n(); ++j) coh.push_back(b.coh(g, h, j));
    }
  }
  std::vector<CycNumber> unit = a.units();
  unit.insert(unit.end(), b.units().begin(), b.units().end());
  return TwoRep(a.group(), a.level(), n, std::move(sigma), std::move(coh), std::move(unit));
}

TwoRep induce_two_rep(const Subgroup& h, const TwoRep& rho) {
  return induce_two_rep(h, rho, left_coset_representatives(h));
}

TwoRep induce_two_rep(const Subgroup& h, const TwoRep& rho, const std::vector<int>& coset_reps) {
  if (rho.group() != h.as_group() && !same_group(*rho.group(), *h.as_group())) {
    throw ValidationError("2-rep does not live on the subgroup");
  }
  const FiniteGroup& g = *h.parent();
  const int order = g.order();
  const int m = static_cast<int>(coset_reps.size());
  const int n = rho.n();
  if (m != h.index()) throw ValidationError("wrong number of coset representatives");
  std::vector<int> coset_of(order, -1);
  for (int j = 0; j < m; ++j) {
    for (int x : h.members()) {
      int& slot = coset_of[g.mul(coset_reps[j], x)];
      if (slot >= 0) throw ValidationError("coset representatives share a coset");
      slot = j;
    }
  }
  // g r_j = r_i h  ->  target[g][j] = i, part[g][j] = local index of h
  std::vector<int> target(static_cast<size_t>(order) * m), part(static_cast<size_t>(order) * m);
  for (int x = 0; x < order; ++x) {
    for (int j = 0; j < m; ++j) {
      const int grj = g.mul(x, coset_reps[j]);
      const int i = coset_of[grj];
      target[static_cast<size_t>(x) * m + j] = i;
      part[static_cast<size_t>(x) * m + j] = h.local(g.mul(g.inv(coset_reps[i]), grj));
    }
  }
  const int big = m * n;
  std::vector<Permutation> sigma(order, Permutation(big));
  for (int x = 0; x < order; ++x) {
    for (int j = 0; j < m; ++j) {
      const int i = target[static_cast<size_t>(x) * m + j];
      const Permutation& sh = rho.sigma(part[static_cast<size_t>(x) * m + j]);
      for (int a = 0; a < n; ++a) sigma[x][j * n + a] = i * n + sh[a];
    }
  }
  // column (k, a) of rho(x1) rho(x2): x2 r_k = r_j h2, then x1 r_j = r_i h1,
  // and the scalar is c_{h1,h2}(a)
  std::vector<CycNumber> coh;
  coh.reserve(static_cast<size_t>(order) * order * big);
  for (int x1 = 0; x1 < order; ++x1) {
    for (int x2 = 0; x2 < order; ++x2) {
      for (int k = 0; k < m; ++k) {
        const int j = target[static_cast<size_t>(x2) * m + k];
        const int h2 = part[static_cast<size_t>(x2) * m + k];
        const int h1 = part[static_cast<size_t>(x1) * m + j];
        for (int a = 0; a < n; ++a) coh.push_back(rho.coh(h1, h2, a));
      }
    }
  }
  std::vector<CycNumber> unit;
  unit.reserve(big);
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < n; ++a) unit.push_back(rho.unit(a));
  return TwoRep(h.parent(), rho.level(), big, std::move(sigma), std::move(coh), std::move(unit));
}

Decomposition decompose(const TwoRep& rho) {
  const GroupPtr& gp = rho.group();
  const FiniteGroup& g = *gp;
  const int order = g.order();
  const int level = rho.level();
  const int modulus = level % 2 == 0 ? level : 2 * level;
  Decomposition out;
  std::vector<char> seen(rho.n(), 0);
  for (int j = 0; j < rho.n(); ++j) {
    if (seen[j]) continue;
    std::vector<int> orbit, stab;
    for (int x = 0; x < order; ++x) {
      const int y = rho.sigma(x)[j];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
      if (y == j) stab.push_back(x);
    }
    std::sort(orbit.begin(), orbit.end());
    Subgroup sub(gp, stab);
    const int k = sub.order();
    std::vector<CycNumber> scalars;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) scalars.push_back(rho.coh(sub.global(a), sub.global(b), j));
    auto sc = [&](int a, int b) -> const CycNumber& { return scalars[static_cast<size_t>(a) * k + b]; };
    const FiniteGroup& hg = *sub.as_group();
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          if (!(sc(hg.mul(a, b), c) * sc(a, b) == sc(a, hg.mul(b, c)) * sc(b, c))) {
            throw ValidationError("base-point scalars of point " + std::to_string(j + 1) +
                                  " fail the cocycle identity; the 2-rep is invalid");
          }
    std::optional<Cocycle> cocycle;
    std::vector<int> exps;
    for (const CycNumber& s : scalars) {
      const auto e = (modulus == level ? s : embed(s, modulus)).root_of_unity_exponent();
      if (!e) break;
      exps.push_back(*e);
    }
    if (exps.size() == scalars.size()) {
      cocycle.emplace(sub.as_group(), modulus, std::move(exps));
    } else {
      out.torsion = false;
    }
    out.parts.push_back(DecompositionPart{std::move(sub), j, std::move(orbit), std::move(scalars), std::move(cocycle)});
  }

  const TwoClassFunction whole = two_character(rho);
  std::vector<CycNumber> sum(whole.values().size(), CycNumber(level));
  for (const DecompositionPart& p : out.parts) {
    const TwoRep one = from_scalars(p.subgroup.as_group(), level, p.scalars);
    const TwoClassFunction chi = two_character(induce_two_rep(p.subgroup, one));
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += chi.values()[i];
  }
  out.verification = Report::pass();
  const auto& pairs = g.commuting_pairs().pairs;
  for (size_t i = 0; i < sum.size(); ++i) {
    if (!(sum[i] == whole.values()[i])) {
      out.verification = Report::fail("2-character differs from the sum over the parts at (" +
                                      g.label(pairs[i].first) + ", " + g.label(pairs[i].second) + ")");
      break;
    }
  }
  return out;
}

Report check_projective_rep(const Cocycle& c, const std::vector<CycMatrix>& matrices) {
  const FiniteGroup& g = *c.group();
  const int order = g.order();
  if (static_cast<int>(matrices.size()) != order) throw ShapeError("one matrix per group element required");
  const int size = matrices.front().rows();
  const int level = matrices.front().level();
  for (const CycMatrix& m : matrices) {
    if (!m.square() || m.rows() != size) throw ShapeError("matrices must be square of a common size");
    if (m.level() != level) throw LevelMismatchError("matrices at different levels");
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const CycMatrix rhs = CycMatrix::scalar(level, size, c.value(a, b, level)) * (matrices[a] * matrices[b]);
      if (!(matrices[g.mul(a, b)] == rhs)) {
        return Report::fail("phi(gh) != phi(g) phi(h) c(g,h) at (" + g.label(a) + ", " + g.label(b) + ")");
      }
    }
  }
  return Report::pass();
}

InductionReport verify_induction_theorem(const Subgroup& h, const TwoRep& rho) {
  const GroupPtr& gp = h.parent();
  const TwoRep ind = induce_two_rep(h, rho);
  const InertiaInclusion inc = groupoid_map_from_inclusion(h);

  InductionReport report;
  const ClassFunction lhs = character(trace_rep(ind, inc.full));
  const ClassFunction rhs = character(induce(inc.map, trace_rep(rho, inc.sub)));
  report.classes = Report::pass();
  for (int c = 0; c < lhs.num_classes(); ++c) {
    if (!(lhs.value(c) == rhs.value(c))) {
      const int rep = lhs.classes().classes[c].front();
      const int u = inc.full.object_auto[inc.full.groupoid->src(rep)];
      const int g = inc.full.morphism_base[rep];
      report.classes = Report::fail("Lambda(G) characters differ at the class of (" + gp->label(u) + ", " +
                                    gp->label(g) + ")");
      break;
    }
  }

  const TwoClassFunction left = two_character(ind);
  const TwoClassFunction right = hkr_induced_2class(h, two_character(rho));
  report.pairs = Report::pass();
  const auto& pairs = gp->commuting_pairs().pairs;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (!(left.values()[i] == right.values()[i])) {
      report.pairs = Report::fail("2-characters differ at (" + gp->label(pairs[i].first) + ", " +
                                  gp->label(pairs[i].second) + ")");
      break;
    }
  }
  return report;
}

namespace {

CycNumber random_scalar(int level, std::mt19937_64& rng) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    return root_of_unity(level, std::uniform_int_distribution<int>(0, level - 1)(rng));
  }
  const long p = std::uniform_int_distribution<long>(1, 3)(rng) * (std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1);
  const long q = std::uniform_int_distribution<long>(1, 3)(rng);
  return CycNumber::rational(level, BigRational(p, q));
}

}  // namespace

TwoRep random_two_rep(const GroupPtr& group, int level, int max_n, std::mt19937_64& rng) {
  const FiniteGroup& g = *group;
  const int order = g.order();
  if (max_n < 1) throw ParameterError("max_n must be positive");
  std::uniform_int_distribution<int> pick(0, order - 1);
  const int parts = std::uniform_int_distribution<int>(1, 3)(rng);
  std::optional<TwoRep> acc;
  int remaining = max_n;
  for (int p = 0; p < parts && remaining > 0; ++p) {
    std::optional<Subgroup> sub;
    for (int attempt = 0; attempt < 20 && !sub; ++attempt) {
      std::vector<int> gens{pick(rng)};
      if (std::uniform_int_distribution<int>(0, 1)(rng)) gens.push_back(pick(rng));
      Subgroup cand = Subgroup::generated_by(group, gens);
      if (cand.index() <= remaining) sub.emplace(std::move(cand));
    }
    if (!sub) sub.emplace(Subgroup::whole(group));
    const Cocycle w = random_cocycle(sub->as_group(), level, rng);
    TwoRep part = induce_two_rep(*sub, from_cocycle(w, level));
    remaining -= part.n();
    acc = acc ? direct_sum(*acc, part) : std::move(part);
  }
  const TwoRep& base = *acc;
  const int n = base.n();

  // gauge: c' = c lambda_g(sigma_h j) lambda_h(j) / lambda_gh(j), d' = d lambda_1(j)
  std::vector<CycNumber> lambda;
  for (int i = 0; i < order * n; ++i) lambda.push_back(random_scalar(level, rng));
  auto lam = [&](int x, int j) -> const CycNumber& { return lambda[static_cast<size_t>(x) * n + j]; };
  Permutation relabel = identity_permutation(n);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  const Permutation back = inverse(relabel);

  std::vector<Permutation> sigma(order);
  for (int x = 0; x < order; ++x) sigma[x] = compose(relabel, compose(base.sigma(x), back));
  std::vector<CycNumber> coh(static_cast<size_t>(order) * order * n, CycNumber(level));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const int ab = g.mul(a, b);
      for (int j = 0; j < n; ++j) {
        const CycNumber v = base.coh(a, b, j) * lam(a, base.sigma(b)[j]) * lam(b, j) / lam(ab, j);
        coh[(static_cast<size_t>(a) * order + b) * n + relabel[j]] = v;
      }
    }
  }
  std::vector<CycNumber> unit(n, CycNumber(level));
  for (int j = 0; j < n; ++j) unit[relabel[j]] = base.unit(j) * lam(g.identity(), j);
  return TwoRep(group, level, n, std::move(sigma), std::move(coh), std::move(unit));
}

}  // namespace twochar
