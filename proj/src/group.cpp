#include "twochar/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>

#include "twochar/errors.hpp"

namespace twochar {

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ParameterError("composing permutations of different degree");
  Permutation r(a.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Permutation identity_permutation(int degree) {
  Permutation p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Permutation parse_cycles(const std::string& text, int degree) {
  Permutation p = identity_permutation(degree);
  std::vector<char> used(degree, 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation \"" + text + "\"");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle in \"" + text + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in cycle notation \"" + text +
                         "\"");
      }
      long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 1000000) throw ParseError("point out of range in \"" + text + "\"");
        ++pos;
      }
      if (v < 1 || v > degree) {
        throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree) + " in \"" + text +
                         "\"");
      }
      if (used[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated in \"" + text + "\"");
      used[v - 1] = 1;
      cycle.push_back(static_cast<int>(v) - 1);
    }
    for (size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream out;
  std::vector<char> seen(p.size(), 0);
  for (size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out << '(';
    size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out << ' ';
      out << x + 1;
      first = false;
      x = static_cast<size_t>(p[x]);
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
  return labels;
}

}  // namespace

GroupPtr FiniteGroup::from_mult_table(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("empty multiplication table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      throw ValidationError("multiplication table row " + std::to_string(a) + " has length " +
                            std::to_string(table[a].size()) + ", expected " + std::to_string(n));
    }
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n) {
        throw ValidationError("entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      }
    }
  }
  // Latin square
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0);
    std::vector<char> col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row[table[a][b]]++) {
        throw ValidationError("row " + std::to_string(a) + " is not a permutation (missing inverses)");
      }
      if (col[table[b][a]]++) {
        throw ValidationError("column " + std::to_string(a) + " is not a permutation (missing inverses)");
      }
    }
  }
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = c;
  }
  if (e < 0) throw ValidationError("no identity element");

  auto assoc_fail = [&](int a, int b, int c) {
    return table[table[a][b]][c] != table[a][table[b][c]];
  };
  auto witness = [](int a, int b, int c) {
    return "not associative: (ab)c != a(bc) for (a,b,c) = (" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (assoc_fail(a, b, c)) throw ValidationError(witness(a, b, c));
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 200000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (assoc_fail(a, b, c)) throw ValidationError(witness(a, b, c));
    }
  }

  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n) throw ValidationError("label count does not match group order");
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw ValidationError("duplicate element label \"" + *dup + "\"");
  }

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->n_ = n;
  g->identity_ = e;
  g->table_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->table_[static_cast<size_t>(a) * n + b] = table[a][b];
  g->inverse_.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e) g->inverse_[a] = b;
  g->labels_ = std::move(labels);
  return g;
}

GroupPtr FiniteGroup::from_permutation_generators(int degree, const std::vector<Permutation>& generators, int cap) {
  if (degree < 0) throw ParameterError("negative permutation degree");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree || !is_permutation(p)) {
      throw ValidationError("generator " + format_cycles(p) + " is not a bijection on {1.." + std::to_string(degree) +
                            "}");
    }
  }
  std::vector<Permutation> elems{identity_permutation(degree)};
  std::map<Permutation, int> seen{{elems[0], 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : generators) {
      Permutation next = compose(gen, elems[i]);
      if (seen.count(next)) continue;
      if (static_cast<int>(elems.size()) >= cap) {
        throw SizeCapError("permutation group closure exceeds cap of " + std::to_string(cap) + " elements");
      }
      seen.emplace(next, static_cast<int>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  return from_permutation_list(degree, std::move(elems));
}

GroupPtr FiniteGroup::from_permutation_list(int degree, std::vector<Permutation> elems) {
  std::map<Permutation, int> index;
  int e = -1;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (static_cast<int>(elems[i].size()) != degree || !is_permutation(elems[i])) {
      throw ValidationError("element " + std::to_string(i) + " is not a permutation of degree " +
                            std::to_string(degree));
    }
    if (!index.emplace(elems[i], static_cast<int>(i)).second) {
      throw ValidationError("permutation " + format_cycles(elems[i]) + " listed twice");
    }
    if (elems[i] == identity_permutation(degree)) e = static_cast<int>(i);
  }
  if (e < 0) throw ValidationError("permutation list lacks the identity");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  const int n = static_cast<int>(elems.size());
  g->n_ = n;
  g->identity_ = e;
  g->table_.resize(static_cast<size_t>(n) * n);
  g->inverse_.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto it = index.find(compose(elems[a], elems[b]));
      if (it == index.end()) {
        throw ValidationError("permutation list not closed: " + format_cycles(elems[a]) + " * " +
                              format_cycles(elems[b]));
      }
      g->table_[static_cast<size_t>(a) * n + b] = it->second;
      if (it->second == e) g->inverse_[a] = b;
    }
  }
  for (const auto& p : elems) g->labels_.push_back(format_cycles(p));
  g->degree_ = degree;
  g->action_ = std::move(elems);
  return g;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != identity_; x = mul(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

std::optional<int> FiniteGroup::find_label(const std::string& label) const {
  for (int i = 0; i < n_; ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<int> FiniteGroup::find_permutation(const Permutation& p) const {
  for (int i = 0; i < static_cast<int>(action_.size()); ++i) {
    if (action_[i] == p) return i;
  }
  return std::nullopt;
}

const ConjugacyClasses& FiniteGroup::conjugacy_classes() const {
  std::call_once(classes_once_, [this] {
    classes_.class_of.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
      if (classes_.class_of[g] >= 0) continue;
      std::vector<int> cls;
      const int id = static_cast<int>(classes_.classes.size());
      for (int s = 0; s < n_; ++s) {
        int c = conj(s, g);
        if (classes_.class_of[c] < 0) {
          classes_.class_of[c] = id;
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes_.classes.push_back(std::move(cls));
    }
  });
  return classes_;
}

const CommutingPairs& FiniteGroup::commuting_pairs() const {
  std::call_once(pairs_once_, [this] {
    pairs_.index.assign(static_cast<size_t>(n_) * n_, -1);
    for (int g = 0; g < n_; ++g) {
      for (int h = 0; h < n_; ++h) {
        if (!commute(g, h)) continue;
        pairs_.index[static_cast<size_t>(g) * n_ + h] = static_cast<int>(pairs_.pairs.size());
        pairs_.pairs.emplace_back(g, h);
      }
    }
  });
  return pairs_;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

GroupPtr cyclic(int n) {
  if (n < 1) throw ParameterError("cyclic(n) needs n >= 1, got " + std::to_string(n));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_mult_table(std::move(t), std::move(labels));
}

GroupPtr dihedral(int n) {
  if (n < 1) throw ParameterError("dihedral(n) needs n >= 1, got " + std::to_string(n));
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int x = 0; x < order; ++x) {
    const int a = x % n, e = x / n;
    std::string r = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    labels[x] = e == 0 ? (a == 0 ? "e" : r) : r + "s";
    for (int y = 0; y < order; ++y) {
      const int b = y % n, f = y / n;
      // (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e+f)
      const int k = ((e == 0 ? a + b : a - b) % n + n) % n;
      t[x][y] = k + n * ((e + f) % 2);
    }
  }
  return FiniteGroup::from_mult_table(std::move(t), std::move(labels));
}

GroupPtr symmetric(int n) {
  if (n < 1 || n > 5) throw ParameterError("symmetric(n) supports 1 <= n <= 5, got " + std::to_string(n));
  std::vector<Permutation> elems;
  Permutation p = identity_permutation(n);
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return FiniteGroup::from_permutation_list(n, std::move(elems));
}

GroupPtr quaternion8() {
  // index = 2*unit + sign, unit in {1, i, j, k}, sign 1 means negative
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  std::vector<std::string> labels(8);
  for (int x = 0; x < 8; ++x) {
    labels[x] = std::string(x % 2 ? "-" : "") + names[x / 2];
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2 + y % 2 + unit_sign[u][v]) % 2;
      t[x][y] = 2 * unit_mul[u][v] + sign;
    }
  }
  return FiniteGroup::from_mult_table(std::move(t), std::move(labels));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  const int m = g->order(), n = h->order();
  const int order = m * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int x = 0; x < order; ++x) {
    labels[x] = "(" + g->label(x / n) + "," + h->label(x % n) + ")";
    for (int y = 0; y < order; ++y) t[x][y] = g->mul(x / n, y / n) * n + h->mul(x % n, y % n);
  }
  return FiniteGroup::from_mult_table(std::move(t), std::move(labels));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements) : parent_(std::move(parent)) {
  const int n = parent_->order();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int x : elements) {
    if (x < 0 || x >= n) throw ValidationError("subgroup element " + std::to_string(x) + " out of range");
  }
  members_ = std::move(elements);
  local_.assign(n, -1);
  for (size_t i = 0; i < members_.size(); ++i) local_[members_[i]] = static_cast<int>(i);
  if (!contains(parent_->identity())) throw ValidationError("subgroup does not contain the identity");
  for (int a : members_) {
    if (!contains(parent_->inv(a))) {
      throw ValidationError("subgroup not closed under inverse at " + parent_->label(a));
    }
    for (int b : members_) {
      if (!contains(parent_->mul(a, b))) {
        throw ValidationError("subgroup not closed: " + parent_->label(a) + " * " + parent_->label(b));
      }
    }
  }
  if (n % order() != 0) throw ValidationError("subgroup order does not divide the group order");
  const int k = order();
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = parent_->label(members_[i]);
    for (int j = 0; j < k; ++j) t[i][j] = local_[parent_->mul(members_[i], members_[j])];
  }
  standalone_ = FiniteGroup::from_mult_table(std::move(t), std::move(labels));
}

Subgroup Subgroup::generated_by(GroupPtr parent, const std::vector<int>& generators) {
  std::vector<int> elems{parent->identity()};
  std::vector<char> in(parent->order(), 0);
  in[parent->identity()] = 1;
  for (int g : generators) {
    if (g < 0 || g >= parent->order()) throw ValidationError("generator out of range");
  }
  for (size_t i = 0; i < elems.size(); ++i) {
    for (int g : generators) {
      int x = parent->mul(elems[i], g);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  }
  return Subgroup(std::move(parent), std::move(elems));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->order());
  for (int i = 0; i < parent->order(); ++i) all[i] = i;
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  int e = parent->identity();
  return Subgroup(std::move(parent), {e});
}

Subgroup Subgroup::conjugate(int s) const {
  std::vector<int> elems;
  for (int h : members_) elems.push_back(parent_->conj(s, h));
  return Subgroup(parent_, std::move(elems));
}

Subgroup centralizer(const GroupPtr& g, int element) {
  std::vector<int> elems;
  for (int s = 0; s < g->order(); ++s) {
    if (g->commute(s, element)) elems.push_back(s);
  }
  return Subgroup(g, std::move(elems));
}

std::vector<int> left_coset_representatives(const Subgroup& h) {
  const GroupPtr& g = h.parent();
  std::vector<char> covered(g->order(), 0);
  std::vector<int> reps;
  auto take = [&](int r) {
    reps.push_back(r);
    for (int x : h.members()) covered[g->mul(r, x)] = 1;
  };
  take(g->identity());
  for (int r = 0; r < g->order(); ++r) {
    if (!covered[r]) take(r);
  }
  return reps;
}

std::optional<int> conjugate_subgroup_witness(const Subgroup& h1, const Subgroup& h2) {
  if (h1.parent() != h2.parent()) throw ParameterError("subgroups of different groups");
  if (h1.order() != h2.order()) return std::nullopt;
  const GroupPtr& g = h1.parent();
  for (int s = 0; s < g->order(); ++s) {
    bool ok = true;
    for (int h : h1.members()) {
      if (!h2.contains(g->conj(s, h))) {
        ok = false;
        break;
      }
    }
    if (ok) return s;
  }
  return std::nullopt;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

}  // namespace twochar
