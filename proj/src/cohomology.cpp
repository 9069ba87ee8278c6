#include "twochar/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "twochar/errors.hpp"

namespace twochar {

namespace {

int mod(long v, int m) {
  const long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in Smith reduction");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in Smith reduction");
  return r;
}

struct IntMatrix {
  int rows;
  int cols;
  std::vector<std::int64_t> a;
  std::int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
};

// Diagonalizes m by unimodular row and column operations, reporting each
// operation to the observers. Returns the rank; m(i, i) != 0 for i < rank
// and every other entry is zero afterwards.
//   row_add(i, j, k): row i += k * row j        row_swap(i, j)
//   col_add(i, j, k): col i += k * col j        col_swap(i, j)
template <class RowAdd, class RowSwap, class ColAdd, class ColSwap>
int diagonalize(IntMatrix& m, RowAdd row_add, RowSwap row_swap, ColAdd col_add, ColSwap col_swap) {
  auto do_row_add = [&](int i, int j, std::int64_t k) {
    for (int c = 0; c < m.cols; ++c) {
      if (m.at(j, c) != 0) m.at(i, c) = checked_add(m.at(i, c), checked_mul(k, m.at(j, c)));
    }
    row_add(i, j, k);
  };
  auto do_row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    row_swap(i, j);
  };
  auto do_col_add = [&](int i, int j, std::int64_t k) {
    for (int r = 0; r < m.rows; ++r) {
      if (m.at(r, j) != 0) m.at(r, i) = checked_add(m.at(r, i), checked_mul(k, m.at(r, j)));
    }
    col_add(i, j, k);
  };
  auto do_col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    col_swap(i, j);
  };

  const int limit = std::min(m.rows, m.cols);
  for (int t = 0; t < limit; ++t) {
    int pr = -1, pc = -1;
    std::int64_t best = 0;
    for (int r = t; r < m.rows && best != 1; ++r) {
      for (int c = t; c < m.cols; ++c) {
        const std::int64_t v = std::llabs(m.at(r, c));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = r;
          pc = c;
          if (best == 1) break;
        }
      }
    }
    if (pr < 0) return t;
    do_row_swap(t, pr);
    do_col_swap(t, pc);
    for (;;) {
      bool clean = true;
      for (int r = t + 1; r < m.rows; ++r) {
        if (m.at(r, t) == 0) continue;
        do_row_add(r, t, -(m.at(r, t) / m.at(t, t)));
        if (m.at(r, t) != 0) {
          do_row_swap(r, t);
          clean = false;
        }
      }
      for (int c = t + 1; c < m.cols; ++c) {
        if (m.at(t, c) == 0) continue;
        do_col_add(c, t, -(m.at(t, c) / m.at(t, t)));
        if (m.at(t, c) != 0) {
          do_col_swap(c, t);
          clean = false;
        }
      }
      if (clean) break;
    }
  }
  return limit;
}

void no_row_add(int, int, std::int64_t) {}
void no_swap(int, int) {}

// Coboundary C^1 -> C^2: rows (g, h), columns g.
IntMatrix coboundary_matrix_1(const FiniteGroup& g) {
  const int n = g.order();
  IntMatrix m{n * n, n, std::vector<std::int64_t>(static_cast<size_t>(n) * n * n, 0)};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int r = a * n + b;
      m.at(r, a) += 1;
      m.at(r, b) += 1;
      m.at(r, g.mul(a, b)) -= 1;
    }
  }
  return m;
}

// Coboundary C^2 -> C^3: rows (a, b, c), columns pairs.
IntMatrix coboundary_matrix_2(const FiniteGroup& g) {
  const int n = g.order();
  const int n2 = n * n;
  IntMatrix m{n2 * n, n2, std::vector<std::int64_t>(static_cast<size_t>(n2) * n * n2, 0)};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const int r = (a * n + b) * n + c;
        m.at(r, b * n + c) += 1;
        m.at(r, g.mul(a, b) * n + c) -= 1;
        m.at(r, a * n + g.mul(b, c)) += 1;
        m.at(r, a * n + b) -= 1;
      }
    }
  }
  return m;
}

std::vector<std::int64_t> diagonal_entries(IntMatrix m) {
  const int rank = diagonalize(m, no_row_add, no_swap, no_row_add, no_swap);
  std::vector<std::int64_t> d;
  for (int i = 0; i < rank; ++i) d.push_back(std::llabs(m.at(i, i)));
  return d;
}

}  // namespace

CocycleCheck check_cocycle(const FiniteGroup& g, int modulus, const std::vector<int>& table) {
  const int n = g.order();
  if (modulus < 1) throw ParameterError("modulus must be positive");
  if (table.size() != static_cast<size_t>(n) * n) throw ShapeError("cocycle table must have |G|^2 entries");
  auto e = [&](int a, int b) { return static_cast<long>(table[static_cast<size_t>(a) * n + b]); };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c) {
        if (mod(e(ab, c) + e(a, b) - e(a, g.mul(b, c)) - e(b, c), modulus) != 0) {
          return CocycleCheck{false, a, b, c};
        }
      }
    }
  }
  return CocycleCheck{};
}

Cocycle::Cocycle(GroupPtr group, int modulus, std::vector<int> exponents)
    : group_(std::move(group)), modulus_(modulus), exponents_(std::move(exponents)) {
  if (modulus_ < 1) throw ParameterError("modulus must be positive");
  for (int& e : exponents_) e = mod(e, modulus_);
  const CocycleCheck chk = check_cocycle(*group_, modulus_, exponents_);
  if (!chk) {
    throw ValidationError("cocycle identity fails at (" + group_->label(chk.g1) + ", " + group_->label(chk.g2) +
                          ", " + group_->label(chk.g3) + ")");
  }
}

Cocycle Cocycle::zero(GroupPtr group, int modulus) {
  const size_t n = group->order();
  return Cocycle(std::move(group), modulus, std::vector<int>(n * n, 0));
}

bool Cocycle::is_zero() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

CycNumber Cocycle::value(int g, int h, int level) const {
  if (level % modulus_ != 0) throw LevelMismatchError("level must be divisible by the cocycle modulus");
  return root_of_unity(level, static_cast<long>(exponent(g, h)) * (level / modulus_));
}

namespace {

void require_compatible(const Cocycle& a, const Cocycle& b) {
  if (a.modulus() != b.modulus()) throw ParameterError("cocycles have different moduli");
  if (a.group() != b.group() && !same_group(*a.group(), *b.group())) {
    throw ParameterError("cocycles live on different groups");
  }
}

}  // namespace

Cocycle operator+(const Cocycle& a, const Cocycle& b) {
  require_compatible(a, b);
  std::vector<int> e(a.exponents_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = a.exponents_[i] + b.exponents_[i];
  return Cocycle(a.group_, a.modulus_, std::move(e));
}

Cocycle operator-(const Cocycle& a, const Cocycle& b) {
  require_compatible(a, b);
  std::vector<int> e(a.exponents_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = a.exponents_[i] - b.exponents_[i];
  return Cocycle(a.group_, a.modulus_, std::move(e));
}

bool operator==(const Cocycle& a, const Cocycle& b) {
  return a.modulus_ == b.modulus_ && (a.group_ == b.group_ || same_group(*a.group_, *b.group_)) &&
         a.exponents_ == b.exponents_;
}

Cocycle coboundary(GroupPtr group, int modulus, const std::vector<int>& b) {
  const int n = group->order();
  if (static_cast<int>(b.size()) != n) throw ShapeError("cochain must have |G| entries");
  std::vector<int> e(static_cast<size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) e[static_cast<size_t>(g) * n + h] = mod(static_cast<long>(b[g]) + b[h] - b[group->mul(g, h)], modulus);
  return Cocycle(std::move(group), modulus, std::move(e));
}

std::optional<std::vector<int>> are_cohomologous(const Cocycle& a, const Cocycle& b) {
  require_compatible(a, b);
  const FiniteGroup& g = *a.group();
  const int n = g.order();
  const int m = a.modulus();
  std::vector<long> rhs(static_cast<size_t>(n) * n);
  for (size_t i = 0; i < rhs.size(); ++i) rhs[i] = mod(static_cast<long>(a.exponents()[i]) - b.exponents()[i], m);
  std::vector<long> v(static_cast<size_t>(n) * n, 0);  // column transform mod M, n x n
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1;

  IntMatrix d = coboundary_matrix_1(g);
  const int rank = diagonalize(
      d,
      [&](int i, int j, std::int64_t k) { rhs[i] = mod(rhs[i] + mod(k, m) * rhs[j], m); },
      [&](int i, int j) { std::swap(rhs[i], rhs[j]); },
      [&](int i, int j, std::int64_t k) {
        for (int r = 0; r < n; ++r) {
          long& vi = v[static_cast<size_t>(r) * n + i];
          vi = mod(vi + mod(k, m) * v[static_cast<size_t>(r) * n + j], m);
        }
      },
      [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(v[static_cast<size_t>(r) * n + i], v[static_cast<size_t>(r) * n + j]);
      });

  std::vector<long> y(n, 0);
  for (int i = 0; i < n * n; ++i) {
    const long r = rhs[i];
    if (i >= rank) {
      if (r != 0) return std::nullopt;
      continue;
    }
    const long di = mod(d.at(i, i), m);
    const long gg = std::gcd(di, static_cast<long>(m));
    if (r % gg != 0) return std::nullopt;
    const long mm = m / gg;
    if (mm == 1) continue;
    // inverse of di/gg modulo mm
    const BigInt inv_den = [&] {
      BigInt out;
      const BigInt base = di / gg, modulus = mm;
      mpz_invert(out.get_mpz_t(), base.get_mpz_t(), modulus.get_mpz_t());
      return out;
    }();
    y[i] = mod((r / gg) * inv_den.get_si(), static_cast<int>(mm));
  }
  std::vector<int> sol(n, 0);
  for (int r = 0; r < n; ++r) {
    long s = 0;
    for (int c = 0; c < n; ++c) s = mod(s + v[static_cast<size_t>(r) * n + c] * y[c], m);
    sol[r] = static_cast<int>(s);
  }
  if (!(coboundary(a.group(), m, sol) == a - b)) throw Error("internal error: coboundary solution does not verify");
  return sol;
}

CohomologyGroup::CohomologyGroup(std::vector<std::int64_t> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] <= 1) throw ParameterError("invariant factors must exceed 1");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) throw ParameterError("invariant factors must form a divisibility chain");
  }
}

std::int64_t CohomologyGroup::order() const {
  std::int64_t o = 1;
  for (auto f : factors_) o *= f;
  return o;
}

std::string CohomologyGroup::to_string() const {
  if (factors_.empty()) return "trivial";
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(factors_[i]);
  }
  return s;
}

std::vector<std::int64_t> canonical_invariant_factors(const std::vector<std::int64_t>& cyclic_orders) {
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;  // prime -> prime powers
  for (std::int64_t n : cyclic_orders) {
    if (n < 1) throw ParameterError("cyclic orders must be positive");
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      std::int64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      by_prime[p].push_back(q);
    }
    if (n > 1) by_prime[n].push_back(n);
  }
  size_t len = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    len = std::max(len, powers.size());
  }
  // factors_desc[k] = product over primes of the k-th largest power
  std::vector<std::int64_t> desc(len, 1);
  for (const auto& [p, powers] : by_prime)
    for (size_t k = 0; k < powers.size(); ++k) desc[k] *= powers[k];
  std::reverse(desc.begin(), desc.end());
  return desc;
}

std::vector<std::int64_t> smith_invariant_factors(std::vector<std::int64_t> a, int rows, int cols) {
  if (a.size() != static_cast<size_t>(rows) * cols) throw ShapeError("matrix data does not match its shape");
  const std::vector<std::int64_t> diag = diagonal_entries(IntMatrix{rows, cols, std::move(a)});
  std::vector<std::int64_t> big;
  for (auto d : diag)
    if (d > 1) big.push_back(d);
  std::vector<std::int64_t> out(diag.size(), 1);
  const std::vector<std::int64_t> chain = canonical_invariant_factors(big);
  std::copy(chain.begin(), chain.end(), out.end() - static_cast<long>(chain.size()));
  return out;
}

CohomologyGroup h2(const FiniteGroup& g, int modulus, int cap) {
  if (modulus < 1) throw ParameterError("modulus must be positive");
  const int n = g.order();
  if (n > cap) {
    throw SizeCapError("H^2 is limited to groups of order <= " + std::to_string(cap) + " (got " + std::to_string(n) + ")");
  }
  // Universal coefficients over the integral bar complex: H^2(G; Z/M) is
  // Ext(H_1, Z/M) + Hom(H_2, Z/M), read off from the Smith forms of the two
  // coboundary matrices.
  const std::vector<std::int64_t> d1 = diagonal_entries(coboundary_matrix_1(g));
  const std::vector<std::int64_t> d2 = diagonal_entries(coboundary_matrix_2(g));
  std::vector<std::int64_t> orders;
  for (auto d : d1) orders.push_back(std::gcd(d, static_cast<std::int64_t>(modulus)));
  for (auto d : d2) orders.push_back(std::gcd(d, static_cast<std::int64_t>(modulus)));
  const long free_rank = static_cast<long>(n) * n - static_cast<long>(d1.size()) - static_cast<long>(d2.size());
  for (long i = 0; i < free_rank; ++i) orders.push_back(modulus);
  std::vector<std::int64_t> kept;
  for (auto o : orders)
    if (o > 1) kept.push_back(o);
  return CohomologyGroup(canonical_invariant_factors(kept));
}

Cocycle change_modulus(const Cocycle& c, int modulus) {
  if (modulus < 1 || modulus % c.modulus() != 0) throw ParameterError("new modulus must be a multiple of the old one");
  const int k = modulus / c.modulus();
  std::vector<int> e = c.exponents();
  for (int& x : e) x *= k;
  return Cocycle(c.group(), modulus, std::move(e));
}

Cocycle random_cocycle(GroupPtr group, int modulus, std::mt19937_64& rng) {
  if (modulus < 1) throw ParameterError("modulus must be positive");
  const int n2 = group->order() * group->order();
  std::vector<long> v(static_cast<size_t>(n2) * n2, 0);
  for (int i = 0; i < n2; ++i) v[static_cast<size_t>(i) * n2 + i] = 1;
  IntMatrix d = coboundary_matrix_2(*group);
  const int rank = diagonalize(
      d, no_row_add, no_swap,
      [&](int i, int j, std::int64_t k) {
        const long km = mod(k, modulus);
        for (int r = 0; r < n2; ++r) {
          long& vi = v[static_cast<size_t>(r) * n2 + i];
          vi = mod(vi + km * v[static_cast<size_t>(r) * n2 + j], modulus);
        }
      },
      [&](int i, int j) {
        for (int r = 0; r < n2; ++r) std::swap(v[static_cast<size_t>(r) * n2 + i], v[static_cast<size_t>(r) * n2 + j]);
      });
  // kernel of diag(d) mod M in the transformed coordinates
  std::vector<long> y(n2);
  for (int i = 0; i < n2; ++i) {
    if (i < rank) {
      const long g = std::gcd(static_cast<long>(mod(d.at(i, i), modulus)), static_cast<long>(modulus));
      y[i] = (modulus / g) * std::uniform_int_distribution<long>(0, g - 1)(rng);
    } else {
      y[i] = std::uniform_int_distribution<long>(0, modulus - 1)(rng);
    }
  }
  std::vector<int> e(n2);
  for (int r = 0; r < n2; ++r) {
    long s = 0;
    for (int c = 0; c < n2; ++c) s = mod(s + v[static_cast<size_t>(r) * n2 + c] * y[c], modulus);
    e[r] = static_cast<int>(s);
  }
  return Cocycle(std::move(group), modulus, std::move(e));
}

Cocycle normalize_cocycle(const Cocycle& c) {
  const int e11 = c.exponent(c.group()->identity(), c.group()->identity());
  std::vector<int> e = c.exponents();
  for (int& x : e) x -= e11;
  return Cocycle(c.group(), c.modulus(), std::move(e));
}

TransportedCocycle transport_cocycle(const Cocycle& c, const Subgroup& h, int s) {
  if (c.group() != h.as_group() && !same_group(*c.group(), *h.as_group())) {
    throw ParameterError("cocycle does not live on the subgroup");
  }
  Subgroup conj = h.conjugate(s);
  const GroupPtr& g = h.parent();
  const int k = h.order();
  std::vector<int> image(k);
  for (int i = 0; i < k; ++i) image[i] = conj.local(g->conj(s, h.global(i)));
  std::vector<int> e(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) e[static_cast<size_t>(image[i]) * k + image[j]] = c.exponent(i, j);
  Cocycle out(conj.as_group(), c.modulus(), std::move(e));
  return TransportedCocycle{std::move(conj), std::move(out)};
}

}  // namespace twochar
