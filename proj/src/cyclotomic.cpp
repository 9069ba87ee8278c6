#include "twochar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "twochar/errors.hpp"

namespace twochar {
namespace {

using IntPoly = std::vector<long>;
using RatPoly = std::vector<BigRational>;

// Exact quotient of integer polynomials, divisor monic.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const size_t dd = den.size() - 1;
  IntPoly quot(num.size() - dd, 0);
  for (size_t i = num.size(); i-- > dd;) {
    long c = num[i];
    quot[i - dd] = c;
    for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) throw Error("cyclotomic division left a remainder");
  }
  return quot;
}

struct LevelData {
  int n = 0;
  int phi = 0;
  IntPoly poly;                 // Phi_N, constant term first
  std::vector<IntPoly> powers;  // x^e mod Phi_N, each of length phi
};

std::mutex g_cache_mutex;
std::map<int, IntPoly> g_poly_cache;
std::map<int, std::shared_ptr<const LevelData>> g_level_cache;

IntPoly cyclotomic_polynomial_locked(int n) {
  if (auto it = g_poly_cache.find(n); it != g_poly_cache.end()) return it->second;
  IntPoly num(static_cast<size_t>(n) + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_exact(num, cyclotomic_polynomial_locked(d));
  }
  g_poly_cache.emplace(n, num);
  return num;
}

const LevelData& level_data(int n) {
  if (n < 1) throw ParameterError("cyclotomic level must be positive, got " + std::to_string(n));
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  if (auto it = g_level_cache.find(n); it != g_level_cache.end()) return *it->second;
  auto data = std::make_shared<LevelData>();
  data->n = n;
  data->poly = cyclotomic_polynomial_locked(n);
  data->phi = static_cast<int>(data->poly.size()) - 1;
  const int phi = data->phi;
  const int count = std::max(n, 2 * phi);
  IntPoly cur(phi, 0);
  cur[0] = 1;
  for (int e = 0; e < count; ++e) {
    data->powers.push_back(cur);
    // cur *= x, reduce by the monic Phi_N
    long top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < phi; ++i) cur[i] -= top * data->poly[i];
  }
  const LevelData& ref = *data;
  g_level_cache.emplace(n, std::move(data));
  return ref;
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder over Q; b must be nonzero after trimming.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly q(a.size() - b.size() + 1);
  const BigRational lead = b.back();
  const long shift = static_cast<long>(b.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= shift; --i) {
    if (a[i] == 0) continue;
    BigRational c = a[i] / lead;
    q[i - shift] = c;
    for (long j = 0; j <= shift; ++j) a[i - shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Reduce an arbitrary-length coefficient vector to canonical form at level n.
std::vector<BigRational> reduce(const LevelData& ld, const std::vector<BigRational>& p) {
  std::vector<BigRational> out(ld.phi);
  for (size_t e = 0; e < p.size(); ++e) {
    if (p[e] == 0) continue;
    if (static_cast<int>(e) < ld.phi) {
      out[e] += p[e];
      continue;
    }
    const IntPoly& pw = ld.powers[e % ld.n];
    for (int i = 0; i < ld.phi; ++i) {
      if (pw[i] != 0) out[i] += p[e] * pw[i];
    }
  }
  return out;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw ParameterError("cyclotomic index must be positive");
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return cyclotomic_polynomial_locked(n);
}

int euler_phi(int n) {
  if (n < 1) throw ParameterError("totient of non-positive integer");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CycNumber::CycNumber(int level) : level_(level), coeffs_(level_data(level).phi) {}

CycNumber::CycNumber(int level, std::vector<BigRational> coeffs) : level_(level) {
  const LevelData& ld = level_data(level);
  for (auto& c : coeffs) c.canonicalize();
  coeffs_ = static_cast<int>(coeffs.size()) == ld.phi ? std::move(coeffs) : reduce(ld, coeffs);
}

CycNumber CycNumber::one(int level) { return rational(level, BigRational(1)); }

CycNumber CycNumber::rational(int level, const BigRational& q) {
  CycNumber r(level);
  r.coeffs_[0] = q;
  r.coeffs_[0].canonicalize();
  return r;
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNumber::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::optional<BigRational> CycNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

std::optional<int> CycNumber::root_of_unity_exponent() const {
  const LevelData& ld = level_data(level_);
  for (int k = 0; k < ld.n; ++k) {
    const IntPoly& pw = ld.powers[k];
    bool match = true;
    for (int i = 0; i < ld.phi && match; ++i) match = coeffs_[i] == pw[i];
    if (match) return k;
  }
  return std::nullopt;
}

void require_same_level(const CycNumber& a, const CycNumber& b) {
  if (a.level() != b.level()) {
    throw LevelMismatchError("cyclotomic levels differ: " + std::to_string(a.level()) + " vs " +
                             std::to_string(b.level()));
  }
}

CycNumber CycNumber::operator-() const {
  CycNumber r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  require_same_level(*this, rhs);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) {
  require_same_level(*this, rhs);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) {
  require_same_level(*this, rhs);
  const LevelData& ld = level_data(level_);
  if (rhs.is_rational()) return *this *= rhs.coeffs_[0];
  if (is_rational()) {
    BigRational q = coeffs_[0];
    *this = rhs;
    return *this *= q;
  }
  std::vector<BigRational> prod(2 * ld.phi - 1);
  for (int i = 0; i < ld.phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < ld.phi; ++j) {
      if (rhs.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce(ld, prod);
  return *this;
}

CycNumber& CycNumber::operator*=(const BigRational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in Q(zeta_" + std::to_string(level_) + ")");
  if (is_rational()) return rational(level_, 1 / coeffs_[0]);
  const LevelData& ld = level_data(level_);
  RatPoly r0(ld.poly.begin(), ld.poly.end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0{};
  RatPoly s1{BigRational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_N is irreducible.
  const BigRational g = r0.at(0);
  for (auto& c : s0) c /= g;
  return CycNumber(level_, reduce(ld, s0));
}

CycNumber CycNumber::pow(long e) const {
  CycNumber base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycNumber acc = one(level_);
  while (k > 0) {
    if (k & 1UL) acc *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return acc;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  require_same_level(a, b);
  return a.coeffs_ == b.coeffs_;
}

CycNumber root_of_unity(int n, long k) {
  const LevelData& ld = level_data(n);
  long e = ((k % n) + n) % n;
  const IntPoly& pw = ld.powers[e];
  std::vector<BigRational> c(ld.phi);
  for (int i = 0; i < ld.phi; ++i) c[i] = pw[i];
  return CycNumber(n, std::move(c));
}

CycNumber embed(const CycNumber& x, int m) {
  const int n = x.level();
  if (m < 1 || m % n != 0) {
    throw LevelMismatchError("cannot embed level " + std::to_string(n) + " into level " + std::to_string(m));
  }
  if (m == n) return x;
  const LevelData& ld = level_data(m);
  const int step = m / n;
  std::vector<BigRational> out(ld.phi);
  for (size_t k = 0; k < x.coeffs().size(); ++k) {
    const BigRational& a = x.coeffs()[k];
    if (a == 0) continue;
    const IntPoly& pw = ld.powers[(static_cast<long>(k) * step) % m];
    for (int i = 0; i < ld.phi; ++i) {
      if (pw[i] != 0) out[i] += a * pw[i];
    }
  }
  return CycNumber(m, std::move(out));
}

CycMatrix::CycMatrix(int level, int rows, int cols)
    : level_(level), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, CycNumber(level)) {
  if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
}

CycMatrix CycMatrix::identity(int level, int n) { return scalar(level, n, CycNumber::one(level)); }

CycMatrix CycMatrix::scalar(int level, int n, const CycNumber& s) {
  CycMatrix m(level, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.level_ != b.level_) throw LevelMismatchError("matrix levels differ");
  if (a.cols_ != b.rows_) {
    throw ShapeError("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " by " +
                     std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  CycMatrix r(a.level_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const CycNumber& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    }
  }
  return r;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum shape mismatch");
  CycMatrix r = a;
  for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool CycMatrix::is_identity() const {
  if (!square()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      const CycNumber& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

CycNumber matrix_trace(const CycMatrix& m) {
  if (!m.square()) {
    throw ShapeError("trace of non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  CycNumber t(m.level());
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

CycMatrix direct_sum(const CycMatrix& a, const CycMatrix& b) {
  if (a.level() != b.level()) throw LevelMismatchError("matrix levels differ");
  CycMatrix r(a.level(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

std::vector<int> row_reduce(CycMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    const CycNumber inv = m(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const CycNumber f = m(r, col);
      for (int j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(CycMatrix m) { return static_cast<int>(row_reduce(m).size()); }

std::optional<CycMatrix> invert(const CycMatrix& m) {
  if (!m.square()) throw ShapeError("inverse of non-square matrix");
  const int n = m.rows();
  CycMatrix aug(m.level(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = CycNumber::one(m.level());
  }
  auto piv = row_reduce(aug);
  if (static_cast<int>(piv.size()) < n || piv.back() >= n) return std::nullopt;
  CycMatrix inv(m.level(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace twochar
