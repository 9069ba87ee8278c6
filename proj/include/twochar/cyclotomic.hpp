#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N) at a fixed level N.
//
// An element is stored by its coordinates over the power basis
// 1, z, ..., z^(phi(N)-1) of Q[x]/(Phi_N). Coefficients are fully reduced
// rationals, so two elements at the same level are equal iff their
// coefficient vectors are equal.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twochar {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(int n);

/// Euler totient.
int euler_phi(int n);

class CycNumber {
 public:
  /// Zero at the given level.
  explicit CycNumber(int level);
  CycNumber(int level, std::vector<BigRational> coeffs);

  static CycNumber zero(int level) { return CycNumber(level); }
  static CycNumber one(int level);
  static CycNumber rational(int level, const BigRational& q);
  static CycNumber integer(int level, long v) { return rational(level, BigRational(v)); }

  int level() const { return level_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// The rational value, if the number lies in Q.
  std::optional<BigRational> as_rational() const;
  /// k in [0, N) with *this == zeta_N^k, if *this is an N-th root of unity.
  std::optional<int> root_of_unity_exponent() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  CycNumber& operator*=(const BigRational& q);
  CycNumber& operator/=(const CycNumber& rhs) { return *this *= rhs.inverse(); }

  /// Multiplicative inverse, via extended Euclid against Phi_N.
  CycNumber inverse() const;
  CycNumber pow(long e) const;

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator*(CycNumber a, const BigRational& q) { return a *= q; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }

  /// Equality; throws LevelMismatchError for different levels.
  friend bool operator==(const CycNumber& a, const CycNumber& b);

 private:
  int level_;
  std::vector<BigRational> coeffs_;
};

/// zeta_N^k with k reduced mod N.
CycNumber root_of_unity(int n, long k);

/// Image of x under zeta_N -> zeta_M^(M/N). Requires N | M.
CycNumber embed(const CycNumber& x, int m);

/// Throws LevelMismatchError unless both operands share a level.
void require_same_level(const CycNumber& a, const CycNumber& b);

/// Dense row-major matrix over Q(zeta_N).
class CycMatrix {
 public:
  CycMatrix(int level, int rows, int cols);

  static CycMatrix identity(int level, int n);
  static CycMatrix scalar(int level, int n, const CycNumber& s);

  int level() const { return level_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  CycNumber& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const CycNumber& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);

  bool is_identity() const;

 private:
  int level_;
  int rows_;
  int cols_;
  std::vector<CycNumber> data_;
};

/// Sum of the diagonal; throws ShapeError for non-square input.
CycNumber matrix_trace(const CycMatrix& m);

/// Block-diagonal sum diag(a, b).
CycMatrix direct_sum(const CycMatrix& a, const CycMatrix& b);

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in order.
std::vector<int> row_reduce(CycMatrix& m);

int rank(CycMatrix m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<CycMatrix> invert(const CycMatrix& m);

}  // namespace twochar
