#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "twochar/cyclotomic.hpp"
#include "twochar/errors.hpp"

using namespace twochar;

namespace {

CycNumber random_element(int level, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<BigRational> c(euler_phi(level));
  for (auto& q : c) {
    q = BigRational(num(rng), den(rng));
    q.canonicalize();
  }
  return CycNumber(level, c);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-8; }

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    for (int n = 1; n <= 30; ++n) CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
  }

  TEST_CASE("roots of unity") {
    CHECK(root_of_unity(4, 2) == CycNumber::integer(4, -1));
    CHECK(root_of_unity(3, 1) + root_of_unity(3, 2) == CycNumber::integer(3, -1));
    CHECK(embed(root_of_unity(2, 1), 6) == root_of_unity(6, 3));
    CHECK(root_of_unity(6, 5).root_of_unity_exponent() == 5);
    CHECK_FALSE(CycNumber::integer(6, 2).root_of_unity_exponent().has_value());
    for (int n = 1; n <= 24; ++n) {
      CHECK(root_of_unity(n, 1).pow(n).is_one());
      CycNumber sum(n);
      for (int k = 0; k < n; ++k) sum += root_of_unity(n, k);
      CHECK((n == 1 ? sum.is_one() : sum.is_zero()));
    }
  }

  TEST_CASE("arithmetic agrees with numerical evaluation") {
    std::mt19937_64 rng(7);
    for (int level : {3, 5, 8, 12, 15, 24}) {
      for (int t = 0; t < 20; ++t) {
        const CycNumber a = random_element(level, rng), b = random_element(level, rng);
        CHECK(close(oracle::evaluate(a + b), oracle::evaluate(a) + oracle::evaluate(b)));
        CHECK(close(oracle::evaluate(a * b), oracle::evaluate(a) * oracle::evaluate(b)));
        if (!b.is_zero()) CHECK(close(oracle::evaluate(a / b), oracle::evaluate(a) / oracle::evaluate(b)));
      }
      for (int k = 0; k < level; ++k) {
        CHECK(close(oracle::evaluate(root_of_unity(level, k)), std::polar(1.0, 2 * M_PI * k / level)));
      }
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(CycNumber::zero(5).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS((void)(CycNumber::one(3) == CycNumber::one(6)), LevelMismatchError);
    CHECK_THROWS_AS(matrix_trace(CycMatrix(3, 2, 3)), ShapeError);
  }

  TEST_CASE("matrices") {
    CycMatrix m(4, 2, 2);
    m(0, 0) = root_of_unity(4, 1);
    m(0, 1) = CycNumber::integer(4, 1);
    m(1, 0) = CycNumber::integer(4, 0);
    m(1, 1) = CycNumber::integer(4, 2);
    const auto inv = invert(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    CHECK(matrix_trace(m) == root_of_unity(4, 1) + CycNumber::integer(4, 2));
    CycMatrix s(4, 2, 2);
    s(0, 0) = CycNumber::one(4);
    s(0, 1) = CycNumber::integer(4, 2);
    s(1, 0) = CycNumber::integer(4, 2);
    s(1, 1) = CycNumber::integer(4, 4);
    CHECK(rank(s) == 1);
    CHECK_FALSE(invert(s).has_value());
  }
}
