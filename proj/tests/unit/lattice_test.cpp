#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "polycurve/lattice.hpp"
#include "polycurve/polynomial.hpp"

using namespace polycurve;

TEST(Lattice, DeterminantAndRank) {
  EXPECT_EQ(determinant({{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), -3);
  EXPECT_EQ(rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 0}}), 2u);
  EXPECT_EQ(independent_rows({{1, 0}, {2, 0}, {0, 1}}), (std::vector<std::size_t>{0, 2}));
}

TEST(Lattice, DeterminantNeedsWideIntegers) {
  const std::int64_t big = 3037000499;  // big² overflows int64
  EXPECT_EQ(determinant({{big, 0}, {0, big}}), Integer(big) * Integer(big));
}

TEST(Lattice, ExtendsUnitEntryByReplacingIdentityRow) {
  const UnimodularMatrix m = extend_to_unimodular({1, -1, 0, 1, 0, 0, -1, 0}, 0);
  IntegerMatrix expected(8, IntegerVector(8, 0));
  for (std::size_t i = 0; i < 8; ++i) expected[i][i] = 1;
  expected[0] = {1, -1, 0, 1, 0, 0, -1, 0};
  EXPECT_EQ(m.rows(), expected);
}

TEST(Lattice, ExtendsWithoutUnitEntry) {
  const IntegerVector v{6, 10, 15};
  for (std::size_t row = 0; row < 3; ++row) {
    const UnimodularMatrix m = extend_to_unimodular(v, row);
    EXPECT_EQ(m.rows()[row], v);
    EXPECT_EQ(std::abs(m.determinant()), 1);
  }
}

TEST(Lattice, RejectsBadVectors) {
  EXPECT_THROW(extend_to_unimodular({0, 0}), std::invalid_argument);
  EXPECT_THROW(extend_to_unimodular({2, 4}), std::invalid_argument);
  EXPECT_THROW(extend_to_unimodular({1, 0}, 2), std::out_of_range);
  EXPECT_THROW(UnimodularMatrix({{2, 0}, {0, 1}}), std::invalid_argument);
}

TEST(Lattice, RandomPrimitiveVectorsGiveUnimodularMatrices) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = dim(rng);
    const IntegerVector v = oracle::random_primitive(rng, n, 1000);
    const std::size_t row = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const UnimodularMatrix m = extend_to_unimodular(v, row);
    const Integer det = determinant(m.rows());
    ASSERT_TRUE(det == 1 || det == -1);
    ASSERT_EQ(m.rows()[row], v);
  }
}

TEST(Lattice, InverseUndoesTransform) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const UnimodularMatrix m = extend_to_unimodular(oracle::random_primitive(rng, 5, 7), 2);
    const UnimodularMatrix inv = m.inverse();
    const IntegerVector a = oracle::random_primitive(rng, 5, 9);
    EXPECT_EQ(inv.apply(m.apply(a)), a);
  }
}

TEST(Lattice, MonomialTransformMatchesSubstitution) {
  // x = z^M means x_j = Π_i z_i^{M[i][j]}
  const UnimodularMatrix m = extend_to_unimodular({1, -1, 1}, 0);
  const Polynomial f = parse_polynomial("x0*x1 + x1*x2 + 3*x2^2", 3);
  const Polynomial g = monomial_transform(f, m);
  const ComplexVector z{{0.7, 0.2}, {-1.1, 0.4}, {0.3, -0.9}};
  ComplexVector x(3, 1.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) x[j] *= integer_power(z[i], m[i][j]);
  EXPECT_NEAR(std::abs(evaluate(g, z) - evaluate(f, x)), 0.0, 1e-12);
}

TEST(Lattice, NormalizeFactorsOutLowestPower) {
  const Polynomial f = parse_polynomial("x0^-2*x1 + x0^3", 2);
  auto [g, shift] = normalize_z0(f);
  EXPECT_EQ(shift, -2);
  EXPECT_EQ(to_string(g), to_string(parse_polynomial("x1 + x0^5", 2)));
  EXPECT_THROW(normalize_z0(Polynomial(2)), std::invalid_argument);
}
