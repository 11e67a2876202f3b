#include <gtest/gtest.h>

#include <random>

#include "polycurve/polynomial.hpp"

using namespace polycurve;

TEST(Polynomial, ParsesTermsAndLaurentExponents) {
  const Polynomial f = parse_polynomial("3*x0^2*x1 - x1^-1 + 2*i", 2);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.terms().at({2, 1}), Complex(3.0));
  EXPECT_EQ(f.terms().at({0, -1}), Complex(-1.0));
  EXPECT_EQ(f.terms().at({0, 0}), Complex(0.0, 2.0));
}

TEST(Polynomial, ExpandsProductsAndPowers) {
  const Polynomial f = parse_polynomial("(x0 + x1)^2 - x0^2", 2);
  EXPECT_EQ(to_string(f), to_string(parse_polynomial("2*x0*x1 + x1^2", 2)));
}

TEST(Polynomial, CancellingTermsVanish) {
  EXPECT_TRUE(parse_polynomial("x0 - x0", 1).is_zero());
}

TEST(Polynomial, RejectsMalformedInput) {
  EXPECT_THROW(parse_polynomial("x0 +", 1), ParseError);
  EXPECT_THROW(parse_polynomial("x3", 2), ParseError);
  EXPECT_THROW(parse_polynomial("x0 / x1", 2), ParseError);
  EXPECT_THROW(parse_system("2 2\nx0;"), ParseError);
}

TEST(Polynomial, RoundTripsThroughText) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-3, 3), c(-9, 9);
  for (int k = 0; k < 200; ++k) {
    Polynomial f(3);
    for (int t = 0; t < 5; ++t) f.add_term({e(rng), e(rng), e(rng)}, Complex(c(rng), c(rng)));
    const Polynomial g = parse_polynomial(to_string(f), 3);
    EXPECT_EQ(to_string(g), to_string(f));
    EXPECT_EQ(g.size(), f.size());
  }
}

TEST(Polynomial, SystemRoundTrip) {
  const PolySystem sys = cyclic_system(5);
  EXPECT_EQ(parse_system(to_string(sys)), sys);
}

TEST(Polynomial, CyclicSystemShape) {
  const PolySystem sys = cyclic_system(6);
  ASSERT_EQ(sys.equations(), 6u);
  for (std::size_t k = 0; k + 1 < 6; ++k) {
    EXPECT_EQ(sys[k].size(), 6u);
    EXPECT_EQ(total_degree(sys[k]), static_cast<std::int64_t>(k + 1));
  }
  EXPECT_EQ(sys[5].size(), 2u);
  EXPECT_EQ(cyclic_system(1).equations(), 1u);
}

TEST(Polynomial, EvaluatesAtRootsOfUnity) {
  // x_j = ω^j with ω a primitive 5th root solves cyclic 5-roots up to the
  // last equation, whose value is ω^{10} − 1 = 0.
  const PolySystem sys = cyclic_system(5);
  ComplexVector x;
  for (int j = 0; j < 5; ++j) x.push_back(std::polar(1.0, 2.0 * M_PI * j / 5.0));
  EXPECT_LT(residual(sys, x), 1e-12);
}

TEST(Polynomial, IntegerPower) {
  const Complex z(0.3, -1.2);
  EXPECT_NEAR(std::abs(integer_power(z, 7) - std::pow(z, 7.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(integer_power(z, -3) * integer_power(z, 3) - 1.0), 0.0, 1e-12);
  EXPECT_EQ(integer_power(z, 0), Complex(1.0));
  EXPECT_THROW(integer_power(0.0, -1), std::domain_error);
}

TEST(Polynomial, ExactCoefficients) {
  const auto f = parse_polynomial<GaussianRational>("1/2*x0 + 1/3*i", 1);
  const auto g = to_approximate(f);
  EXPECT_NEAR(std::abs(evaluate(g, std::vector<Complex>{2.0}) - Complex(1.0, 1.0 / 3.0)), 0.0, 1e-15);
}
