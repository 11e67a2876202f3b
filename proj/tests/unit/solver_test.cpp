#include <gtest/gtest.h>

#include <random>

#include "polycurve/solver.hpp"

using namespace polycurve;

namespace {

Polynomial binomial(std::size_t n, std::size_t var, std::int64_t d, Complex c) {
  Polynomial f(n);
  ExponentVector e(n, 0);
  e[var] = d;
  f.add_term(e, 1.0);
  f.add_term(ExponentVector(n, 0), -c);
  return f;
}

}  // namespace

TEST(Solver, UnivariateRootCountLaw) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (std::int64_t d = 1; d <= 12; ++d) {
    const Complex c(u(rng), u(rng));
    const SolveReport r = solve(PolySystem(1, {binomial(1, 0, d, c)}));
    ASSERT_EQ(r.solutions.size(), static_cast<std::size_t>(d)) << "degree " << d;
    for (const auto& s : r.solutions) {
      EXPECT_LT(std::abs(integer_power(s.coordinates[0], d) - c), 1e-10);
      EXPECT_TRUE(s.regular);
      EXPECT_EQ(s.multiplicity, 1u);
    }
  }
}

TEST(Solver, ProductOfBinomials) {
  const PolySystem sys(2, {binomial(2, 0, 3, 2.0), binomial(2, 1, 4, Complex(0.0, 1.0))});
  EXPECT_EQ(solve(sys).solutions.size(), 12u);
}

TEST(Solver, CyclicRootCounts) {
  EXPECT_EQ(solve(cyclic_system(3)).solutions.size(), 6u);
  EXPECT_EQ(solve(cyclic_system(5)).solutions.size(), 70u);
}

TEST(Solver, IsDeterministicForASeed) {
  TrackerConfig cfg;
  cfg.seed = 9;
  const auto a = solve(cyclic_system(5), cfg);
  const auto b = solve(cyclic_system(5), cfg);
  ASSERT_EQ(a.solutions.size(), b.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i) EXPECT_EQ(a.solutions[i].coordinates, b.solutions[i].coordinates);
}

TEST(Solver, ThreadsGiveTheSameRoots) {
  TrackerConfig cfg;
  cfg.threads = 3;
  const auto a = solve(cyclic_system(5));
  const auto b = solve(cyclic_system(5), cfg);
  ASSERT_EQ(a.solutions.size(), b.solutions.size());
}

TEST(Solver, LaurentEquationsAreCleared) {
  // x0 − x0^-1 = 0 → x0 = ±1
  const PolySystem sys = parse_system("1 1\nx0 - x0^-1;");
  EXPECT_EQ(solve(sys).solutions.size(), 2u);
}

TEST(Solver, OffTorusRootsAreDropped) {
  // x0·(x0 − 1): only x0 = 1 lies on the torus
  const PolySystem sys = parse_system("1 1\nx0^2 - x0;");
  const auto r = solve(sys);
  ASSERT_EQ(r.solutions.size(), 1u);
  EXPECT_NEAR(std::abs(r.solutions[0].coordinates[0] - 1.0), 0.0, 1e-10);
}

TEST(Solver, Overdetermined) {
  // x + y + 1, x·y − 1, x^2 + x + 1 share the two roots (ω, ω²), (ω², ω)
  const PolySystem sys = parse_system("2 3\nx0 + x1 + 1;\nx0*x1 - 1;\nx0^2 + x0 + 1;");
  const auto r = solve(sys);
  ASSERT_EQ(r.solutions.size(), 2u);
  for (const auto& s : r.solutions) EXPECT_LT(residual(sys, s.coordinates), 1e-10);
}

TEST(Solver, InconsistentAndBadInput) {
  EXPECT_TRUE(solve(parse_system("1 1\n3*x0;")).solutions.empty());
  EXPECT_THROW(solve(PolySystem(2, {binomial(2, 0, 2, 1.0)})), std::invalid_argument);
  EXPECT_THROW(solve(PolySystem(1, {Polynomial(1)})), std::invalid_argument);
  TrackerConfig bad;
  bad.min_step = 1.0;
  bad.max_step = 0.1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Solver, SingularRootIsFlagged) {
  // (x − 1)^2 has a double root
  const auto r = solve(parse_system("1 1\nx0^2 - 2*x0 + 1;"));
  for (const auto& s : r.solutions) EXPECT_FALSE(s.regular);
}

TEST(Solver, BezoutNumber) {
  EXPECT_EQ(bezout_number(cyclic_system(5)), 120.0);
  EXPECT_EQ(bezout_number(parse_system("1 1\nx0^-2 + x0;")), 3.0);
}

TEST(Solver, TriangularBinomial) {
  // t0 = 2, t0·t1 = 6, t0·t1^2 = ±18 with a square pivot
  std::vector<BinomialRelation> rel{{{1, 0}, 1.0}, {{1, 2}, 1.0}};
  const ComplexVector rhs{2.0, 18.0};
  const auto t = solve_triangular_binomial(rel, rhs);
  ASSERT_TRUE(t.has_value());
  EXPECT_NEAR(std::abs((*t)[0] - 2.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs((*t)[1] * (*t)[1] - 9.0), 0.0, 1e-12);
  EXPECT_THROW(solve_triangular_binomial(rel, ComplexVector{0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(solve_triangular_binomial({{{0, 1}, 1.0}, {{0, 1}, 1.0}}, rhs), std::invalid_argument);
}

TEST(Solver, RefineAndCondition) {
  const PolySystem sys = parse_system("2 2\nx0^2 - 2;\nx1 - x0;");
  auto x = refine(sys, {1.4, 1.4}, 1e-14, 20);
  ASSERT_TRUE(x.has_value());
  EXPECT_NEAR((*x)[0].real(), std::sqrt(2.0), 1e-12);
  EXPECT_LT(condition_number(sys, *x), 10.0);
}
