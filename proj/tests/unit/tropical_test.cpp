#include <gtest/gtest.h>

#include <random>
#include <set>

#include "polycurve/tropical.hpp"

using namespace polycurve;

namespace {

// Edge inner normals of the Newton polygon of a bivariate support, by
// testing every pair of points as a supporting line.
std::set<IntegerVector> polygon_normals(const Support& a) {
  std::set<IntegerVector> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      IntegerVector nrm{-(a[j][1] - a[i][1]), a[j][0] - a[i][0]};
      if (nrm[0] == 0 && nrm[1] == 0) continue;
      nrm = primitive(nrm);
      for (int flip = 0; flip < 2; ++flip) {
        const std::int64_t c = dot(nrm, a[i]);
        bool ok = true;
        for (const auto& q : a) ok = ok && dot(nrm, q) >= c;
        if (ok) out.insert(nrm);
        nrm = {-nrm[0], -nrm[1]};
      }
    }
  }
  return out;
}

}  // namespace

TEST(Tropical, InitialFormKeepsMinimizingTerms) {
  const Polynomial f = parse_polynomial("x0 + x1 + x0*x1 + 1", 2);
  const Polynomial g = initial_form(f, std::vector<std::int64_t>{1, 1});
  EXPECT_EQ(to_string(g), "1");
  const Polynomial h = initial_form(f, std::vector<std::int64_t>{1, -1});
  EXPECT_EQ(to_string(h), "x1");
  const Polynomial k = initial_form(f, std::vector<std::int64_t>{1, 0});
  EXPECT_EQ(k, parse_polynomial("x1 + 1", 2));
  EXPECT_THROW(initial_form(f, std::vector<std::int64_t>{1}), std::invalid_argument);
  EXPECT_THROW(initial_form(Polynomial(2), std::vector<std::int64_t>{1, 1}), std::invalid_argument);
}

TEST(Tropical, InitialSupportIsInvariantUnderShift) {
  const Support a{{0, 0}, {1, 2}, {3, 1}, {2, 2}};
  const IntegerVector v{2, -1};
  Support shifted;
  for (const auto& e : a) shifted.push_back({e[0] + 5, e[1] - 3});
  const Support in_a = initial_support(a, v);
  const Support in_s = initial_support(shifted, v);
  ASSERT_EQ(in_a.size(), in_s.size());
  for (std::size_t i = 0; i < in_a.size(); ++i) EXPECT_EQ(in_s[i], (IntegerVector{in_a[i][0] + 5, in_a[i][1] - 3}));
}

TEST(Tropical, CayleyEmbeddingAppendsUnitVectors) {
  const PointConfiguration cfg = cayley_embedding({{{1, 0}, {0, 1}}, {{2, 2}}, {{0, 0}}});
  ASSERT_EQ(cfg.dimension(), 4u);
  EXPECT_EQ(cfg[0], (IntegerVector{1, 0, 0, 0}));
  EXPECT_EQ(cfg[2], (IntegerVector{2, 2, 1, 0}));
  EXPECT_EQ(cfg[3], (IntegerVector{0, 0, 0, 1}));
  EXPECT_EQ(cfg.labels()[2], (PointLabel{1, 0}));
}

TEST(Tropical, SinglePolynomialPretropismsAreEdgeNormals) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> c(0, 5);
  for (int k = 0; k < 40; ++k) {
    std::set<IntegerVector> pts;
    while (pts.size() < 6) pts.insert({c(rng), c(rng)});
    const Support a(pts.begin(), pts.end());
    std::set<IntegerVector> got;
    for (const auto& p : pretropisms(std::vector<Support>{a})) got.insert(p.v);
    std::set<IntegerVector> expected;
    for (const auto& v : polygon_normals(a)) {
      if (initial_support(a, v).size() >= 2) expected.insert(v);
    }
    ASSERT_EQ(got, expected);
  }
}

TEST(Tropical, EveryPretropismHasTwoTermInitialForms) {
  const PolySystem sys = cyclic_system(6);
  const auto found = pretropisms(sys);
  EXPECT_FALSE(found.empty());
  for (const auto& p : found) {
    EXPECT_TRUE(is_pretropism(supports(sys), p.v));
    for (std::size_t i = 0; i < sys.equations(); ++i) {
      EXPECT_GE(initial_form(sys[i], p.v).size(), 2u);
      EXPECT_EQ(p.initial_counts[i], initial_form(sys[i], p.v).size());
    }
  }
}

TEST(Tropical, KnownCyclicCounts) {
  EXPECT_EQ(pretropisms(cyclic_system(4)).size(), 2u);
  EXPECT_TRUE(pretropisms(cyclic_system(5)).empty());
  EXPECT_TRUE(pretropisms(cyclic_system(1)).empty());
}

TEST(Tropical, PretropismsSurviveMinkowskiSum) {
  // the initial form of a product is the product of initial forms, so a
  // pretropism of the system sees at least two vertices of the sum
  const PolySystem sys = cyclic_system(6);
  Polynomial product = sys[0];
  for (std::size_t i = 1; i + 1 < sys.equations(); ++i) product = product * sys[i];
  for (const auto& p : pretropisms(sys)) EXPECT_GE(initial_form(product, p.v).size(), 2u);
}

TEST(Tropical, CyclicFourCones) {
  const PolySystem sys = cyclic_system(4);
  const auto rays = pretropisms(sys);
  const auto cones = cone_structure(sys, rays);
  ASSERT_EQ(cones.size(), 2u);
  for (const auto& c : cones) {
    EXPECT_EQ(c.rays.size(), 1u);
    EXPECT_EQ(c.dim, 1u);
    EXPECT_TRUE(c.maximal);
  }
}
