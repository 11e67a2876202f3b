#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "polycurve/serialization.hpp"

using namespace polycurve;
namespace pj = polycurve::json;

TEST(Serialization, ComplexRoundTrip) {
  const Complex c(1.25, -3.5);
  EXPECT_EQ(pj::encode(c).dump(), "[1.25,-3.5]");
  EXPECT_EQ(pj::decode_complex(pj::encode(c)), c);
  EXPECT_EQ(pj::decode_complex(nlohmann::json(2.0)), Complex(2.0));
  EXPECT_THROW(pj::decode_complex(nlohmann::json::parse("[1]")), std::invalid_argument);
  EXPECT_THROW(pj::decode_complex(nlohmann::json("x")), std::invalid_argument);
}

TEST(Serialization, SolveReportRoundTrip) {
  SolveReport r;
  r.solutions.push_back({{Complex(1, 2), Complex(3, 4)}, 1e-15, 2.0, true, 1});
  r.solutions.push_back({{Complex(-1, 0), Complex(0, -1)}, 1e-14, 3.0, true, 1});
  const auto points = pj::decode_points(pj::encode(r));
  ASSERT_EQ(points.size(), 2u);
  EXPECT_EQ(points[0], r.solutions[0].coordinates);
  EXPECT_EQ(points[1], r.solutions[1].coordinates);
}

TEST(Serialization, PointListForms) {
  const auto a = pj::decode_points(nlohmann::json::parse("[[[1,0],[0,1]], [2, 3]]"));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], (ComplexVector{1.0, Complex(0, 1)}));
  EXPECT_EQ(a[1], (ComplexVector{2.0, 3.0}));
  const auto b = pj::decode_points(nlohmann::json::parse(R"([{"coordinates": [[1,1]]}])"));
  EXPECT_EQ(b[0], (ComplexVector{Complex(1, 1)}));
  EXPECT_THROW(pj::decode_points(nlohmann::json::parse("{}")), std::invalid_argument);
  EXPECT_THROW(pj::decode_points(nlohmann::json::parse("3")), std::invalid_argument);
}

TEST(Serialization, PointsFile) {
  const std::string path = testing::TempDir() + "points.json";
  {
    std::ofstream out(path);
    out << R"({"solutions": [{"coordinates": [[0.5, 0], [1, -1]]}]})";
  }
  const auto p = pj::read_points_file(path);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0][1], Complex(1, -1));
  std::remove(path.c_str());
  EXPECT_THROW(pj::read_points_file(path), std::runtime_error);
}

TEST(Serialization, BackelinFields) {
  const auto j = pj::encode(*backelin_set(12));
  EXPECT_EQ(j.at("m"), 2);
  EXPECT_EQ(j.at("ell"), 3);
  EXPECT_EQ(j.at("blocks"), 6);
  EXPECT_EQ(j.at("exponents").size(), 2u);
}

TEST(Serialization, PretropismFields) {
  const Pretropism p{{1, -1, 1, -1}, {2, 2, 2, 2}};
  const auto j = pj::encode(p);
  EXPECT_EQ(j.at("v"), nlohmann::json::parse("[1,-1,1,-1]"));
}
