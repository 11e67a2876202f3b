#include "polycurve/backelin.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "polycurve/solver.hpp"

namespace polycurve {
namespace {

using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>;

// exp(iπ·num/den) with the reduction done on integers.
Complex unit_root(std::int64_t num, std::int64_t den) {
  const std::int64_t period = 2 * den;
  num %= period;
  if (num < 0) num += period;
  const Wide angle = boost::math::constants::pi<Wide>() * Wide(num) / Wide(den);
  return {static_cast<double>(cos(angle)), static_cast<double>(sin(angle))};
}

}  // namespace

std::pair<std::size_t, std::size_t> decompose(std::size_t n) {
  if (n == 0) throw std::invalid_argument("decompose: n must be positive");
  std::size_t m = 1;
  for (std::size_t c = 2; c * c <= n; ++c) {
    if (n % (c * c) == 0) m = c;
  }
  return {m, n / (m * m)};
}

Complex BackelinSet::u_power(std::int64_t k) const { return unit_root(2 * k, static_cast<std::int64_t>(m * ell)); }

std::optional<BackelinSet> backelin_set(std::size_t n) {
  auto [m, ell] = decompose(n);
  if (m == 1) return std::nullopt;
  BackelinSet s;
  s.n = n;
  s.m = m;
  s.ell = ell;
  const auto ml = static_cast<std::int64_t>(m * ell);
  s.alpha = static_cast<std::int64_t>(m) * (ml - 1);
  s.beta = s.alpha % 2;
  s.u = unit_root(2, ml);
  s.gamma = unit_root(s.beta, ml);
  return s;
}

IntegerMatrix exponent_table(const BackelinSet& set) {
  const std::size_t m = set.m;
  IntegerMatrix table(m, IntegerVector(m - 1, 0));
  for (std::size_t j = 0; j + 1 < m; ++j)
    for (std::size_t i = 0; i <= j; ++i) table[j][i] = 1;
  for (std::size_t i = 0; i + 1 < m; ++i) table[m - 1][i] = -static_cast<std::int64_t>(m - 1 - i);
  return table;
}

double gamma_u_defect(const BackelinSet& set) {
  const auto ml = static_cast<std::int64_t>(set.m * set.ell);
  const Complex base = set.gamma * unit_root(set.alpha, ml);
  return std::abs(integer_power(base, ml) - 1.0);
}

ComplexVector parametrize(const BackelinSet& set, std::span<const Complex> t) {
  if (t.size() != set.parameters()) throw std::invalid_argument("parametrize: wrong number of parameters");
  for (const auto& c : t) {
    if (c == 0.0) throw std::invalid_argument("parametrize: zero parameter");
  }
  const IntegerMatrix table = exponent_table(set);
  ComplexVector block(set.m);
  for (std::size_t j = 0; j < set.m; ++j) {
    Complex y = j + 1 == set.m ? set.gamma : Complex(1.0);
    for (std::size_t i = 0; i < t.size(); ++i) y *= integer_power(t[i], table[j][i]);
    block[j] = y;
  }
  ComplexVector x;
  x.reserve(set.n);
  for (std::size_t k = 0; k < set.blocks(); ++k) {
    const Complex uk = set.u_power(static_cast<std::int64_t>(k));
    for (const auto& y : block) x.push_back(uk * y);
  }
  return x;
}

std::optional<ComplexVector> membership(const BackelinSet& set, std::span<const Complex> x, double tol) {
  if (x.size() != set.n) throw std::invalid_argument("membership: point has wrong length");
  for (const auto& c : x) {
    if (c == 0.0) throw std::invalid_argument("membership: zero coordinate");
  }
  const IntegerMatrix table = exponent_table(set);
  std::vector<BinomialRelation> relations;
  for (std::size_t j = 0; j + 1 < set.m; ++j) relations.push_back({table[j], Complex(1.0)});
  auto t = solve_triangular_binomial(relations, x.subspan(0, set.m - 1), tol);
  if (!t) return std::nullopt;
  const ComplexVector y = parametrize(set, *t);
  for (std::size_t i = 0; i < set.n; ++i) {
    if (std::abs(y[i] - x[i]) > tol * (1.0 + std::abs(x[i]))) return std::nullopt;
  }
  return t;
}

}  // namespace polycurve
