#include "polycurve/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "polycurve/tropical.hpp"

namespace polycurve {

TransformedSystem transform_system(const PolySystem& sys, const IntegerVector& v, std::size_t row) {
  const std::size_t n = sys.variables();
  if (v.size() != n) throw std::invalid_argument("transform_system: direction has wrong length");
  TransformedSystem out;
  out.matrix = extend_to_unimodular(v, row);
  out.parameter = row;
  std::vector<Polynomial> full, initial;
  for (const auto& f : sys) {
    auto [g, shift] = normalize_variable(monomial_transform(f, out.matrix), row);
    Polynomial reduced(n - 1);
    for (const auto& [e, c] : g.terms()) {
      if (e[row] != 0) continue;
      ExponentVector r(e);
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(row));
      reduced.add_term(std::move(r), c);
    }
    full.push_back(std::move(g));
    initial.push_back(std::move(reduced));
    out.shifts.push_back(shift);
  }
  out.full = PolySystem(n, std::move(full));
  out.initial = PolySystem(n - 1, std::move(initial));
  return out;
}

ComplexVector with_parameter(std::span<const Complex> reduced, std::size_t parameter, Complex t) {
  if (parameter > reduced.size()) throw std::out_of_range("with_parameter: parameter index");
  ComplexVector z(reduced.begin(), reduced.end());
  z.insert(z.begin() + static_cast<std::ptrdiff_t>(parameter), t);
  return z;
}

ComplexVector PuiseuxSeries::z_at(Complex t) const {
  ComplexVector reduced = initial;
  if (second) {
    const Complex tw = integer_power(t, second->w);
    for (std::size_t i = 0; i < reduced.size(); ++i) reduced[i] += second->k[i] * tw;
  }
  return with_parameter(reduced, row, t);
}

ComplexVector PuiseuxSeries::x_at(Complex t) const {
  const ComplexVector z = z_at(t);
  const std::size_t n = z.size();
  ComplexVector x(n, Complex(1.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[j] *= integer_power(z[i], matrix[i][j]);
  return x;
}

ComplexVector PuiseuxSeries::leading_coefficients() const {
  const ComplexVector z = with_parameter(initial, row, Complex(1.0));
  const std::size_t n = z.size();
  ComplexVector r(n, Complex(1.0));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0; j < n; ++j) r[j] *= integer_power(z[i], matrix[i][j]);
  }
  return r;
}

bool is_exact_curve(const PolySystem& sys, const PuiseuxSeries& s, const SeriesConfig& cfg) {
  PuiseuxSeries leading = s;
  leading.second.reset();
  std::mt19937_64 rng(cfg.tracker.seed);
  std::uniform_real_distribution<double> radius(0.5, 1.5), angle(0.0, 2.0 * std::numbers::pi);
  for (std::size_t k = 0; k < cfg.exact_samples; ++k) {
    const Complex t = std::polar(radius(rng), angle(rng));
    if (!(residual(sys, leading.x_at(t)) < cfg.exact_tolerance)) return false;
  }
  return true;
}

std::optional<SecondTerm> second_term(const PolySystem& full, std::size_t parameter, std::span<const Complex> root,
                                      std::int64_t w_max, double tol) {
  const std::size_t n = full.variables();
  if (parameter >= n) throw std::out_of_range("second_term: parameter index");
  if (root.size() + 1 != n) throw std::invalid_argument("second_term: root has wrong length");
  for (const auto& c : root) {
    if (std::abs(c) == 0.0) throw std::invalid_argument("second_term: root is not toric");
  }
  const ComplexVector z = with_parameter(root, parameter, Complex(1.0));
  const auto m = static_cast<Eigen::Index>(n - 1);
  constexpr std::int64_t none = std::numeric_limits<std::int64_t>::max();

  struct Row {
    std::int64_t rho = none;  // lowest power of t left after substitution
    Complex rho_coefficient;
    std::int64_t b = none;  // lowest power of t in the Jacobian row
    Eigen::RowVectorXcd jacobian;
  };
  std::vector<Row> rows;
  bool all_vanish = true;
  for (const auto& f : full) {
    std::map<std::int64_t, Complex> value;
    std::map<std::int64_t, Eigen::RowVectorXcd> jac;
    double scale = 0.0;
    for (const auto& [e, c] : f.terms()) {
      Complex mono = c;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != parameter) mono *= integer_power(z[j], e[j]);
      }
      scale = std::max(scale, std::abs(mono));
      const std::int64_t power = e[parameter];
      value[power] += mono;
      auto [it, fresh] = jac.try_emplace(power, Eigen::RowVectorXcd::Zero(m));
      for (std::size_t j = 0, col = 0; j < n; ++j) {
        if (j == parameter) continue;
        if (e[j] != 0) it->second[static_cast<Eigen::Index>(col)] += static_cast<double>(e[j]) * mono / z[j];
        ++col;
      }
    }
    const double eps = tol * (1.0 + scale);
    Row r;
    for (const auto& [power, c] : value) {
      if (std::abs(c) <= eps) continue;
      if (power == 0) throw std::invalid_argument("second_term: root does not solve the initial form system");
      r.rho = power;
      r.rho_coefficient = c;
      all_vanish = false;
      break;
    }
    for (const auto& [power, row] : jac) {
      if (row.cwiseAbs().maxCoeff() <= eps) continue;
      r.b = power;
      r.jacobian = row;
      break;
    }
    rows.push_back(std::move(r));
  }
  if (all_vanish) throw std::invalid_argument("second_term: root solves the full system");

  std::int64_t w = none;
  for (const auto& r : rows) {
    if (r.rho == none) continue;
    if (r.b == none) return std::nullopt;  // residual no k can reach
    w = std::min(w, r.rho - r.b);
  }
  if (w < 1 || w > w_max) return std::nullopt;

  std::vector<const Row*> used;
  for (const auto& r : rows) {
    if (r.b != none) used.push_back(&r);
  }
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(used.size()), m);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(used.size()));
  for (std::size_t i = 0; i < used.size(); ++i) {
    a.row(static_cast<Eigen::Index>(i)) = used[i]->jacobian;
    if (used[i]->rho != none && used[i]->b + w == used[i]->rho) rhs[static_cast<Eigen::Index>(i)] = -used[i]->rho_coefficient;
  }
  Eigen::VectorXcd k = a.completeOrthogonalDecomposition().solve(rhs);
  if (!k.allFinite()) return std::nullopt;
  const double mismatch = (a * k - rhs).cwiseAbs().maxCoeff();
  if (mismatch > 1e3 * tol * (1.0 + rhs.cwiseAbs().maxCoeff())) return std::nullopt;
  if (k.cwiseAbs().maxCoeff() <= tol) return std::nullopt;

  SecondTerm out;
  out.w = w;
  for (Eigen::Index i = 0; i < m; ++i) {
    Complex c = k[i];
    // snap numerical noise on exactly vanishing coordinates
    if (std::abs(c) <= tol) c = 0.0;
    out.k.push_back(c);
  }
  return out;
}

std::vector<PuiseuxSeries> series_from_roots(const PolySystem& sys, const IntegerVector& v,
                                             const TransformedSystem& ts, const std::vector<ComplexPoint>& roots,
                                             const SeriesConfig& cfg) {
  std::vector<PuiseuxSeries> out;
  for (const auto& root : roots) {
    if (!root.regular) continue;
    PuiseuxSeries s;
    s.v = v;
    s.row = ts.parameter;
    s.matrix = ts.matrix;
    s.initial = root.coordinates;
    s.exact = is_exact_curve(sys, s, cfg);
    if (!s.exact) {
      try {
        s.second = second_term(ts.full, ts.parameter, s.initial, cfg.w_max, cfg.coefficient_tolerance);
      } catch (const std::invalid_argument&) {
        s.second.reset();
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PuiseuxSeries> leading_terms(const PolySystem& sys, const IntegerVector& v, const SeriesConfig& cfg) {
  if (sys.variables() < 2) return {};
  TransformedSystem ts = transform_system(sys, v, cfg.row);
  SolveReport report = solve(ts.initial, cfg.tracker);
  return series_from_roots(sys, v, ts, report.solutions, cfg);
}

std::int64_t monomial_curve_degree(std::span<const std::int64_t> v) {
  if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }))
    throw std::invalid_argument("monomial_curve_degree: zero direction");
  std::int64_t hi = 0, lo = 0;
  for (auto x : v) {
    hi = std::max(hi, x);
    lo = std::min(lo, x);
  }
  return hi - lo;
}

std::int64_t branch_pole_order(std::span<const std::int64_t> v) {
  std::int64_t lo = 0;
  for (auto x : v) lo = std::min(lo, x);
  return -lo;
}

std::int64_t degree_tally(const std::vector<CurveWitness>& witnesses) {
  std::int64_t total = 0;
  for (const auto& w : witnesses) total += static_cast<std::int64_t>(w.orbit_size) * w.degree;
  return total;
}

std::size_t preferred_row(const PolySystem& sys, const IntegerVector& v) {
  std::size_t best = 0;
  double best_paths = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (std::llabs(v[r]) != 1) continue;
    const double paths = bezout_number(transform_system(sys, v, r).initial);
    if (paths < best_paths) {
      best_paths = paths;
      best = r;
    }
  }
  return best;
}

Census curve_census(const PolySystem& sys, const SymmetryGroup& g, const SeriesConfig& cfg) {
  Census census;
  std::vector<IntegerVector> directions;
  for (const auto& p : pretropisms(sys)) directions.push_back(p.v);
  for (const auto& orbit : orbit_representatives(directions, g)) {
    CensusEntry entry;
    entry.v = orbit.representative;
    entry.orbit_size = orbit.orbit_size;
    entry.row = preferred_row(sys, entry.v);
    SeriesConfig local = cfg;
    local.row = entry.row;
    TransformedSystem ts = transform_system(sys, entry.v, entry.row);
    SolveReport report = solve(ts.initial, local.tracker);
    entry.paths = report.paths;
    entry.roots = report.solutions.size();
    for (auto& s : series_from_roots(sys, entry.v, ts, report.solutions, local)) {
      if (!s.exact && !s.second) continue;
      (s.exact ? entry.exact : entry.with_second_term) += 1;
      CurveWitness w{std::move(s), branch_pole_order(entry.v), entry.orbit_size};
      census.witnesses.push_back(std::move(w));
    }
    census.entries.push_back(std::move(entry));
  }
  return census;
}

}  // namespace polycurve
