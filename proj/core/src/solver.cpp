#include "polycurve/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

namespace polycurve {

void TrackerConfig::validate() const {
  auto positive = [](double x, const char* name) {
    if (!(x > 0)) throw std::invalid_argument(std::string("TrackerConfig: ") + name + " must be positive");
  };
  positive(initial_step, "initial_step");
  positive(min_step, "min_step");
  positive(max_step, "max_step");
  positive(tracking_tolerance, "tracking_tolerance");
  positive(corrector_tolerance, "corrector_tolerance");
  positive(tol_residual, "tol_residual");
  positive(tol_cluster, "tol_cluster");
  positive(tol_zero, "tol_zero");
  positive(condition_threshold, "condition_threshold");
  if (min_step > max_step) throw std::invalid_argument("TrackerConfig: min_step exceeds max_step");
  if (max_corrector_iterations < 1) throw std::invalid_argument("TrackerConfig: max_corrector_iterations < 1");
  if (threads < 1) throw std::invalid_argument("TrackerConfig: threads < 1");
}

namespace {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

double inf_norm(const CVector& v) { return v.size() ? std::sqrt(v.cwiseAbs2().maxCoeff()) : 0.0; }

// Polynomial form of a Laurent equation: multiplied by the monomial that
// removes negative exponents and any common factor x_j.
Polynomial clear_denominators(const Polynomial& f) {
  const std::size_t n = f.dimension();
  ExponentVector low(n, std::numeric_limits<std::int64_t>::max());
  for (const auto& [e, c] : f.terms())
    for (std::size_t j = 0; j < n; ++j) low[j] = std::min(low[j], e[j]);
  Polynomial out(n);
  for (const auto& [e, c] : f.terms()) {
    ExponentVector s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = e[j] - low[j];
    out.add_term(std::move(s), c);
  }
  return out;
}

std::int64_t degree_of(const ExponentVector& e) {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

// f(x) of degree ≤ d as a form of degree d in (x, h), times h^extra.
Polynomial homogenize(const Polynomial& f, std::int64_t d, std::int64_t extra = 0) {
  const std::size_t n = f.dimension();
  Polynomial out(n + 1);
  for (const auto& [e, c] : f.terms()) {
    ExponentVector h(e);
    h.push_back(d - degree_of(e) + extra);
    out.add_term(std::move(h), c);
  }
  return out;
}

// Homogeneous system with sparse exponent storage and cached power tables.
class FormSystem {
 public:
  FormSystem(const std::vector<Polynomial>& forms, std::size_t vars) : vars_(vars), max_power_(vars, 0) {
    for (const auto& f : forms) {
      begin_.push_back(coef_.size());
      for (const auto& [e, c] : f.terms()) {
        coef_.push_back(c);
        factor_begin_.push_back(var_.size());
        for (std::size_t j = 0; j < vars; ++j) {
          if (e[j] == 0) continue;
          var_.push_back(static_cast<int>(j));
          exp_.push_back(static_cast<int>(e[j]));
          max_power_[j] = std::max<int>(max_power_[j], static_cast<int>(e[j]));
        }
      }
    }
    begin_.push_back(coef_.size());
    factor_begin_.push_back(var_.size());
    power_offset_.push_back(0);
    for (std::size_t j = 0; j < vars; ++j) power_offset_.push_back(power_offset_.back() + max_power_[j] + 1);
  }

  std::size_t equations() const { return begin_.size() - 1; }
  std::size_t vars() const { return vars_; }

  struct Workspace {
    std::vector<Complex> powers, prefix;
  };

  // f(x) into f[0..N), and ∂f/∂x into jac (N × vars) when jac is non-null.
  void evaluate(const Complex* x, Complex* f, CMatrix* jac, Workspace& ws) const {
    ws.powers.resize(power_offset_.back());
    for (std::size_t j = 0; j < vars_; ++j) {
      Complex* p = ws.powers.data() + power_offset_[j];
      p[0] = 1.0;
      for (int k = 1; k <= max_power_[j]; ++k) p[k] = p[k - 1] * x[j];
    }
    ws.prefix.resize(vars_ + 1);
    if (jac) jac->setZero(static_cast<Eigen::Index>(equations()), static_cast<Eigen::Index>(vars_));
    const Complex* pw = ws.powers.data();
    for (std::size_t i = 0; i < equations(); ++i) {
      Complex sum = 0.0;
      for (std::size_t t = begin_[i]; t < begin_[i + 1]; ++t) {
        const std::size_t b = factor_begin_[t];
        const std::size_t k = factor_begin_[t + 1] - b;
        const int* v = var_.data() + b;
        const int* e = exp_.data() + b;
        Complex* pre = ws.prefix.data();
        pre[0] = coef_[t];
        for (std::size_t q = 0; q < k; ++q) pre[q + 1] = pre[q] * pw[power_offset_[v[q]] + e[q]];
        sum += pre[k];
        if (!jac) continue;
        Complex suf = 1.0;
        for (std::size_t q = k; q-- > 0;) {
          const Complex d = static_cast<double>(e[q]) * pw[power_offset_[v[q]] + e[q] - 1];
          (*jac)(static_cast<Eigen::Index>(i), v[q]) += pre[q] * d * suf;
          suf *= pw[power_offset_[v[q]] + e[q]];
        }
      }
      f[i] = sum;
    }
  }

 private:
  std::size_t vars_;
  std::vector<Complex> coef_;
  std::vector<std::size_t> factor_begin_;
  std::vector<int> var_, exp_;
  std::vector<std::size_t> begin_;
  std::vector<int> max_power_;
  std::vector<std::size_t> power_offset_;
};

struct Homotopy {
  const FormSystem& target;
  std::vector<int> degrees;
  std::vector<Complex> start_constants;
  Complex gamma;
  CVector patch;
};

enum class PathStatus { finished, failed };

class Tracker {
 public:
  Tracker(const Homotopy& h, const TrackerConfig& cfg)
      : h_(h), cfg_(cfg), n_(h.degrees.size()), f_(n_), lu_(static_cast<Eigen::Index>(n_ + 1)) {}

  PathStatus track(CVector& x) {
    double s = 1.0;
    double step = cfg_.initial_step;
    int streak = 0;
    for (std::size_t iter = 0; s > 0.0; ++iter) {
      if (iter >= cfg_.max_steps) return PathStatus::failed;
      if (s <= cfg_.endgame_threshold) {
        // Regular endpoints are reached by Newton on the target directly;
        // nearly singular ones are given up.
        next_ = x;
        if (correct(next_, 0.0, cfg_.corrector_tolerance, 6)) {
          x.swap(next_);
          break;
        }
        evaluate(x, 0.0, hval_, &hx_, nullptr);
        lu_.compute(hx_);
        if (lu_.rcond() < 1e-9) return PathStatus::failed;
      }
      const double ds = std::min(step, s);
      bool ok = predict(x, s, ds, next_) && correct(next_, s - ds, cfg_.tracking_tolerance, cfg_.max_corrector_iterations);
      if (ok) {
        x.swap(next_);
        s -= ds;
        if (++streak >= 2) {
          step = std::min(step * 2.0, cfg_.max_step);
          streak = 0;
        }
      } else {
        step *= 0.5;
        streak = 0;
        if (step < cfg_.min_step) return PathStatus::failed;
      }
    }
    correct(x, 0.0, cfg_.corrector_tolerance, 8);
    return x.allFinite() ? PathStatus::finished : PathStatus::failed;
  }

 private:
  // H(x, s) and, on request, ∂H/∂x (with the chart row) and ∂H/∂s.
  void evaluate(const CVector& x, double s, CVector& hval, CMatrix* hx, CVector* hs) {
    const auto n = static_cast<Eigen::Index>(n_);
    h_.target.evaluate(x.data(), f_.data(), hx ? &jf_ : nullptr, ws_);
    hval.resize(n + 1);
    if (hx) hx->resize(n + 1, n + 1);
    if (hs) hs->resize(n + 1);
    const Complex xh = x[n];
    for (Eigen::Index i = 0; i < n; ++i) {
      const int d = h_.degrees[static_cast<std::size_t>(i)];
      const Complex r = h_.start_constants[static_cast<std::size_t>(i)];
      const Complex xi_d1 = integer_power(x[i], d - 1);
      const Complex xh_d1 = integer_power(xh, d - 1);
      const Complex g = xi_d1 * x[i] - r * xh_d1 * xh;
      const Complex gs = h_.gamma * s;
      hval[i] = gs * g + (1.0 - s) * f_[static_cast<std::size_t>(i)];
      if (hs) (*hs)[i] = h_.gamma * g - f_[static_cast<std::size_t>(i)];
      if (hx) {
        hx->row(i) = (1.0 - s) * jf_.row(i);
        (*hx)(i, i) += gs * static_cast<double>(d) * xi_d1;
        (*hx)(i, n) -= gs * r * static_cast<double>(d) * xh_d1;
      }
    }
    hval[n] = h_.patch.dot(x) - 1.0;  // dot conjugates its first argument
    if (hs) (*hs)[n] = 0.0;
    if (hx) hx->row(n) = h_.patch.adjoint();
  }

  bool velocity(const CVector& x, double s, CVector& dx) {
    evaluate(x, s, hval_, &hx_, &hs_);
    lu_.compute(hx_);
    hs_ = -hs_;
    dx.noalias() = lu_.solve(hs_);
    return dx.allFinite();
  }

  // Runge-Kutta 4 from s to s − ds.
  bool predict(const CVector& x, double s, double ds, CVector& out) {
    if (!velocity(x, s, k1_)) return false;
    tmp_ = x - 0.5 * ds * k1_;
    if (!velocity(tmp_, s - 0.5 * ds, k2_)) return false;
    tmp_ = x - 0.5 * ds * k2_;
    if (!velocity(tmp_, s - 0.5 * ds, k3_)) return false;
    tmp_ = x - ds * k3_;
    if (!velocity(tmp_, s - ds, k4_)) return false;
    out = x - (ds / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
    return out.allFinite();
  }

  bool correct(CVector& x, double s, double tol, int iterations) {
    double previous = std::numeric_limits<double>::infinity();
    for (int it = 0; it < iterations; ++it) {
      evaluate(x, s, hval_, &hx_, nullptr);
      lu_.compute(hx_);
      hval_ = -hval_;
      dx_.noalias() = lu_.solve(hval_);
      if (!dx_.allFinite()) return false;
      x += dx_;
      const double size = inf_norm(dx_);
      if (size <= tol * (1.0 + inf_norm(x))) return true;
      if (it > 0 && size > 0.5 * previous) return false;
      previous = size;
    }
    return false;
  }

  const Homotopy& h_;
  const TrackerConfig& cfg_;
  std::size_t n_;
  std::vector<Complex> f_;
  CMatrix jf_, hx_;
  CVector hval_, hs_, dx_, k1_, k2_, k3_, k4_, tmp_, next_;
  Eigen::PartialPivLU<CMatrix> lu_;
  FormSystem::Workspace ws_;
};

Complex unit_random(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

void jacobian(const PolySystem& sys, std::span<const Complex> x, CMatrix& jac, CVector& f) {
  const auto big_n = static_cast<Eigen::Index>(sys.equations());
  const auto n = static_cast<Eigen::Index>(sys.variables());
  jac.setZero(big_n, n);
  f.setZero(big_n);
  for (Eigen::Index i = 0; i < big_n; ++i) {
    for (const auto& [e, c] : sys[static_cast<std::size_t>(i)].terms()) {
      Complex m = c;
      for (Eigen::Index j = 0; j < n; ++j) m *= integer_power(x[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(j)]);
      f[i] += m;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (e[static_cast<std::size_t>(j)] != 0)
          jac(i, j) += static_cast<double>(e[static_cast<std::size_t>(j)]) * m / x[static_cast<std::size_t>(j)];
      }
    }
  }
}

std::vector<std::int64_t> rounded_key(const ComplexVector& x) {
  std::vector<std::int64_t> key;
  for (const auto& c : x) {
    key.push_back(std::llround(c.real() * 1e6));
    key.push_back(std::llround(c.imag() * 1e6));
  }
  return key;
}

bool close(const ComplexVector& a, const ComplexVector& b, double tol) {
  double scale = 1.0;
  for (const auto& c : a) scale = std::max(scale, std::abs(c));
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (std::abs(a[j] - b[j]) > tol * scale) return false;
  }
  return true;
}

// Tracks the square form system `forms` (in n+1 homogeneous variables) and
// filters the endpoints on `full`.
SolveReport run_homotopy(const std::vector<Polynomial>& forms, const std::vector<int>& degrees, const PolySystem& full,
                         const TrackerConfig& cfg) {
  const std::size_t n = full.variables();
  std::mt19937_64 rng(cfg.seed);
  FormSystem target(forms, n + 1);
  Homotopy h{target, degrees, {}, unit_random(rng), CVector(static_cast<Eigen::Index>(n + 1))};
  for (std::size_t i = 0; i < n; ++i) h.start_constants.push_back(unit_random(rng));
  for (Eigen::Index j = 0; j <= static_cast<Eigen::Index>(n); ++j) h.patch[j] = unit_random(rng);

  std::size_t paths = 1;
  for (int d : degrees) {
    if (paths > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(d))
      throw std::overflow_error("solve: total degree too large");
    paths *= static_cast<std::size_t>(d);
  }

  std::vector<std::vector<Complex>> start_roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex base = std::pow(h.start_constants[i], 1.0 / degrees[i]);
    for (int k = 0; k < degrees[i]; ++k)
      start_roots[i].push_back(base * std::polar(1.0, 2.0 * std::numbers::pi * k / degrees[i]));
  }

  std::vector<CVector> endpoints(paths);
  std::vector<char> finished(paths, 0);
  auto worker = [&](std::size_t first, std::size_t stride) {
    Tracker tracker(h, cfg);
    for (std::size_t p = first; p < paths; p += stride) {
      CVector x(static_cast<Eigen::Index>(n + 1));
      std::size_t rest = p;
      for (std::size_t i = 0; i < n; ++i) {
        const auto d = static_cast<std::size_t>(degrees[i]);
        x[static_cast<Eigen::Index>(i)] = start_roots[i][rest % d];
        rest /= d;
      }
      x[static_cast<Eigen::Index>(n)] = 1.0;
      x /= h.patch.dot(x);
      if (tracker.track(x) == PathStatus::finished) {
        endpoints[p] = std::move(x);
        finished[p] = 1;
      }
    }
  };
  const std::size_t threads = std::min(cfg.threads, std::max<std::size_t>(paths, 1));
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (auto& th : pool) th.join();
  }

  SolveReport report;
  report.paths = paths;
  std::vector<ComplexPoint> kept;
  for (std::size_t p = 0; p < paths; ++p) {
    if (!finished[p]) {
      ++report.path_failures;
      continue;
    }
    const CVector& x = endpoints[p];
    const Complex xh = x[static_cast<Eigen::Index>(n)];
    const double scale = inf_norm(x);
    if (std::abs(xh) <= 1e-10 * scale) {
      ++report.at_infinity;
      continue;
    }
    ComplexVector affine(n);
    for (std::size_t j = 0; j < n; ++j) affine[j] = x[static_cast<Eigen::Index>(j)] / xh;
    auto toric = [&](const ComplexVector& y) {
      return std::all_of(y.begin(), y.end(), [&](const Complex& c) { return std::abs(c) > cfg.tol_zero; });
    };
    if (!toric(affine)) {
      ++report.off_torus;
      continue;
    }
    auto refined = refine(full, affine, cfg.corrector_tolerance, 8);
    if (!refined || !toric(*refined)) {
      ++report.off_torus;
      continue;
    }
    ComplexPoint pt;
    pt.coordinates = std::move(*refined);
    pt.residual = residual(full, pt.coordinates);
    if (!(pt.residual < cfg.tol_residual)) {
      ++report.residual_rejected;
      continue;
    }
    pt.condition = condition_number(full, pt.coordinates);
    pt.regular = pt.condition < cfg.condition_threshold;
    if (!pt.regular && !cfg.keep_singular) {
      ++report.singular_dropped;
      continue;
    }
    kept.push_back(std::move(pt));
  }

  std::sort(kept.begin(), kept.end(), [](const ComplexPoint& a, const ComplexPoint& b) {
    return rounded_key(a.coordinates) < rounded_key(b.coordinates);
  });
  for (auto& pt : kept) {
    auto match = std::find_if(report.solutions.begin(), report.solutions.end(), [&](const ComplexPoint& q) {
      return close(q.coordinates, pt.coordinates, cfg.tol_cluster);
    });
    if (match == report.solutions.end()) {
      report.solutions.push_back(std::move(pt));
      continue;
    }
    match->multiplicity += pt.multiplicity;
    if (pt.residual < match->residual) {
      pt.multiplicity = match->multiplicity;
      *match = std::move(pt);
    }
  }
  if (full.equations() == n) {
    for (auto& pt : report.solutions) {
      if (pt.multiplicity > 1) pt.regular = false;
    }
  }
  return report;
}

struct Prepared {
  std::vector<Polynomial> cleared;
  std::vector<int> degrees;
  bool inconsistent = false;
};

Prepared prepare(const PolySystem& sys) {
  Prepared out;
  for (const auto& f : sys) {
    if (f.is_zero()) throw std::invalid_argument("solve: system contains a zero polynomial");
    Polynomial g = clear_denominators(f);
    std::int64_t d = 0;
    for (const auto& [e, c] : g.terms()) d = std::max(d, degree_of(e));
    if (d == 0) out.inconsistent = true;  // a single monomial never vanishes on the torus
    out.cleared.push_back(std::move(g));
    out.degrees.push_back(static_cast<int>(d));
  }
  return out;
}

}  // namespace

SolveReport solve_square(const PolySystem& sys, const TrackerConfig& cfg) {
  cfg.validate();
  if (sys.equations() != sys.variables()) throw std::invalid_argument("solve_square: system is not square");
  Prepared prep = prepare(sys);
  if (prep.inconsistent || sys.variables() == 0) return {};
  std::vector<Polynomial> forms;
  for (std::size_t i = 0; i < prep.cleared.size(); ++i) forms.push_back(homogenize(prep.cleared[i], prep.degrees[i]));
  return run_homotopy(forms, prep.degrees, sys, cfg);
}

SolveReport solve_overdetermined(const PolySystem& sys, const TrackerConfig& cfg) {
  cfg.validate();
  const std::size_t n = sys.variables();
  if (sys.equations() <= n) throw std::invalid_argument("solve_overdetermined: need more equations than variables");
  Prepared prep = prepare(sys);
  if (prep.inconsistent || n == 0) return {};

  std::vector<std::size_t> order(sys.equations());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return prep.degrees[a] > prep.degrees[b]; });

  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Polynomial> forms;
  std::vector<int> degrees;
  for (std::size_t b = 0; b < n; ++b) {
    const std::size_t i = order[b];
    const int d = prep.degrees[i];
    Polynomial form = homogenize(prep.cleared[i], d);
    for (std::size_t x = n; x < order.size(); ++x) {
      const std::size_t e = order[x];
      Polynomial extra = homogenize(prep.cleared[e], prep.degrees[e], d - prep.degrees[e]);
      form = form + scale(extra, unit_random(rng));
    }
    forms.push_back(std::move(form));
    degrees.push_back(d);
  }
  return run_homotopy(forms, degrees, sys, cfg);
}

double bezout_number(const PolySystem& sys) {
  if (sys.equations() < sys.variables()) throw std::invalid_argument("bezout_number: fewer equations than variables");
  Prepared prep = prepare(sys);
  if (prep.inconsistent) return 0.0;
  std::sort(prep.degrees.begin(), prep.degrees.end(), std::greater<>());
  double paths = 1.0;
  for (std::size_t i = 0; i < sys.variables(); ++i) paths *= prep.degrees[i];
  return paths;
}

SolveReport solve(const PolySystem& sys, const TrackerConfig& cfg) {
  if (sys.equations() < sys.variables()) throw std::invalid_argument("solve: fewer equations than variables");
  if (sys.equations() == sys.variables()) return solve_square(sys, cfg);
  return solve_overdetermined(sys, cfg);
}

std::optional<ComplexVector> refine(const PolySystem& sys, ComplexVector x, double tolerance, int max_iterations) {
  if (x.size() != sys.variables()) throw std::invalid_argument("refine: point has wrong length");
  CMatrix jac;
  CVector f;
  for (int it = 0; it < max_iterations; ++it) {
    for (const auto& c : x) {
      if (std::abs(c) < 1e-300) return std::nullopt;
    }
    jacobian(sys, x, jac, f);
    CVector dx = sys.equations() == sys.variables() ? CVector(jac.partialPivLu().solve(-f))
                                                    : CVector(jac.colPivHouseholderQr().solve(-f));
    if (!dx.allFinite()) break;
    double xnorm = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] += dx[static_cast<Eigen::Index>(j)];
      xnorm = std::max(xnorm, std::abs(x[j]));
    }
    if (inf_norm(dx) <= tolerance * (1.0 + xnorm)) break;
  }
  for (const auto& c : x) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || std::abs(c) < 1e-300) return std::nullopt;
  }
  return x;
}

double condition_number(const PolySystem& sys, std::span<const Complex> x) {
  CMatrix jac;
  CVector f;
  jacobian(sys, x, jac, f);
  Eigen::JacobiSVD<CMatrix> svd(jac);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0.0;
  const double smin = sv[sv.size() - 1];
  if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
  return sv[0] / smin;
}

std::optional<ComplexVector> solve_triangular_binomial(const std::vector<BinomialRelation>& relations,
                                                       std::span<const Complex> rhs, double tol) {
  if (relations.size() != rhs.size()) throw std::invalid_argument("solve_triangular_binomial: size mismatch");
  for (const auto& r : rhs) {
    if (r == Complex(0.0)) throw std::invalid_argument("solve_triangular_binomial: zero right-hand side");
  }
  if (relations.empty()) return ComplexVector{};
  const std::size_t m = relations.front().exponents.size();

  // pivot[j]: first relation in which t_j is the last variable present
  std::vector<std::size_t> pivot(m, relations.size());
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& e = relations[r].exponents;
    if (e.size() != m) throw std::invalid_argument("solve_triangular_binomial: ragged exponents");
    std::size_t last = m;
    for (std::size_t j = m; j-- > 0;) {
      if (e[j] != 0) {
        last = j;
        break;
      }
    }
    if (last < m && pivot[last] == relations.size()) pivot[last] = r;
  }
  for (auto p : pivot) {
    if (p == relations.size()) throw std::invalid_argument("solve_triangular_binomial: relations are not triangular");
  }

  auto value = [&](const BinomialRelation& rel, const ComplexVector& t) {
    Complex v = rel.coefficient;
    for (std::size_t j = 0; j < m; ++j) v *= integer_power(t[j], rel.exponents[j]);
    return v;
  };
  auto verify = [&](const ComplexVector& t) {
    for (std::size_t r = 0; r < relations.size(); ++r) {
      if (std::abs(value(relations[r], t) - rhs[r]) > tol * std::max(1.0, std::abs(rhs[r]))) return false;
    }
    return true;
  };

  ComplexVector t(m, Complex(1.0));
  std::function<bool(std::size_t)> descend = [&](std::size_t j) -> bool {
    if (j == m) return verify(t);
    const auto& rel = relations[pivot[j]];
    Complex known = rel.coefficient;
    for (std::size_t l = 0; l < j; ++l) known *= integer_power(t[l], rel.exponents[l]);
    const std::int64_t e = rel.exponents[j];
    Complex target = rhs[pivot[j]] / known;
    if (e < 0) target = 1.0 / target;
    const auto k = static_cast<int>(std::llabs(e));
    const Complex root = std::pow(target, 1.0 / k);
    for (int b = 0; b < k; ++b) {
      t[j] = root * std::polar(1.0, 2.0 * std::numbers::pi * b / k);
      if (descend(j + 1)) return true;
    }
    return false;
  };
  if (descend(0)) return t;
  return std::nullopt;
}

}  // namespace polycurve
