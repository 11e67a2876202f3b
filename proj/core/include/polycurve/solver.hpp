#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polycurve/polynomial.hpp"

namespace polycurve {

struct ComplexPoint {
  ComplexVector coordinates;
  double residual = 0.0;      // max |f_i| on the full input system
  double condition = 0.0;     // 2-norm condition number of the Jacobian
  bool regular = false;       // condition below TrackerConfig::condition_threshold
  std::size_t multiplicity = 1;  // endpoints merged into this point
};

struct TrackerConfig {
  double initial_step = 0.02;
  double min_step = 1e-10;
  double max_step = 0.1;
  double tracking_tolerance = 1e-8;  // relative Newton update accepted along the path
  double corrector_tolerance = 1e-12;  // endpoint refinement
  int max_corrector_iterations = 3;
  std::size_t max_steps = 1000;
  double endgame_threshold = 1e-4;  // below this s, Newton on the target is tried directly

  double tol_residual = 1e-8;
  double tol_cluster = 1e-6;
  double tol_zero = 1e-8;
  double condition_threshold = 1e10;
  bool keep_singular = true;

  std::uint64_t seed = 0;
  std::size_t threads = 1;

  /// Throws std::invalid_argument on non-positive tolerances or min > max step.
  void validate() const;
};

struct SolveReport {
  std::vector<ComplexPoint> solutions;  // canonically sorted
  std::size_t paths = 0;
  std::size_t path_failures = 0;
  std::size_t at_infinity = 0;
  std::size_t off_torus = 0;
  std::size_t residual_rejected = 0;
  std::size_t singular_dropped = 0;
};

/// Total-degree homotopy for N = n: start system x_i^{d_i} − r_i with random
/// unit r_i, gamma-trick convex homotopy tracked in projective space on a
/// random affine chart, Newton polish, then toric, residual and cluster
/// filtering. Laurent equations are first multiplied by the monomial that
/// clears their negative exponents.
SolveReport solve_square(const PolySystem& sys, const TrackerConfig& cfg = {});

/// N > n: the n highest-degree equations each receive a random combination
/// of the remaining ones (homogenized so degrees are kept), the square system
/// is solved and its roots are filtered on the full system.
SolveReport solve_overdetermined(const PolySystem& sys, const TrackerConfig& cfg = {});

/// Dispatches on N versus n. Throws std::invalid_argument when N < n.
SolveReport solve(const PolySystem& sys, const TrackerConfig& cfg = {});

/// Number of paths solve() tracks: product of the n largest degrees after
/// clearing denominators, 0 for an inconsistent system.
double bezout_number(const PolySystem& sys);

/// Newton refinement on a square system or Gauss-Newton on an overdetermined
/// one. Returns the refined point, or nullopt when a coordinate vanishes or
/// the iteration produces non-finite values.
std::optional<ComplexVector> refine(const PolySystem& sys, ComplexVector x, double tolerance, int max_iterations);

/// Jacobian condition number at x (infinity for rank deficiency).
double condition_number(const PolySystem& sys, std::span<const Complex> x);

/// coefficient · Π t_j^{exponents[j]} = value.
struct BinomialRelation {
  IntegerVector exponents;
  Complex coefficient{1.0, 0.0};
};

/// Solves relations[i](t) = rhs[i] for t when the relations are triangular:
/// for each unknown t_j there is a relation involving only t_0..t_j with a
/// nonzero power of t_j. Pivots are taken in relation order; a pivot power
/// |e| > 1 is inverted on every branch, with backtracking. Every relation is
/// checked to relative tolerance `tol` at the end.
/// Throws std::invalid_argument when some rhs is zero or the relations are
/// not triangular.
std::optional<ComplexVector> solve_triangular_binomial(const std::vector<BinomialRelation>& relations,
                                                       std::span<const Complex> rhs, double tol = 1e-10);

}  // namespace polycurve
