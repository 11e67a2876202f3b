#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polycurve/lattice.hpp"
#include "polycurve/polynomial.hpp"
#include "polycurve/solver.hpp"
#include "polycurve/symmetry.hpp"

namespace polycurve {

/// sys after x = z^M, where row `parameter` of M is the direction v.
struct TransformedSystem {
  UnimodularMatrix matrix = UnimodularMatrix::identity(1);
  std::size_t parameter = 0;
  PolySystem full;     // every equation divided by its lowest power of z_parameter
  PolySystem initial;  // z_parameter-free part of `full`, in the other n − 1 variables
  std::vector<std::int64_t> shifts;  // removed powers of z_parameter
};

/// Transforms sys along v with v placed in row `row` of the unimodular matrix.
/// Throws std::invalid_argument if v is zero or not primitive.
TransformedSystem transform_system(const PolySystem& sys, const IntegerVector& v, std::size_t row = 0);

/// Inserts t at position `parameter` into a point of the reduced variables.
ComplexVector with_parameter(std::span<const Complex> reduced, std::size_t parameter, Complex t);

/// z_i = c_i + k_i t^w for the non-parameter coordinates.
struct SecondTerm {
  std::int64_t w = 0;
  ComplexVector k;
};

/// Branch x = z^M(t, y (+ k t^w)) of a space curve.
struct PuiseuxSeries {
  IntegerVector v;
  std::size_t row = 0;
  UnimodularMatrix matrix = UnimodularMatrix::identity(1);
  ComplexVector initial;  // y, the non-parameter z coordinates
  std::optional<SecondTerm> second;
  bool exact = false;     // the leading term alone satisfies the system

  /// z(t) from the truncated series.
  ComplexVector z_at(Complex t) const;
  /// x(t) = z(t)^M.
  ComplexVector x_at(Complex t) const;
  /// Coefficients r with x_j = r_j t^{v_j} for the leading term.
  ComplexVector leading_coefficients() const;
};

struct SeriesConfig {
  TrackerConfig tracker;
  std::size_t row = 0;
  std::int64_t w_max = 32;
  double exact_tolerance = 1e-10;  // full-system residual for the exact flag
  std::size_t exact_samples = 10;  // random t in the annulus 0.5 ≤ |t| ≤ 1.5
  double coefficient_tolerance = 1e-9;
};

/// Solves the initial form system along v and returns one series per toric
/// regular root, with the exact flag decided by sampling the full system
/// and the second term attached when the root is not exact.
std::vector<PuiseuxSeries> leading_terms(const PolySystem& sys, const IntegerVector& v, const SeriesConfig& cfg = {});

/// Same, from an already transformed system and a list of initial roots.
std::vector<PuiseuxSeries> series_from_roots(const PolySystem& sys, const IntegerVector& v,
                                             const TransformedSystem& ts, const std::vector<ComplexPoint>& roots,
                                             const SeriesConfig& cfg = {});

/// True when x(t) from the leading term solves sys at cfg.exact_samples
/// random t (seeded by cfg.tracker.seed).
bool is_exact_curve(const PolySystem& sys, const PuiseuxSeries& s, const SeriesConfig& cfg = {});

/// Second term of the branch through `root` (non-parameter z coordinates) of
/// the transformed system `full` with parameter variable `parameter`.
///
/// Substituting z = root, z_parameter = t leaves each equation i with lowest
/// power rho_i of t, and the Jacobian in the other variables starts at power
/// b_i. The exponent w is the smallest rho_i − b_i; equations with
/// w + b_i = rho_i must cancel their residual, the others must keep their
/// leading Jacobian part zero. Returns nullopt when w < 1, w > w_max, the
/// linear system for k is inconsistent or its only solution is k = 0.
/// Throws std::invalid_argument when root is not toric or solves `full`.
std::optional<SecondTerm> second_term(const PolySystem& full, std::size_t parameter, std::span<const Complex> root,
                                      std::int64_t w_max = 32, double tol = 1e-9);

/// Degree of the monomial curve with tropism v: max(v ∪ 0) − min(v ∪ 0).
/// Throws std::invalid_argument for v = 0.
std::int64_t monomial_curve_degree(std::span<const std::int64_t> v);

/// Poles of the branch with tropism v at t = 0: −min(v ∪ 0). A generic
/// hyperplane meets a curve once per pole order of each of its branches.
std::int64_t branch_pole_order(std::span<const std::int64_t> v);

struct CurveWitness {
  PuiseuxSeries series;
  std::int64_t degree = 0;      // pole order of this branch
  std::size_t orbit_size = 1;  // size of the symmetry orbit of v
};

/// Σ orbit_size × degree.
std::int64_t degree_tally(const std::vector<CurveWitness>& witnesses);

struct CensusEntry {
  IntegerVector v;
  std::size_t orbit_size = 0;
  std::size_t row = 0;
  std::size_t roots = 0;  // toric solutions of the initial form system
  std::size_t exact = 0;
  std::size_t with_second_term = 0;
  std::size_t paths = 0;
};

struct Census {
  std::vector<CensusEntry> entries;
  std::vector<CurveWitness> witnesses;  // exact curves and branches with a second term
};

/// For every orbit representative of the pretropisms of sys under g: solve
/// the initial form system, build the series and keep the curve branches.
/// The row of v in the unimodular matrix is chosen among the entries with
/// |v_r| = 1 (lowest total degree of the initial system), falling back to 0.
Census curve_census(const PolySystem& sys, const SymmetryGroup& g, const SeriesConfig& cfg = {});

/// Row used by curve_census.
std::size_t preferred_row(const PolySystem& sys, const IntegerVector& v);

}  // namespace polycurve
