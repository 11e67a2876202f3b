#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "polycurve/lattice.hpp"
#include "polycurve/polynomial.hpp"

namespace polycurve {

/// n = m²ℓ with ℓ squarefree and m maximal. Throws std::invalid_argument for n = 0.
std::pair<std::size_t, std::size_t> decompose(std::size_t n);

/// The (m−1)-dimensional family of cyclic n-roots
///   x_{km+j}     = u^k t_0 ⋯ t_j               (j < m − 1)
///   x_{km+m−1}   = γ u^k t_0^{−m+1} ⋯ t_{m−2}^{−1}
/// for k = 0, …, mℓ − 1.
struct BackelinSet {
  std::size_t n = 0, m = 0, ell = 0;
  std::int64_t alpha = 0;  // m(mℓ − 1)
  std::int64_t beta = 0;   // alpha mod 2
  Complex u;               // exp(2πi/(mℓ))
  Complex gamma;           // exp(iπβ/(mℓ))

  std::size_t blocks() const { return m * ell; }
  std::size_t parameters() const { return m - 1; }
  /// u^k, evaluated in extended precision before rounding.
  Complex u_power(std::int64_t k) const;
};

/// Nullopt when m = 1 (no positive-dimensional set from the construction).
std::optional<BackelinSet> backelin_set(std::size_t n);

/// Exponents of t_0..t_{m−2} in coordinate j of every block (m rows).
IntegerMatrix exponent_table(const BackelinSet& set);

/// |(γ u^{α/2})^{mℓ} − 1|, with u^{α/2} = exp(iπα/(mℓ)).
double gamma_u_defect(const BackelinSet& set);

/// Point of the set for parameters t. Throws std::invalid_argument on a
/// wrong number of parameters or a zero parameter.
ComplexVector parametrize(const BackelinSet& set, std::span<const Complex> t);

/// Recovers t from the first block by the triangular binomial system
/// t_0 ⋯ t_j = x_j and accepts when parametrize(t) reproduces all of x to
/// relative tolerance tol. Throws std::invalid_argument on a zero coordinate
/// or a point of the wrong length.
std::optional<ComplexVector> membership(const BackelinSet& set, std::span<const Complex> x, double tol = 1e-10);

}  // namespace polycurve
