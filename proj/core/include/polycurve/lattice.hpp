#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "polycurve/exact.hpp"
#include "polycurve/polynomial.hpp"

namespace polycurve {

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntegerMatrix& m);

/// Exact rank over the rationals.
std::size_t rank(const IntegerMatrix& rows);

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in the given order.
std::vector<std::size_t> independent_rows(const IntegerMatrix& rows);

/// Square integer matrix with determinant ±1.
///
/// Convention: a monomial substitution x = z^M means
///   x_j = prod_i z_i^{M[i][j]},
/// so the exponent a of x^a becomes M·a (a read as a column vector). With v
/// in row 0 and the identity below it, x_j = z_0^{v_j} z_j for j ≥ 1, e.g.
/// v = (1,-1,1,-1) gives x1 = z1/z0 and x2 = z0·z2.
class UnimodularMatrix {
 public:
  /// Throws std::invalid_argument unless rows form a square matrix with |det| = 1.
  explicit UnimodularMatrix(IntegerMatrix rows);

  static UnimodularMatrix identity(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  const IntegerVector& operator[](std::size_t i) const { return rows_[i]; }
  const IntegerMatrix& rows() const { return rows_; }
  int determinant() const { return det_; }

  UnimodularMatrix inverse() const;

  /// M·a: the z-exponent of the x-monomial x^a.
  ExponentVector apply(std::span<const std::int64_t> a) const;

  friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b) { return a.rows_ == b.rows_; }

 private:
  IntegerMatrix rows_;
  int det_ = 1;
};

/// Unimodular matrix whose row `row` equals v. When v[row] = ±1 the other
/// rows are the corresponding identity rows; otherwise the completion comes
/// from extended-gcd column reduction of v.
/// Throws std::invalid_argument if v is zero or not primitive.
UnimodularMatrix extend_to_unimodular(const IntegerVector& v, std::size_t row = 0);

/// Substitutes x = z^M exactly.
template <class C>
BasicLaurentPolynomial<C> monomial_transform(const BasicLaurentPolynomial<C>& f, const UnimodularMatrix& m) {
  if (m.size() != f.dimension()) throw std::invalid_argument("monomial_transform: dimension mismatch");
  BasicLaurentPolynomial<C> out(f.dimension());
  for (const auto& [e, c] : f.terms()) out.add_term(m.apply(e), c);
  return out;
}

/// Divides out the lowest power of variable `var`. Returns the shifted
/// polynomial and the removed power. Throws on the zero polynomial.
template <class C>
std::pair<BasicLaurentPolynomial<C>, std::int64_t> normalize_variable(const BasicLaurentPolynomial<C>& f,
                                                                      std::size_t var) {
  if (f.is_zero()) throw std::invalid_argument("normalize: zero polynomial");
  if (var >= f.dimension()) throw std::out_of_range("normalize: variable index");
  std::int64_t low = f.terms().begin()->first[var];
  for (const auto& [e, c] : f.terms()) low = std::min(low, e[var]);
  BasicLaurentPolynomial<C> out(f.dimension());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector s = e;
    s[var] -= low;
    out.add_term(std::move(s), c);
  }
  return {std::move(out), low};
}

template <class C>
std::pair<BasicLaurentPolynomial<C>, std::int64_t> normalize_z0(const BasicLaurentPolynomial<C>& f) {
  return normalize_variable(f, 0);
}

}  // namespace polycurve
