#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polycurve/exact.hpp"
#include "polycurve/polynomial.hpp"

namespace polycurve {

/// Coordinate permutation acting by (p·x)_i = x_{images[i]}. The cyclic
/// shift has images (1, 2, …, n−1, 0) and sends (x0,…,x3) to (x1,x2,x3,x0).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection of 0..n−1.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  static Permutation shift(std::size_t n);
  static Permutation reversal(std::size_t n);

  std::size_t size() const { return images_.size(); }
  const std::vector<std::size_t>& images() const { return images_; }

  /// (p * q)·x = p·(q·x).
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  template <class T>
  std::vector<T> apply(std::span<const T> x) const {
    if (x.size() != size()) throw std::invalid_argument("Permutation::apply: length mismatch");
    std::vector<T> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = x[images_[i]];
    return out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Finite group of coordinate permutations, optionally with the inversion
/// x → x⁻¹ (negation of exponent vectors) as an extra commuting generator.
class SymmetryGroup {
 public:
  SymmetryGroup(std::size_t n, std::vector<Permutation> generators, bool with_inversion = false);

  std::size_t degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool has_inversion() const { return inversion_; }

  /// Permutation part of the closure; the inversion doubles it when enabled.
  const std::vector<Permutation>& permutations() const { return elements_; }
  std::size_t order() const { return elements_.size() * (inversion_ ? 2 : 1); }

  /// All images of v (with repetitions), one per group element.
  std::vector<IntegerVector> images(const IntegerVector& v) const;
  std::vector<IntegerVector> orbit(const IntegerVector& v) const;
  IntegerVector representative(const IntegerVector& v) const;

 private:
  std::size_t n_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  bool inversion_;
};

/// Shift and reversal: order 2n for n > 2.
SymmetryGroup cyclic_dihedral_group(std::size_t n, bool with_inversion = false);

struct Orbit {
  IntegerVector representative;
  std::size_t orbit_size = 0;
};

/// One entry per orbit met in `items`, sorted by representative (the
/// lexicographic minimum of the orbit). orbit_size counts the items in that
/// orbit; if items are not closed under the group a warning is written to
/// stderr.
std::vector<Orbit> orbit_representatives(const std::vector<IntegerVector>& items, const SymmetryGroup& g);

ComplexVector act_on_solution(const Permutation& p, std::span<const Complex> sol);

}  // namespace polycurve
