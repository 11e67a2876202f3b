#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "polycurve/hull.hpp"
#include "polycurve/polynomial.hpp"

namespace polycurve {

using Support = std::vector<ExponentVector>;

/// Terms of f minimizing <a, v> over its support.
template <class C>
BasicLaurentPolynomial<C> initial_form(const BasicLaurentPolynomial<C>& f, std::span<const std::int64_t> v) {
  if (f.is_zero()) throw std::invalid_argument("initial_form: zero polynomial");
  if (v.size() != f.dimension()) throw std::invalid_argument("initial_form: direction has wrong length");
  std::int64_t low = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : f.terms()) low = std::min(low, dot(e, v));
  BasicLaurentPolynomial<C> out(f.dimension());
  for (const auto& [e, c] : f.terms()) {
    if (dot(e, v) == low) out.add_term(e, c);
  }
  return out;
}

template <class C>
BasicPolySystem<C> initial_form(const BasicPolySystem<C>& sys, std::span<const std::int64_t> v) {
  std::vector<BasicLaurentPolynomial<C>> polys;
  for (const auto& f : sys) polys.push_back(initial_form(f, v));
  return BasicPolySystem<C>(sys.variables(), std::move(polys));
}

/// Points of A minimizing <a, v>.
Support initial_support(const Support& a, std::span<const std::int64_t> v);

/// Cayley embedding: support k is lifted by appending e_{k-1} in Z^{N-1}
/// (e_0 being the zero vector). Labels are (k, position in support k).
PointConfiguration cayley_embedding(const std::vector<Support>& supports);

struct Pretropism {
  IntegerVector v;
  std::vector<std::size_t> initial_counts;
  friend bool operator==(const Pretropism&, const Pretropism&) = default;
};

/// True when every initial support has at least two points.
bool is_pretropism(const std::vector<Support>& supports, std::span<const std::int64_t> v);

/// Facet normals of the Cayley polytope spanned by at least two points of
/// every support, restricted to the first n coordinates and made primitive.
/// Sorted lexicographically, without duplicates.
std::vector<Pretropism> pretropisms(const std::vector<Support>& supports);

template <class C>
std::vector<Pretropism> pretropisms(const BasicPolySystem<C>& sys) {
  return pretropisms(supports(sys));
}

/// Cone of the tropical prevariety spanned by some of the given rays.
struct PretropismCone {
  std::vector<std::size_t> rays;  // indices into the ray list, ascending
  std::size_t dim = 0;
  bool maximal = false;
  friend bool operator==(const PretropismCone&, const PretropismCone&) = default;
};

enum class ConeSelection { maximal, all };

/// Maximal cones spanned by the rays (or every cone, faces included, with
/// ConeSelection::all), sorted by (dim, rays).
///
/// A set of rays spans a cone when the intersections of their initial
/// supports keep at least two points of every support; that intersection
/// is then the initial support of every interior direction. Each cone is
/// closed under adding rays with the same initial data. Every reported cone
/// additionally passes a check on 3 random interior integer points
/// (coefficients in [1, 5]) drawn from `seed`.
std::vector<PretropismCone> cone_structure(const std::vector<Support>& supports, const std::vector<Pretropism>& rays,
                                           std::uint64_t seed = 0, ConeSelection selection = ConeSelection::maximal);

template <class C>
std::vector<PretropismCone> cone_structure(const BasicPolySystem<C>& sys, const std::vector<Pretropism>& rays,
                                           std::uint64_t seed = 0, ConeSelection selection = ConeSelection::maximal) {
  return cone_structure(supports(sys), rays, seed, selection);
}

}  // namespace polycurve
