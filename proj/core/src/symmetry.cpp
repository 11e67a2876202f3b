#include "polycurve/symmetry.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <set>

namespace polycurve {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || hit[i]) throw std::invalid_argument("Permutation: images are not a bijection");
    hit[i] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> im(n);
  std::iota(im.begin(), im.end(), std::size_t{0});
  return Permutation(std::move(im));
}

Permutation Permutation::shift(std::size_t n) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return Permutation(std::move(im));
}

Permutation Permutation::reversal(std::size_t n) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = n - 1 - i;
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("Permutation product: size mismatch");
  // (p·(q·x))_i = (q·x)_{p[i]} = x_{q[p[i]]}
  std::vector<std::size_t> im(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) im[i] = q.images_[p.images_[i]];
  return Permutation(std::move(im));
}

SymmetryGroup::SymmetryGroup(std::size_t n, std::vector<Permutation> generators, bool with_inversion)
    : n_(n), generators_(std::move(generators)), inversion_(with_inversion) {
  for (const auto& g : generators_) {
    if (g.size() != n_) throw std::invalid_argument("SymmetryGroup: generator has wrong degree");
  }
  std::set<Permutation> seen{Permutation::identity(n_)};
  std::vector<Permutation> frontier{Permutation::identity(n_)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators_) {
        Permutation h = g * e;
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  elements_.assign(seen.begin(), seen.end());
}

std::vector<IntegerVector> SymmetryGroup::images(const IntegerVector& v) const {
  std::vector<IntegerVector> out;
  out.reserve(order());
  for (const auto& p : elements_) {
    auto w = p.apply<std::int64_t>(v);
    if (inversion_) {
      IntegerVector neg(w.size());
      std::transform(w.begin(), w.end(), neg.begin(), [](std::int64_t x) { return -x; });
      out.push_back(std::move(neg));
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<IntegerVector> SymmetryGroup::orbit(const IntegerVector& v) const {
  auto all = images(v);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

IntegerVector SymmetryGroup::representative(const IntegerVector& v) const {
  auto all = images(v);
  return *std::min_element(all.begin(), all.end());
}

SymmetryGroup cyclic_dihedral_group(std::size_t n, bool with_inversion) {
  return SymmetryGroup(n, {Permutation::shift(n), Permutation::reversal(n)}, with_inversion);
}

std::vector<Orbit> orbit_representatives(const std::vector<IntegerVector>& items, const SymmetryGroup& g) {
  std::map<IntegerVector, std::size_t> counts;
  std::set<IntegerVector> present(items.begin(), items.end());
  bool closed = true;
  for (const auto& v : items) {
    ++counts[g.representative(v)];
    if (closed) {
      for (const auto& w : g.orbit(v)) {
        if (!present.count(w)) {
          closed = false;
          break;
        }
      }
    }
  }
  if (!closed) std::cerr << "warning: orbit_representatives: items are not closed under the group\n";
  std::vector<Orbit> out;
  for (auto& [rep, size] : counts) out.push_back({rep, size});
  return out;
}

ComplexVector act_on_solution(const Permutation& p, std::span<const Complex> sol) { return p.apply<Complex>(sol); }

}  // namespace polycurve
