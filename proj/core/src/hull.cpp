#include "polycurve/hull.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "polycurve/lattice.hpp"

namespace polycurve {

PointConfiguration::PointConfiguration(std::size_t dimension, IntegerMatrix points, std::vector<PointLabel> labels)
    : dimension_(dimension) {
  if (!labels.empty() && labels.size() != points.size()) {
    throw std::invalid_argument("PointConfiguration: label count differs from point count");
  }
  std::map<IntegerVector, std::size_t> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dimension) throw std::invalid_argument("PointConfiguration: point has wrong dimension");
    if (!seen.try_emplace(points[i], i).second) continue;
    points_.push_back(std::move(points[i]));
    if (!labels.empty()) labels_.push_back(labels[i]);
  }
}

namespace {

IntegerMatrix edge_directions(const PointConfiguration& cfg) {
  IntegerMatrix diffs;
  for (std::size_t i = 1; i < cfg.size(); ++i) {
    IntegerVector d(cfg.dimension());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = cfg[i][j] - cfg[0][j];
    diffs.push_back(std::move(d));
  }
  return diffs;
}

// Bit set over constraint indices; one per ray.
using Words = std::vector<std::uint64_t>;

inline void set_bit(Words& w, std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

inline bool is_subset(const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

inline std::size_t popcount(const Words& w) {
  std::size_t c = 0;
  for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

template <class Int>
struct Ray {
  std::vector<Int> coords;
  Words zeros;
};

template <class Int>
Int from_integer(const Integer& z) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return z;
  } else {
    return Int(to_int64(z));
  }
}

template <class Int>
void make_primitive(std::vector<Int>& y) {
  Int g = 0;
  for (const auto& x : y) g = gcd(g, x);
  if (sign(g) == 0 || g == Int(1)) return;
  for (auto& x : y) x /= g;
}

template <class Int>
Int inner(const IntegerVector& h, const std::vector<Int>& y) {
  Int s = 0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j] != 0) s += Int(h[j]) * y[j];
  }
  return s;
}

// Extreme rays of {y : <h_i, y> ≥ 0 for all i}, assuming the rows span the
// whole space. Constraints are inserted in `order`; zero sets record which
// constraints each ray makes tight.
template <class Int>
std::vector<Ray<Int>> double_description(const IntegerMatrix& rows, const std::vector<std::size_t>& order) {
  const std::size_t dim = rows.front().size();
  const std::size_t words = (rows.size() + 63) / 64;

  IntegerMatrix ordered;
  for (auto i : order) ordered.push_back(rows[i]);
  std::vector<std::size_t> basis;
  for (auto i : independent_rows(ordered)) basis.push_back(order[i]);
  if (basis.size() != dim) throw std::logic_error("double_description: constraints do not have full rank");

  // Initial simplicial cone: columns of the inverse of the basis matrix.
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(2 * dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) a[i][j] = static_cast<long>(rows[basis[i]][j]);
    a[i][dim + i] = 1;
  }
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t p = k;
    while (a[p][k] == 0) ++p;
    std::swap(a[k], a[p]);
    Rational lead = a[k][k];
    for (auto& x : a[k]) x /= lead;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k];
      for (std::size_t j = 0; j < 2 * dim; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Ray<Int>> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Integer den = 1;
    for (std::size_t i = 0; i < dim; ++i) den = lcm(den, a[i][dim + j].get_den());
    Ray<Int> r{std::vector<Int>(dim), Words(words, 0)};
    for (std::size_t i = 0; i < dim; ++i) {
      Integer v = a[i][dim + j].get_num() * (den / a[i][dim + j].get_den());
      r.coords[i] = from_integer<Int>(v);
    }
    make_primitive(r.coords);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i != j) set_bit(r.zeros, basis[i]);
    }
    rays.push_back(std::move(r));
  }

  std::vector<bool> in_basis(rows.size(), false);
  for (auto b : basis) in_basis[b] = true;

  std::vector<Int> values;
  for (auto row : order) {
    if (in_basis[row]) continue;
    const IntegerVector& h = rows[row];
    values.resize(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      values[i] = inner(h, rays[i].coords);
      int s = sign(values[i]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
    }
    if (neg.empty()) {
      for (auto i : zero) set_bit(rays[i].zeros, row);
      continue;
    }

    std::vector<Ray<Int>> next;
    next.reserve(pos.size() + zero.size());
    Words common(words);
    for (auto p : pos) {
      for (auto q : neg) {
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zeros[w] & rays[q].zeros[w];
        if (popcount(common) + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t != p && t != q && is_subset(common, rays[t].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray<Int> r{std::vector<Int>(dim), common};
        for (std::size_t j = 0; j < dim; ++j) {
          r.coords[j] = values[p] * rays[q].coords[j] - values[q] * rays[p].coords[j];
        }
        make_primitive(r.coords);
        set_bit(r.zeros, row);
        next.push_back(std::move(r));
      }
    }
    for (auto i : pos) next.push_back(std::move(rays[i]));
    for (auto i : zero) {
      set_bit(rays[i].zeros, row);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }
  return rays;
}

struct RawFacet {
  std::vector<Integer> normal;  // in projected coordinates
  Integer offset;
  Words zeros;
};

template <class Int>
std::vector<RawFacet> run(const IntegerMatrix& rows, const std::vector<std::size_t>& order) {
  std::vector<RawFacet> out;
  for (auto& r : double_description<Int>(rows, order)) {
    RawFacet f;
    const std::size_t k = r.coords.size() - 1;
    for (std::size_t j = 0; j < k; ++j) f.normal.push_back(to_integer(r.coords[j]));
    f.offset = to_integer(r.coords[k]);
    f.zeros = std::move(r.zeros);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::size_t affine_dimension(const PointConfiguration& cfg) {
  if (cfg.size() <= 1) return 0;
  return rank(edge_directions(cfg));
}

std::vector<Facet> facet_enumeration(const PointConfiguration& cfg) {
  const std::size_t d = cfg.dimension();
  if (cfg.size() <= 1) return {};

  // Integer basis of the direction space; points are expressed through it
  // so the double description always works on a full-dimensional problem.
  IntegerMatrix diffs = edge_directions(cfg);
  std::vector<std::size_t> independent = independent_rows(diffs);
  const std::size_t k = independent.size();
  if (k == 0) return {};
  IntegerMatrix basis;
  if (k < d) {
    for (auto i : independent) basis.push_back(diffs[i]);
  }

  IntegerMatrix rows;
  rows.reserve(cfg.size());
  for (const auto& p : cfg.points()) {
    IntegerVector h;
    if (k < d) {
      for (const auto& b : basis) {
        CheckedInt s = 0;
        for (std::size_t j = 0; j < d; ++j) s += CheckedInt(b[j]) * CheckedInt(p[j]);
        h.push_back(s.value());
      }
    } else {
      h = p;
    }
    h.push_back(-1);
    rows.push_back(std::move(h));
  }

  std::vector<std::size_t> order(cfg.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cfg[a] < cfg[b]; });

  std::vector<RawFacet> raw;
  try {
    raw = run<CheckedInt>(rows, order);
  } catch (const ArithmeticOverflow&) {
    raw = run<Integer>(rows, order);
  }

  std::vector<Facet> facets;
  facets.reserve(raw.size());
  for (auto& rf : raw) {
    std::vector<Integer> normal(d);
    if (k < d) {
      for (std::size_t j = 0; j < d; ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < k; ++i) s += rf.normal[i] * basis[i][j];
        normal[j] = s;
      }
    } else {
      normal = rf.normal;
    }
    Integer g = 0;
    for (const auto& x : normal) g = gcd(g, x);
    Facet f;
    for (const auto& x : normal) f.normal.push_back(to_int64(Integer(x / g)));
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      if (rf.zeros[i >> 6] >> (i & 63) & 1) f.incidence.push_back(i);
    }
    f.offset = dot(f.normal, cfg[f.incidence.front()]);
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  return facets;
}

std::string format_facets(const std::vector<Facet>& facets) {
  std::ostringstream out;
  for (const auto& f : facets) {
    for (std::size_t j = 0; j < f.normal.size(); ++j) out << (j ? " " : "") << f.normal[j];
    out << " | " << f.offset << " |";
    for (auto i : f.incidence) out << " " << i;
    out << "\n";
  }
  return out.str();
}

}  // namespace polycurve
