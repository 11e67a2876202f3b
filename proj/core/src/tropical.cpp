#include "polycurve/tropical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "polycurve/lattice.hpp"

namespace polycurve {

Support initial_support(const Support& a, std::span<const std::int64_t> v) {
  if (a.empty()) return {};
  std::int64_t low = std::numeric_limits<std::int64_t>::max();
  for (const auto& p : a) low = std::min(low, dot(p, v));
  Support out;
  for (const auto& p : a) {
    if (dot(p, v) == low) out.push_back(p);
  }
  return out;
}

PointConfiguration cayley_embedding(const std::vector<Support>& supports) {
  if (supports.empty()) return {};
  const std::size_t big_n = supports.size();
  std::size_t n = 0;
  for (const auto& s : supports) {
    if (!s.empty()) n = s.front().size();
  }
  IntegerMatrix points;
  std::vector<PointLabel> labels;
  for (std::size_t k = 0; k < big_n; ++k) {
    for (std::size_t j = 0; j < supports[k].size(); ++j) {
      const auto& a = supports[k][j];
      if (a.size() != n) throw std::invalid_argument("cayley_embedding: supports differ in dimension");
      IntegerVector p(a);
      p.resize(n + big_n - 1, 0);
      if (k > 0) p[n + k - 1] = 1;
      points.push_back(std::move(p));
      labels.push_back({k, j});
    }
  }
  return PointConfiguration(n + big_n - 1, std::move(points), std::move(labels));
}

namespace {

std::vector<std::size_t> initial_counts(const std::vector<Support>& supports, std::span<const std::int64_t> v) {
  std::vector<std::size_t> counts;
  for (const auto& s : supports) counts.push_back(initial_support(s, v).size());
  return counts;
}

bool all_at_least_two(const std::vector<std::size_t>& counts) {
  return std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c >= 2; });
}

}  // namespace

bool is_pretropism(const std::vector<Support>& supports, std::span<const std::int64_t> v) {
  return all_at_least_two(initial_counts(supports, v));
}

std::vector<Pretropism> pretropisms(const std::vector<Support>& supports) {
  if (supports.empty()) return {};
  const std::size_t big_n = supports.size();
  PointConfiguration cayley = cayley_embedding(supports);
  if (cayley.size() == 0) return {};
  const std::size_t n = cayley.dimension() + 1 - big_n;

  std::set<IntegerVector> found;
  for (const auto& f : facet_enumeration(cayley)) {
    std::vector<std::size_t> per_support(big_n, 0);
    for (auto i : f.incidence) ++per_support[cayley.labels()[i].support];
    if (!all_at_least_two(per_support)) continue;
    IntegerVector v(f.normal.begin(), f.normal.begin() + static_cast<std::ptrdiff_t>(n));
    if (content(v) == 0) continue;
    found.insert(primitive(std::move(v)));
  }

  std::vector<Pretropism> out;
  for (const auto& v : found) {
    auto counts = initial_counts(supports, v);
    if (!all_at_least_two(counts)) continue;
    out.push_back({v, std::move(counts)});
  }
  return out;
}

namespace {

using Face = std::vector<bool>;

struct ConeSearch {
  const std::vector<Support>& supports;
  std::vector<std::size_t> offsets;
  std::vector<Face> faces;

  ConeSearch(const std::vector<Support>& s, const std::vector<Pretropism>& rays) : supports(s) {
    std::size_t total = 0;
    for (const auto& a : supports) {
      offsets.push_back(total);
      total += a.size();
    }
    for (const auto& r : rays) {
      Face face(total, false);
      for (std::size_t k = 0; k < supports.size(); ++k) {
        if (supports[k].empty()) continue;
        std::int64_t low = std::numeric_limits<std::int64_t>::max();
        for (const auto& p : supports[k]) low = std::min(low, dot(p, r.v));
        for (std::size_t j = 0; j < supports[k].size(); ++j) {
          if (dot(supports[k][j], r.v) == low) face[offsets[k] + j] = true;
        }
      }
      faces.push_back(std::move(face));
    }
  }

  bool valid(const Face& face) const {
    for (std::size_t k = 0; k < supports.size(); ++k) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < supports[k].size(); ++j) c += face[offsets[k] + j];
      if (c < 2) return false;
    }
    return true;
  }

  static Face meet(const Face& a, const Face& b) {
    Face out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
    return out;
  }

  static bool contains(const Face& big, const Face& small) {
    for (std::size_t i = 0; i < big.size(); ++i) {
      if (small[i] && !big[i]) return false;
    }
    return true;
  }

  std::vector<std::size_t> closure(const Face& face) const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < faces.size(); ++r) {
      if (contains(faces[r], face)) out.push_back(r);
    }
    return out;
  }
};

}  // namespace

std::vector<PretropismCone> cone_structure(const std::vector<Support>& supports, const std::vector<Pretropism>& rays,
                                           std::uint64_t seed, ConeSelection selection) {
  if (rays.empty()) return {};
  ConeSearch search(supports, rays);

  std::map<std::vector<std::size_t>, Face> cones;
  std::set<std::vector<std::size_t>> maximal;
  std::deque<std::vector<std::size_t>> queue;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    const Face& face = search.faces[r];
    auto members = search.closure(face);
    if (cones.emplace(members, face).second) queue.push_back(members);
  }
  while (!queue.empty()) {
    auto members = std::move(queue.front());
    queue.pop_front();
    const Face face = cones.at(members);
    bool extended = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (std::binary_search(members.begin(), members.end(), r)) continue;
      Face joined = ConeSearch::meet(face, search.faces[r]);
      if (!search.valid(joined)) continue;
      extended = true;
      auto bigger = search.closure(joined);
      if (cones.emplace(bigger, joined).second) queue.push_back(std::move(bigger));
    }
    if (!extended) maximal.insert(members);
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coefficient(1, 5);
  std::vector<PretropismCone> out;
  for (const auto& [members, face] : cones) {
    const bool is_maximal = maximal.count(members) > 0;
    if (selection == ConeSelection::maximal && !is_maximal) continue;
    IntegerMatrix vectors;
    for (auto r : members) vectors.push_back(rays[r].v);
    bool sampled_ok = true;
    for (int trial = 0; trial < 3 && sampled_ok; ++trial) {
      IntegerVector w(vectors.front().size(), 0);
      for (const auto& v : vectors) {
        std::int64_t c = coefficient(rng);
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += c * v[j];
      }
      sampled_ok = is_pretropism(supports, w);
    }
    if (!sampled_ok) continue;
    out.push_back({members, rank(vectors), is_maximal});
  }
  std::sort(out.begin(), out.end(), [](const PretropismCone& a, const PretropismCone& b) {
    return std::tie(a.dim, a.rays) < std::tie(b.dim, b.rays);
  });
  return out;
}

}  // namespace polycurve
