#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polycurve/exact.hpp"

namespace polycurve {

/// Where a point came from, e.g. (support k, term j) in a Cayley embedding.
struct PointLabel {
  std::size_t support = 0;
  std::size_t index = 0;
  friend bool operator==(const PointLabel&, const PointLabel&) = default;
};

/// Finite set of integer points in Z^d. Duplicates are removed on
/// construction (the first occurrence and its label are kept).
class PointConfiguration {
 public:
  PointConfiguration() = default;
  PointConfiguration(std::size_t dimension, IntegerMatrix points, std::vector<PointLabel> labels = {});

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  const IntegerMatrix& points() const { return points_; }
  const IntegerVector& operator[](std::size_t i) const { return points_[i]; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<PointLabel>& labels() const { return labels_; }

 private:
  std::size_t dimension_ = 0;
  IntegerMatrix points_;
  std::vector<PointLabel> labels_;
};

/// Facet {a : <a, normal> = offset} of conv(points) with inner normal:
/// <a, normal> ≥ offset for every point, with equality exactly on `incidence`.
/// For lower-dimensional configurations the normal is the unique primitive
/// representative lying in the linear span of the configuration's edge
/// directions.
struct Facet {
  IntegerVector normal;
  std::int64_t offset = 0;
  std::vector<std::size_t> incidence;
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Dimension of the affine hull (0 for a single point).
std::size_t affine_dimension(const PointConfiguration& cfg);

/// Complete irredundant facet list of conv(cfg) inside its affine hull,
/// sorted lexicographically by normal. Runs the double description method
/// exactly, on int64 words while they suffice and on GMP integers after an
/// overflow.
std::vector<Facet> facet_enumeration(const PointConfiguration& cfg);

/// One facet per line: "normal… | offset | incidence…".
std::string format_facets(const std::vector<Facet>& facets);

}  // namespace polycurve
