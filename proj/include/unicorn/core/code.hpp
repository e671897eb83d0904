#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "unicorn/core/error.hpp"
#include "unicorn/core/linalg.hpp"
#include "unicorn/core/pipoly.hpp"

namespace unicorn {

/// Tag naming the ambient space a point belongs to.
enum class SpaceTag {
  kInterval,
  kCircle,
  kEuclidean,
  kSphere,
  kOrthotope,
  kTorus,
  kMetricGraph,
  kUltrametric,
  kSequence,
};

const char* space_tag_name(SpaceTag tag);

/// Minimum of dist(x, y) over all unordered pairs of distinct positions.
/// The distance type only needs a strict weak ordering.
template <class Point, class Dist>
auto min_distance(const std::vector<Point>& points, Dist&& dist)
    -> decltype(dist(points[0], points[0])) {
  if (points.size() < 2) raise(ErrorKind::kDomain, "minimum distance needs at least two points");
  auto best = dist(points[0], points[1]);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      auto d = dist(points[i], points[j]);
      if (d < best) best = std::move(d);
    }
  return best;
}

/// Chebyshev (infinity-norm) distance between rational vectors.
Rational chebyshev_distance(const RVec& a, const RVec& b);

/// Squared Euclidean distance between rational vectors.
Rational squared_distance(const RVec& a, const RVec& b);

/// Geodesic distance on the unit sphere for unit vectors whose inner product
/// is one of the values with an exact arccos (see exact_arccos).
PiPoly sphere_geodesic(const RVec& a, const RVec& b);

}  // namespace unicorn
