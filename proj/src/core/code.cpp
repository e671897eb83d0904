#include "unicorn/core/code.hpp"

namespace unicorn {

const char* space_tag_name(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::kInterval: return "interval";
    case SpaceTag::kCircle: return "circle";
    case SpaceTag::kEuclidean: return "euclidean";
    case SpaceTag::kSphere: return "sphere";
    case SpaceTag::kOrthotope: return "orthotope";
    case SpaceTag::kTorus: return "torus";
    case SpaceTag::kMetricGraph: return "metric-graph";
    case SpaceTag::kUltrametric: return "ultrametric";
    case SpaceTag::kSequence: return "sequence";
  }
  return "unknown";
}

Rational chebyshev_distance(const RVec& a, const RVec& b) {
  Rational best;
  for (std::size_t i = 0; i < a.size(); ++i) best = max(best, (a[i] - b[i]).abs());
  return best;
}

Rational squared_distance(const RVec& a, const RVec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

PiPoly sphere_geodesic(const RVec& a, const RVec& b) { return exact_arccos(dot(a, b)); }

}  // namespace unicorn
