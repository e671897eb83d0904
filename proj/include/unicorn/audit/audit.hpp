#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unicorn/core/error.hpp"
#include "unicorn/core/linalg.hpp"
#include "unicorn/mgraph/mgraph.hpp"
#include "unicorn/torus/torus.hpp"

namespace unicorn::audit {

enum class SpaceKind { kInterval, kCircle, kPlane, kSphere, kTorus, kOrthotope, kMetricTree };

/// Accepts interval, circle, plane (or euclidean-plane), sphere, torus,
/// orthotope and metric-tree.
SpaceKind parse_space_kind(const std::string& s);
std::string space_kind_name(SpaceKind k);

/// An ambient space together with the data that fixes its isometry group.
///   interval: [0, length]; circle: R / length Z; plane: R^2; sphere: unit
///   vectors in R^3; torus: R^m / L for L = A1 or A2 in the lattice module's
///   coordinates; orthotope: the box [0, box] with the sup norm; metric-tree:
///   a metric tree (any metric graph whose smoothing is not a cycle).
struct Space {
  SpaceKind kind = SpaceKind::kInterval;
  Rational length = Rational(1);
  RVec box;
  std::optional<torus::LatticeSpec> lattice;
  std::optional<mgraph::MetricGraph> graph;

  static Space interval(const Rational& length);
  static Space circle(const Rational& length);
  static Space plane();
  static Space sphere();
  static Space torus_of(torus::LatticeName name);
  static Space orthotope(const RVec& u);
  static Space metric_tree(const mgraph::MetricGraph& g);

  std::size_t dim() const;
  void validate_point(const RVec& x) const;
};

/// x -> a x + s on coordinates, read modulo the period for circles and tori.
struct AffineIsometry {
  RMatrix a;
  RVec s;

  RVec apply(const Space& space, const RVec& x) const;
  bool is_identity(const Space& space) const;
  std::string describe() const;
};

/// Exact metric value that orders pairs like the distance does: the distance
/// itself on intervals, circles and boxes; the squared distance in the plane
/// and on tori; the squared chord length on the sphere.
Rational metric_value(const Space& space, const RVec& x, const RVec& y);

/// Canonical form used for set equality (reduction modulo the period).
RVec point_key(const Space& space, const RVec& x);

struct Stabilizer {
  std::vector<AffineIsometry> elements;  // nontrivial, pairwise distinct maps
  bool infinite = false;                 // a continuous family fixes the code
  std::size_t order() const { return infinite ? 0 : elements.size() + 1; }
};

/// All nontrivial isometries with gC = C. Continuous families are reduced to
/// candidates that send a fixed code point (or a fixed pair) into C.
Stabilizer stabilizer(const Space& space, const std::vector<RVec>& code, Budget& budget);

struct Overlap {
  std::size_t overlap = 0;
  std::optional<AffineIsometry> best;
  bool restricted = false;  // continuous family: candidates fix at least two points' images
};

/// max over nontrivial g of |gC ∩ C|.
Overlap partial_symmetry_max(const Space& space, const std::vector<RVec>& code, Budget& budget);

/// Finite isometry groups: the whole group (interval, box, the linear parts
/// for tori).
std::vector<AffineIsometry> finite_group(const Space& space, Budget& budget);

struct AuditReport {
  std::string space;
  std::size_t code_size = 0;
  std::size_t stabilizer_order = 0;  // 0 when a continuous family fixes the code
  std::vector<std::string> generators;
  std::size_t max_overlap = 0;
  long strength = 0;
  bool conjecture1_holds = false;  // some nontrivial g fixes the code
  long conjecture2_margin = 0;     // max_overlap - strength; positive means |gC ∩ C| > t
  bool overlap_restricted = false;
};

/// Combines stabilizer, partial_symmetry_max and the strength of the space.
AuditReport audit_code(const Space& space, const std::vector<RVec>& code, Budget& budget);
AuditReport audit_code(const Space& space, const mgraph::Code& code, Budget& budget);

struct LowerCase {
  std::vector<RVec> set;
  mgraph::Code graph_set;
  std::string symmetry;
  bool verified = false;
};

struct StrengthWitness {
  SpaceKind kind = SpaceKind::kInterval;
  long t = 0;
  std::vector<LowerCase> lower;  // sampled sets of size 1..t with a constructed symmetry
  std::vector<RVec> upper;       // a size t+1 set fixed only by the identity
  mgraph::Code graph_upper;
  bool lower_verified = false;
  bool upper_rigid = false;
};

/// The symmetry strength with a two-sided witness. Metric trees compute t as
/// one less than the fewest edges whose pointwise stabilizers intersect
/// trivially.
StrengthWitness symmetry_strength_witness(const Space& space, std::size_t samples, std::uint64_t seed,
                                          Budget& budget);

/// Known strength without witnesses.
long symmetry_strength(const Space& space, Budget& budget);

}  // namespace unicorn::audit
