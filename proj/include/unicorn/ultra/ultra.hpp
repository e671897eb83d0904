#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "unicorn/core/error.hpp"
#include "unicorn/core/rational.hpp"

namespace unicorn::ultra {

/// Finite ultrametric space as a rooted tree of balls. Internal nodes carry
/// diameters that strictly decrease towards the leaves; leaves are the points
/// and carry diameter 0. The distance of two leaves is the diameter of their
/// lowest common ancestor.
class BallTree {
 public:
  struct Node {
    Rational diam;
    std::size_t parent;
    std::vector<std::size_t> children;
    std::string label;
  };
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  explicit BallTree(const Rational& root_diam);
  std::size_t add_ball(std::size_t parent, const Rational& diam, std::string label = {});
  std::size_t add_point(std::size_t parent, std::string label = {});

  std::size_t root() const { return 0; }
  const Node& node(std::size_t id) const { return nodes_.at(id); }
  std::size_t size() const { return nodes_.size(); }
  bool is_point(std::size_t id) const { return nodes_.at(id).children.empty() && nodes_.at(id).diam.is_zero(); }
  /// Points in depth-first order (children in insertion order).
  std::vector<std::size_t> points() const;
  /// Checks positive, strictly decreasing diameters and that every ball has a child.
  void validate() const;

  Rational distance(std::size_t x, std::size_t y) const;
  /// Maximal nodes with diameter < r, in depth-first order.
  std::vector<std::size_t> partition(const Rational& r) const;
  /// Points below a node, in depth-first order.
  std::vector<std::size_t> points_under(std::size_t id) const;
  /// The partition part (node) containing a point.
  std::size_t part_of(std::size_t point, const Rational& r) const;

 private:
  std::vector<Node> nodes_;
};

/// Truncation of the 2-adic integers (equivalently {0,1}^depth) with
/// d(x, y) = 2^-k, k the first differing position (1-based). Point labels are
/// the bit strings.
BallTree dyadic_tree(std::size_t depth);

/// Random ball tree with at most max_points points, for property checks.
BallTree random_ball_tree(std::uint64_t seed, std::size_t max_points);

struct UltraCode {
  Rational delta;
  std::vector<std::size_t> points;
  std::vector<std::size_t> parts;  // the balls represented
};

/// delta = max{r : |partition(r)| >= n} over the diameters; one least point
/// from each of the first n parts.
UltraCode optimal_code(const BallTree& t, std::size_t n);

/// Exhaustive max-min distance over all n-subsets of points.
Rational brute_force_delta(const BallTree& t, std::size_t n, Budget& budget);

/// Both codes must represent the same parts of the partition at their common
/// minimum distance. Returns whether the part-to-part distances agree.
bool representative_exchange_isometry(const BallTree& t, const std::vector<std::size_t>& a,
                                      const std::vector<std::size_t>& b);

}  // namespace unicorn::ultra
