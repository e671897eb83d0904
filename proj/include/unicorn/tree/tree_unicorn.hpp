#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "unicorn/core/error.hpp"
#include "unicorn/core/rational.hpp"
#include "unicorn/mgraph/mgraph.hpp"

namespace unicorn::tree {

/// A metric tree after smoothing away every degree-2 vertex. Vertex and edge
/// ids below refer to `graph`; codes are reported on `original`.
struct MetricTree {
  mgraph::MetricGraph original;
  mgraph::Smoothed smoothing;
  const mgraph::MetricGraph& graph() const { return smoothing.graph; }
  std::vector<std::size_t> junctions;
  std::vector<std::size_t> leaves;
  Rational shortest;
};

MetricTree metric_tree(const mgraph::MetricGraph& g);

struct FGWitness {
  std::vector<std::size_t> junction;
  std::vector<std::size_t> f;               // leaf per junction
  std::vector<std::vector<std::size_t>> g;  // one leaf per branch, f included
};

/// Searches for (f, g) satisfying the admissibility conditions at delta.
/// Junctions are visited by index and leaves tried by index, so the first
/// witness is canonical. A tree without junctions (one edge of length w)
/// admits delta exactly when delta divides w.
std::optional<FGWitness> check_delta(const MetricTree& t, const Rational& delta);

struct DeltaScan {
  std::vector<Rational> deltas;  // decreasing, each admissible
  std::vector<Rational> bases;   // distinct gcds over the witness shapes
  std::size_t shapes = 0;
};

/// Admissible deltas of the form base / k with k <= max_k, where base ranges
/// over the gcds of the path sums of every (f, g) shape.
DeltaScan enumerate_deltas(const MetricTree& t, std::size_t max_k, Budget& budget);

/// Marches points at spacing delta along the path from f(u) to every other
/// leaf of g(u). Throws kInternal if two points end up closer than delta.
mgraph::Code build_unique_code(const MetricTree& t, const Rational& delta, const FGWitness& w);

}  // namespace unicorn::tree
