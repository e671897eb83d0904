#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unicorn/core/error.hpp"
#include "unicorn/core/linalg.hpp"
#include "unicorn/mgraph/lp.hpp"

namespace unicorn::mgraph {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational w;
};

/// Finite connected multigraph with positive rational edge lengths. Loops
/// and parallel edges are allowed; a loop is parameterized from u around to u.
class MetricGraph {
 public:
  MetricGraph() = default;
  explicit MetricGraph(std::size_t vertices) : n_(vertices) {}

  std::size_t add_edge(std::size_t u, std::size_t v, const Rational& w);
  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edge-ends at v; a loop counts twice.
  std::size_t degree(std::size_t v) const;
  bool connected() const;
  bool is_tree() const;
  bool unit_weights() const;
  Rational total_length() const;
  Rational min_weight() const;
  /// Raises a validation error unless the graph is nonempty and connected.
  void validate() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// A point on edge `edge` at distance `offset` from its first endpoint.
struct GraphPoint {
  std::size_t edge = 0;
  Rational offset;
};

/// Canonical address: a vertex, or an interior point of an edge.
struct Address {
  bool vertex = false;
  std::size_t id = 0;
  Rational offset;
  auto operator<=>(const Address&) const = default;
  bool operator==(const Address&) const = default;
};

Address address(const MetricGraph& g, const GraphPoint& p);
GraphPoint vertex_point(const MetricGraph& g, std::size_t v);
void validate_point(const MetricGraph& g, const GraphPoint& p);

/// All-pairs vertex distances, then point distances through edge endpoints.
class Geodesics {
 public:
  explicit Geodesics(const MetricGraph& g);
  Rational vertices(std::size_t a, std::size_t b) const { return d_[a][b]; }
  Rational operator()(const GraphPoint& p, const GraphPoint& q) const;

 private:
  const MetricGraph* g_;
  std::vector<RVec> d_;
};

Rational geodesic_distance(const MetricGraph& g, const GraphPoint& p, const GraphPoint& q);

using Code = std::vector<GraphPoint>;

Rational code_min_distance(const MetricGraph& g, const Code& code);
/// Sorted canonical addresses; raises if two points coincide.
std::vector<Address> code_addresses(const MetricGraph& g, const Code& code);

/// Position of an original edge inside a target edge: pos = start + x (or
/// start - x when reversed).
struct EdgeImage {
  std::size_t edge = 0;
  Rational start;
  bool reversed = false;
};

struct Smoothed {
  MetricGraph graph;
  bool cycle = false;               // the whole graph is one cycle (a single loop here)
  std::vector<EdgeImage> image;     // per original edge
  std::vector<std::size_t> vertex;  // original vertex -> smoothed vertex or npos
  GraphPoint map(const GraphPoint& p) const;
};

/// Merges edges at degree-2 vertices. A cycle ends as a single loop.
Smoothed smooth(const MetricGraph& g);

/// Weight-preserving automorphism together with loop orientations.
struct Isometry {
  std::vector<std::size_t> vertex;
  std::vector<EdgeImage> edge;  // start is 0 or w
  bool identity() const;
};

GraphPoint apply(const MetricGraph& g, const Isometry& iso, const GraphPoint& p);

/// Every weight-preserving automorphism of the multigraph, with every loop
/// flip. Charges one budget unit per search node.
std::vector<Isometry> automorphisms(const MetricGraph& g, Budget& budget);

struct IsometryGroup {
  bool cycle = false;          // continuous O(2); elements left empty
  Rational cycle_length;
  Smoothed smoothed;
  std::vector<Isometry> elements;    // acting on smoothed.graph
  std::vector<Isometry> generators;  // a generating subset
};

IsometryGroup isometry_group(const MetricGraph& g, Budget& budget);

/// Canonical form of a code up to isometry (smoothed coordinates). For a
/// cycle, one point is rotated to offset 0.
std::vector<Address> canonical_form(const IsometryGroup& grp, const Code& code);

struct SymmetryAudit {
  bool cycle = false;               // continuous group: candidates are the
                                    // rotations and reflections matching two points
  std::size_t group_order = 0;      // 0 for a cycle
  std::vector<std::size_t> fixing;  // nontrivial elements with gC = C (finite case)
  std::size_t fixing_count = 0;
  std::size_t max_overlap = 0;      // max |gC ∩ C| over nontrivial g
};

SymmetryAudit audit_symmetry(const MetricGraph& g, const IsometryGroup& grp, const Code& code);

struct CanonicalCodes {
  Code ck;
  Code ck_prime;
  Rational ck_delta;
  Rational ck_prime_delta;
};

/// C_k (k points per edge at odd multiples of 1/(2k)) and C'_k (vertices plus
/// k points per edge at multiples of 1/(k+1)) on a unit-distance graph.
CanonicalCodes canonical_codes(const MetricGraph& g, std::size_t k);

enum class Family { kCk, kCkPrime };

/// Uniqueness criterion: C'_k iff G is a tree; C_k iff min degree >= 2.
bool uniqueness_verdict(const MetricGraph& g, Family which, std::size_t k);

// ---- Linear programming bound -------------------------------------------

using Assignment = std::vector<std::size_t>;  // t_e per edge of the work graph

/// The original graph with every loop split at its midpoint.
struct WorkGraph {
  MetricGraph graph;
  std::vector<EdgeImage> to_original;  // per work edge
  GraphPoint map(const GraphPoint& p) const;
};

WorkGraph work_graph(const MetricGraph& g);

struct LpModel {
  lp::Program program;
  std::vector<std::size_t> var_edge;    // variable -> edge (variable 0 is delta)
  std::vector<std::size_t> var_vertex;  // variable -> vertex
  std::vector<std::string> names;       // "delta", "d[v,e]"
  std::vector<std::size_t> capacity_row;  // edge -> row index or npos
};

LpModel build_lp(const MetricGraph& w, const Assignment& t);

struct LPSolution {
  bool feasible = false;
  Rational delta;
  RVec values;  // x of the program
  std::vector<bool> tight_in_all_optima;  // per row
};

/// Solves the program and, when requested, decides for every row whether it
/// is tight at every optimum.
LPSolution lp_solve(const MetricGraph& w, const Assignment& t, bool tightness = true);

struct CodeFamily {
  Assignment t;                 // on the work graph
  bool single = false;          // the optimal face is one code with no rattle
  std::vector<std::size_t> rattle_edges;
  RVec d_min, d_max;            // per program variable over the optimal face
  Code representative;          // the code, or a generic member of the family
  std::vector<Code> extremes;   // vertex solutions of the face
};

struct OptimalCodes {
  Rational delta;
  bool certified = false;  // delta <= min edge length
  bool cycle = false;
  Rational lower_bound;    // realized code used to prune assignments
  std::size_t assignments = 0;       // canonical assignments solved
  std::vector<CodeFamily> families;  // one per optimal canonical assignment
  bool unique = false;               // unique up to isometry
  std::size_t isometry_classes = 0;  // when every family is a single code
};

struct SearchOptions {
  std::uint64_t seed = 1;
  bool dedupe = true;
};

OptimalCodes optimal_codes(const MetricGraph& g, std::size_t n, Budget& budget,
                           const SearchOptions& opt = {});

/// Best minimum distance over codes drawn from the points at multiples of
/// `step` along every edge (exhaustive clique search).
Rational discretized_optimum(const MetricGraph& g, std::size_t n, const Rational& step,
                             Budget& budget);

/// Non-isomorphic trees on the given number of vertices, unit edge lengths.
std::vector<MetricGraph> unit_trees(std::size_t vertices);

}  // namespace unicorn::mgraph
