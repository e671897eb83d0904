#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "unicorn/core/error.hpp"

namespace unicorn::graph {

/// Fixed-size dynamic bitset used for adjacency rows and candidate sets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t count() const;
  bool none() const;
  /// Smallest set index >= from, or size() if none.
  std::size_t next(std::size_t from) const;
  std::size_t first() const { return next(0); }
  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  /// Removes every element of o.
  Bitset& subtract(const Bitset& o);
  /// Keeps only indices strictly greater than i.
  void keep_above(std::size_t i);
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  bool operator==(const Bitset& o) const { return w_ == o.w_; }
  std::vector<std::size_t> indices() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : adj_(n, Bitset(n)) {}
  std::size_t size() const { return adj_.size(); }
  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a].test(b); }
  const Bitset& neighbours(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  std::size_t edge_count() const;
  bool is_clique(const std::vector<std::size_t>& vs) const;

 private:
  std::vector<Bitset> adj_;
};

/// Vertex order of a degeneracy (smallest-last) ordering.
std::vector<std::size_t> degeneracy_order(const Graph& g);

/// All maximal cliques (Bron-Kerbosch with Tomita pivoting, outer loop in
/// degeneracy order). Each clique is sorted; the list is sorted lexicographically.
std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g, Budget& budget);

struct MaximumCliques {
  std::size_t clique_number = 0;
  std::vector<std::vector<std::size_t>> cliques;  // all cliques of maximum size
};

/// Clique number and every maximum clique.
MaximumCliques maximum_cliques(const Graph& g, Budget& budget);

/// Visits every clique with exactly k vertices (maximal or not) in
/// lexicographic order, pruning with a greedy colouring bound. The visitor
/// returns false to stop the search early.
void for_each_clique_of_size(const Graph& g, std::size_t k, Budget& budget,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit);

/// True iff some clique has at least k vertices.
bool has_clique_of_size(const Graph& g, std::size_t k, Budget& budget);

/// True iff every clique of size omega-1 is contained in a clique of size
/// omega, where omega is the clique number. Equivalent to: no maximal clique
/// has size exactly omega-1.
bool every_near_maximum_clique_extends(const Graph& g, Budget& budget);

}  // namespace unicorn::graph
