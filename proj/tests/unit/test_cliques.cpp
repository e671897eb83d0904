#include <random>

#include "doctest.h"
#include "unicorn/graph/cliques.hpp"

using namespace unicorn;
using namespace unicorn::graph;

namespace {

// Exhaustive reference: every vertex subset, tested directly.
struct Brute {
  std::vector<std::vector<std::size_t>> maximal;
  std::vector<std::size_t> count_by_size;
};

Brute brute(const Graph& g) {
  std::size_t n = g.size();
  Brute b;
  b.count_by_size.assign(n + 1, 0);
  std::vector<std::vector<std::size_t>> cliques;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1U << i)) vs.push_back(i);
    if (!g.is_clique(vs)) continue;
    ++b.count_by_size[vs.size()];
    bool maximal = true;
    for (std::size_t u = 0; u < n && maximal; ++u) {
      if (mask & (1U << u)) continue;
      auto w = vs;
      w.push_back(u);
      if (g.is_clique(w)) maximal = false;
    }
    if (maximal && !vs.empty()) b.maximal.push_back(vs);
  }
  std::sort(b.maximal.begin(), b.maximal.end());
  return b;
}

}  // namespace

TEST_CASE("bitset basics") {
  Bitset b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.next(1) == 64);
  CHECK(b.next(65) == 129);
  b.keep_above(64);
  CHECK(b.indices() == std::vector<std::size_t>{129});
}

TEST_CASE("clique enumeration agrees with exhaustive subsets") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 3 + static_cast<std::size_t>(trial % 10);
    double p = 0.25 + 0.1 * (trial % 6);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) g.add_edge(i, j);
    Brute ref = brute(g);
    Budget budget(10'000'000);
    CHECK(maximal_cliques(g, budget) == ref.maximal);
    auto mc = maximum_cliques(g, budget);
    std::size_t omega = 0;
    for (std::size_t k = 0; k <= n; ++k)
      if (ref.count_by_size[k]) omega = k;
    CHECK(mc.clique_number == omega);
    CHECK(mc.cliques.size() == ref.count_by_size[omega]);
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t cnt = 0;
      for_each_clique_of_size(g, k, budget, [&](const std::vector<std::size_t>& c) {
        CHECK(g.is_clique(c));
        ++cnt;
        return true;
      });
      CHECK(cnt == ref.count_by_size[k]);
    }
    // Extension property versus direct check on every (omega-1)-clique.
    bool all_extend = true;
    if (omega >= 2) {
      for_each_clique_of_size(g, omega - 1, budget, [&](const std::vector<std::size_t>& c) {
        bool ext = false;
        for (std::size_t u = 0; u < n && !ext; ++u) {
          if (std::find(c.begin(), c.end(), u) != c.end()) continue;
          auto w = c;
          w.push_back(u);
          ext = g.is_clique(w);
        }
        all_extend = all_extend && ext;
        return true;
      });
    }
    CHECK(every_near_maximum_clique_extends(g, budget) == all_extend);
  }
}

TEST_CASE("budget exhaustion raises a resource error") {
  Graph g(20);
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = i + 1; j < 20; ++j)
      if ((i + j) % 3) g.add_edge(i, j);
  Budget tiny(5);
  CHECK_THROWS_AS(maximal_cliques(g, tiny), Error);
}
