#include "doctest.h"
#include "unicorn/tree/tree_unicorn.hpp"

using namespace unicorn;
using namespace unicorn::mgraph;
using namespace unicorn::tree;

template <>
struct doctest::StringMaker<Rational> {
  static String convert(const Rational& r) { return r.str().c_str(); }
};

namespace {

Rational q(long a, long b = 1) { return Rational(a) / Rational(b); }

MetricGraph star3() {
  MetricGraph g(4);
  for (std::size_t i = 1; i <= 3; ++i) g.add_edge(0, i, q(1));
  return g;
}

MetricGraph spider112() {
  MetricGraph g(5);
  g.add_edge(0, 1, q(1));
  g.add_edge(0, 2, q(1));
  g.add_edge(0, 4, q(1));
  g.add_edge(4, 3, q(1));
  return g;
}

MetricGraph weighted() {
  // Two junctions joined by an edge of length 3/2.
  MetricGraph g(6);
  g.add_edge(0, 1, q(3, 2));
  g.add_edge(0, 2, q(1));
  g.add_edge(0, 3, q(2));
  g.add_edge(1, 4, q(1));
  g.add_edge(1, 5, q(3, 2));
  return g;
}

MetricGraph edge(const Rational& w) {
  MetricGraph g(2);
  g.add_edge(0, 1, w);
  return g;
}

/// Largest n whose optimal minimum distance is still at least delta.
std::size_t capacity(const MetricGraph& g, const Rational& delta, Budget& b) {
  std::size_t n = 2;
  while (optimal_codes(g, n + 1, b).delta >= delta) ++n;
  return n;
}

}  // namespace

TEST_CASE("tree structure") {
  auto t = metric_tree(spider112());
  CHECK(t.junctions.size() == 1);
  CHECK(t.leaves.size() == 3);
  CHECK(t.shortest == q(1));
  CHECK_THROWS_AS(metric_tree([] {
                    MetricGraph g(3);
                    g.add_edge(0, 1, q(1));
                    g.add_edge(1, 2, q(1));
                    g.add_edge(2, 0, q(1));
                    return g;
                  }()),
                  Error);
}

TEST_CASE("unit star admissibility") {
  auto t = metric_tree(star3());
  auto w = check_delta(t, q(2, 3));
  REQUIRE(w);
  CHECK(w->g[0].size() == 3);
  // Every path sum is 2 and frac(1/(1/2)) = 0, so 1/2 passes as well.
  CHECK(check_delta(t, q(1, 2)));
  CHECK_FALSE(check_delta(t, q(3, 5)));
  CHECK(check_delta(t, q(2, 5)));
  CHECK_THROWS_AS(check_delta(t, q(1)), Error);
  CHECK_THROWS_AS(check_delta(t, q(0)), Error);
}

TEST_CASE("single edge") {
  auto t = metric_tree(edge(q(1)));
  CHECK(t.junctions.empty());
  auto w = check_delta(t, q(1, 3));
  REQUIRE(w);
  auto code = build_unique_code(t, q(1, 3), *w);
  CHECK(code_addresses(t.original, code) ==
        code_addresses(t.original, {{0, q(0)}, {0, q(1, 3)}, {0, q(2, 3)}, {0, q(1)}}));
  CHECK_FALSE(check_delta(t, q(2, 5)));
  Budget b(1'000'000);
  auto scan = enumerate_deltas(t, 6, b);
  CHECK(scan.deltas == std::vector<Rational>{q(1, 2), q(1, 3), q(1, 4), q(1, 5), q(1, 6)});
}

TEST_CASE("a path smooths to a single edge") {
  MetricGraph g(4);
  g.add_edge(0, 1, q(1));
  g.add_edge(1, 2, q(1, 2));
  g.add_edge(2, 3, q(1));
  auto t = metric_tree(g);
  CHECK(t.shortest == q(5, 2));
  auto code = build_unique_code(t, q(5, 6), *check_delta(t, q(5, 6)));
  CHECK(code.size() == 4);
  CHECK(code_min_distance(g, code) == q(5, 6));
}

TEST_CASE("unit star code at 2/3") {
  auto t = metric_tree(star3());
  auto code = build_unique_code(t, q(2, 3), *check_delta(t, q(2, 3)));
  CHECK(code.size() == 6);
  Budget b(1'000'000);
  CHECK(optimal_codes(t.original, 6, b).delta == q(2, 3));
  CHECK(code_min_distance(t.original, code) == q(2, 3));
  for (std::size_t leaf = 1; leaf <= 3; ++leaf)
    CHECK(std::count_if(code.begin(), code.end(), [&](const GraphPoint& p) {
            return address(t.original, p) == address(t.original, vertex_point(t.original, leaf));
          }) == 1);
}

TEST_CASE("admissible deltas agree with the linear program") {
  Budget b(4'000'000'000);
  for (const auto& g : {star3(), spider112(), weighted()}) {
    auto t = metric_tree(g);
    auto grp = isometry_group(g, b);
    auto scan = enumerate_deltas(t, 4, b);
    CHECK_FALSE(scan.deltas.empty());
    for (const auto& base : scan.bases)
      for (long k = 1; k <= 4; ++k) {
        Rational d = base / q(k);
        if (d >= t.shortest) continue;
        CAPTURE(d);
        auto w = check_delta(t, d);
        std::size_t n = capacity(g, d, b);
        auto r = optimal_codes(g, n, b);
        bool lp_unique = r.delta == d && r.unique;
        CHECK(bool(w) == lp_unique);
        if (!w) continue;
        auto code = build_unique_code(t, d, *w);
        CHECK(code.size() == n);
        CHECK(canonical_form(grp, code) == canonical_form(grp, r.families[0].representative));
        CHECK(audit_symmetry(g, grp, code).fixing_count + 1 == grp.elements.size());
      }
  }
}

TEST_CASE("rejected inputs") {
  auto t = metric_tree(star3());
  CHECK_THROWS_AS(build_unique_code(t, q(3, 5), FGWitness{}), Error);
  Budget b(10);
  CHECK_THROWS_AS(enumerate_deltas(t, 0, b), Error);
}
