#include <cmath>

#include "doctest.h"
#include "unicorn/seq/seq.hpp"

using namespace unicorn;
using namespace unicorn::seq;

namespace {

Rational q(long a, long b = 1) { return Rational(a) / Rational(b); }

PiPoly zeta2() { return PiPoly::pi_squared() / QSqrt2(6); }

LpSpaceSpec spec(std::set<unsigned long> n, unsigned long cutoff, bool tail, unsigned long p) {
  return LpSpaceSpec{std::move(n), cutoff, tail, p};
}

}  // namespace

TEST_CASE("l^p optimal codes") {
  auto s1 = spec({1}, 1, false, 2);
  auto c = lp_optimal_code(s1, 2);
  CHECK(c.points == std::vector<LpPoint>{{1, 1}, {1, -1}});
  CHECK(c.delta_p == q(2));

  auto s2 = spec({5}, 5, false, 2);
  auto c3 = lp_optimal_code(s2, 3);
  CHECK(c3.points == std::vector<LpPoint>{{1, 1}, {2, 1}, {3, 1}});
  CHECK(c3.delta_p == q(1, 4) + q(1, 9));

  auto s3 = spec({}, 0, true, 3);
  for (std::size_t n = 2; n <= 9; ++n) {
    auto c = lp_optimal_code(s3, n);
    // The two least norms a >= b among the chosen points give delta^p = a^p + b^p.
    std::vector<Rational> norms;
    for (const auto& p : c.points) norms.push_back(lp_norm_p(s3, p));
    std::sort(norms.begin(), norms.end());
    CHECK(c.delta_p == norms[0] + norms[1]);
  }
  CHECK_THROWS_AS(lp_optimal_code(s1, 1), Error);
  CHECK_THROWS_AS(spec({}, 0, false, 2).validate(), Error);
  CHECK_THROWS_AS(lp_norm_p(s1, {2, -1}), Error);
}

TEST_CASE("l^p exchange argument") {
  auto s = spec({1, 3}, 4, false, 2);
  auto canon = lp_optimal_code(s, 4).points;
  CHECK(lp_exchange_suboptimality(s, canon).optimal);

  std::vector<LpPoint> skip = {{1, 1}, {1, -1}, {3, 1}, {4, 1}};
  auto ex = lp_exchange_suboptimality(s, skip);
  CHECK_FALSE(ex.optimal);
  CHECK(ex.added == LpPoint{2, 1});
  CHECK(ex.removed == LpPoint{4, 1});
  CHECK(ex.after_p > ex.before_p);

  std::vector<LpPoint> with_zero = {{0, 1}, {1, 1}, {1, -1}};
  auto ez = lp_exchange_suboptimality(s, with_zero);
  CHECK_FALSE(ez.optimal);
  CHECK(ez.removed == LpPoint{0, 1});
  CHECK(ez.added == LpPoint{2, 1});

  // Exhaustive check on a small pool: no 4-subset beats the canonical code.
  std::vector<LpPoint> pool = {{0, 1}, {1, 1}, {1, -1}, {2, 1}, {3, 1}, {3, -1}, {4, 1}, {5, 1}};
  Rational best;
  for (unsigned mask = 0; mask < (1U << pool.size()); ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    std::vector<LpPoint> pick;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1U) pick.push_back(pool[i]);
    best = unicorn::max(best, lp_min_distance_p(s, pick));
  }
  CHECK(best == lp_optimal_code(s, 4).delta_p);

  // g_N fixes a code that contains both signs of every index in N it uses.
  std::set<unsigned long> flip = {1};
  std::set<LpPoint> image;
  for (const auto& p : canon) image.insert(lp_flip(s, flip, p));
  CHECK(image == std::set<LpPoint>(canon.begin(), canon.end()));
}

TEST_CASE("Hilbert pair") {
  auto c = hilbert_pair();
  REQUIRE(c.squared_edges.size() == 1);
  CHECK(c.squared_edges[0] == zeta2());
  HilbertIsometry all{{}, HilbertIsometry::Tail::kAll};
  std::vector<HilbertPoint> img;
  for (const auto& p : c.points) img.push_back(apply(all, p));
  CHECK(same_code(img, c.points));
  HilbertPoint off{{{3, PiPoly(q(1, 6))}}, Rule::kFull};
  CHECK(compare(hilbert_squared_distance(c.points[0], off), zeta2()) < 0);
  HilbertPoint bad{{{2, PiPoly(q(1))}}, Rule::kZero};
  CHECK_THROWS_AS(validate_hilbert_point(bad), Error);
}

TEST_CASE("Hilbert triple") {
  auto c = hilbert_triple();
  REQUIRE(c.squared_edges.size() == 3);
  PiPoly longer = zeta2() - PiPoly(q(3, 4));
  CHECK(c.squared_edges[0] == longer);  // x to y
  CHECK(c.squared_edges[1] == PiPoly(1));  // x to z
  CHECK(c.squared_edges[2] == longer);  // y to z
  CHECK(compare(longer, PiPoly(1)) < 0);
  HilbertIsometry g1{{1}, HilbertIsometry::Tail::kNone};
  std::vector<HilbertPoint> img;
  for (const auto& p : c.points) img.push_back(apply(g1, p));
  CHECK(same_code(img, c.points));
}

TEST_CASE("greedy unit fractions") {
  auto a = hilbert_alpha();
  PiPoly x = a - PiPoly(1) - PiPoly(q(1, 4) + q(1, 9) + q(1, 16));
  auto g = salzer_greedy(x, 20);
  REQUIRE(g.steps.size() == 20);
  CHECK(g.steps[0].a == 5);
  // Reference terms computed independently with 3000-bit mpmath.
  const long ref[] = {5, 8, 25, 90, 842, 32009};
  for (std::size_t k = 0; k < 6; ++k) CHECK(g.steps[k].a == ref[k]);
  for (std::size_t k = 0; k < g.steps.size(); ++k) {
    CHECK(g.steps[k].sandwich);
    CHECK(g.steps[k].a >= BigInt(static_cast<unsigned long>(k + 4)));
    if (k > 0) CHECK(g.steps[k].a > g.steps[k - 1].a);
  }
  CHECK(g.residual.lo().sign() >= 0);
  CHECK(g.residual.width() <= Rational(BigInt(1), BigInt(BigInt(1) << 64)));

  PiPoly x2 = a - PiPoly(1) - PiPoly(q(1, 4) + q(1, 9) + q(1, 16) + q(1, 36) + q(1, 49));
  auto g2 = salzer_greedy(x2, 20);
  CHECK(g2.steps[0].a == 11);
  for (const auto& s : g2.steps) CHECK(s.sandwich);

  CHECK(salzer_greedy(PiPoly(q(1, 10)), 1).steps[0].a == 4);
  CHECK_THROWS_AS(salzer_greedy(PiPoly(q(1, 9)), 1), Error);
  CHECK_THROWS_AS(salzer_greedy(PiPoly(0), 1), Error);

  // Double-precision cross-check of the first terms.
  double xd = std::sqrt(2.0) * M_PI / 3 - 1 - 0.25 - 1.0 / 9 - 1.0 / 16, acc = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    long ak = 2;
    while (acc + 1.0 / (double(ak) * ak) >= xd) ++ak;
    CHECK(g.steps[k].a == ak);
    acc += 1.0 / (double(ak) * ak);
  }
}

TEST_CASE("Hilbert quad") {
  NamedSet n({2, 3, 4}, 12);
  CHECK(n.greedy_terms()[0] == 5);
  CHECK(n.contains(2));
  CHECK_FALSE(n.contains(1));
  CHECK(n.contains(5));
  CHECK_FALSE(n.contains(6));
  auto c = hilbert_quad(n);
  CHECK(c.conjectural);
  auto a = hilbert_alpha();
  PiPoly small = a * a - a;
  std::size_t small_count = 0;
  std::vector<PiPoly> others;
  for (const auto& e : c.squared_edges) {
    if (e == small) ++small_count;
    else others.push_back(e);
  }
  CHECK(small_count == 5);
  REQUIRE(others.size() == 1);
  // |e_1 + t|^2 = 1 + sum over N of 1/k^2 = alpha.
  CHECK(others[0] == a);
  CHECK(c.squared_edges[1] == a);
  CHECK(compare(small, a) < 0);

  HilbertIsometry g{{1}, HilbertIsometry::Tail::kNamed};
  std::vector<HilbertPoint> img;
  for (const auto& p : c.points) img.push_back(apply(g, p, &n));
  CHECK(same_code(img, c.points, &n));

  NamedSet n2({2, 3, 4, 6, 7}, 12);
  CHECK(n2.greedy_terms()[0] == 11);
  auto c2 = hilbert_quad(n2);
  CHECK(c2.squared_edges == c.squared_edges);

  CHECK_THROWS_AS(NamedSet({2}, 3), Error);  // remainder too large for the greedy lemma
  CHECK_THROWS_AS(NamedSet({2, 3, 4, 5, 6, 7, 8, 9, 10}, 3), Error);
}

TEST_CASE("truncated search") {
  auto r = truncated_hilbert_search(1, 2, 3, 1);
  CHECK(r.delta_sq == doctest::Approx(1.0));

  // Truncated size-3 analog: the lemma's argument bounds delta^2 by 1/4 + sum_{k=2}^{3} 1/k^2.
  double bound = 0.25 + 0.25 + 1.0 / 9;
  auto r3 = truncated_hilbert_search(3, 3, 8, 7);
  CHECK(r3.delta_sq <= bound + 1e-9);
  // Exhaustive search on a grid of five values per coordinate.
  std::vector<std::vector<double>> grid;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k) grid.push_back({i / 4.0, j / 8.0, k / 12.0});
  double best = 0;
  auto d2 = [](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
  };
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = a + 1; b < grid.size(); ++b)
      for (std::size_t c = b + 1; c < grid.size(); ++c)
        best = std::max(best, std::min({d2(grid[a], grid[b]), d2(grid[a], grid[c]), d2(grid[b], grid[c])}));
  CHECK(best == doctest::Approx(bound));
  CHECK(r3.delta_sq >= best - 1e-9);

  auto again = truncated_hilbert_search(3, 3, 8, 7);
  CHECK(again.delta_sq == r3.delta_sq);
  CHECK_THROWS_AS(truncated_hilbert_search(9, 3, 1, 1), Error);
}
