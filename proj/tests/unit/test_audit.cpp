#include <algorithm>
#include <set>

#include "doctest.h"
#include "unicorn/audit/audit.hpp"

using namespace unicorn;
using namespace unicorn::audit;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

mgraph::MetricGraph star(std::size_t legs) {
  mgraph::MetricGraph g(legs + 1);
  for (std::size_t i = 1; i <= legs; ++i) g.add_edge(0, i, q(1));
  return g;
}

void check_fixing(const Space& s, const std::vector<RVec>& code, const Stabilizer& st) {
  std::set<RVec> keys;
  for (const auto& x : code) keys.insert(point_key(s, x));
  for (const auto& g : st.elements) {
    std::set<RVec> img;
    for (const auto& x : code) img.insert(point_key(s, g.apply(s, x)));
    CHECK(img == keys);
    for (const auto& x : code)
      for (const auto& y : code) CHECK(metric_value(s, g.apply(s, x), g.apply(s, y)) == metric_value(s, x, y));
  }
}

}  // namespace

TEST_CASE("stabilizers of interval and box codes") {
  Budget b(10'000'000);
  auto I = Space::interval(q(1));
  for (long i = 1; i <= 6; ++i) {
    std::vector<RVec> c;
    for (long j = 0; j <= i; ++j) c.push_back({q(j, i)});
    auto st = stabilizer(I, c, b);
    CHECK(st.order() == 2);
    check_fixing(I, c, st);
    CHECK(partial_symmetry_max(I, c, b).overlap == c.size());
  }
  std::vector<RVec> lopsided = {{q(0)}, {q(1, 4)}, {q(3, 4)}, {q(1)}, {q(1, 10)}, {q(3, 5)}};
  CHECK(stabilizer(I, lopsided, b).order() == 1);
  CHECK(partial_symmetry_max(I, lopsided, b).overlap == lopsided.size() - 2);

  auto box = Space::orthotope({q(2), q(1)});
  std::vector<RVec> grid;
  for (long x = 0; x <= 2; ++x)
    for (long y = 0; y <= 1; ++y) grid.push_back({q(x), q(y)});
  auto st = stabilizer(box, grid, b);
  CHECK(st.order() == 4);
  check_fixing(box, grid, st);
  AffineIsometry flip{{{q(-1), q(0)}, {q(0), q(1)}}, {q(2), q(0)}};
  CHECK(std::any_of(st.elements.begin(), st.elements.end(),
                    [&](const AffineIsometry& g) { return g.a == flip.a && g.s == flip.s; }));
  auto square = Space::orthotope({q(1), q(1)});
  CHECK(finite_group(square, b).size() == 7);
  CHECK(stabilizer(square, {{q(0), q(0)}}, b).order() == 2);  // the diagonal swap
}

TEST_CASE("stabilizers on the sphere, the plane and tori") {
  Budget b(50'000'000);
  auto S = Space::sphere();
  std::vector<RVec> oct5 = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}};
  auto st = stabilizer(S, oct5, b);
  check_fixing(S, oct5, st);
  CHECK(st.order() == 8);  // the symmetries of a square fixing the pole
  CHECK(partial_symmetry_max(S, oct5, b).overlap == 5);

  auto P = Space::plane();
  std::vector<RVec> scalene = {{0, 0}, {1, 0}, {0, 2}};
  CHECK(stabilizer(P, scalene, b).order() == 1);
  std::vector<RVec> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto sst = stabilizer(P, sq, b);
  CHECK(sst.order() == 8);
  check_fixing(P, sq, sst);
  auto ov = partial_symmetry_max(P, scalene, b);
  CHECK(ov.restricted);
  CHECK(ov.overlap == 2);  // reflection in the x-axis keeps (0,0) and (1,0)

  auto T = Space::torus_of(torus::LatticeName::kA2);
  CHECK(finite_group(T, b).size() == 11);
  auto code = torus::lattice_code(*T.lattice, {q(3), q(-1), q(-2)}).points;
  REQUIRE(code.size() == 7);
  auto full = stabilizer(T, code, b);
  check_fixing(T, code, full);
  CHECK(full.order() >= 7);
  for (std::size_t drop = 0; drop < code.size(); ++drop) {
    auto minus = code;
    minus.erase(minus.begin() + static_cast<long>(drop));
    auto o = partial_symmetry_max(T, minus, b);
    CHECK(o.overlap >= minus.size() - 2);
    // x -> 2p - x maps the lattice code to itself and fixes the dropped point p.
    CHECK(o.overlap == minus.size());
  }
}

TEST_CASE("metric-tree audits") {
  Budget b(10'000'000);
  auto s3 = Space::metric_tree(star(3));
  mgraph::Code generic = {{0, q(1, 5)}, {1, q(1, 3)}, {2, q(1, 2)}};
  auto r = audit_code(s3, generic, b);
  CHECK(r.stabilizer_order == 1);
  CHECK_FALSE(r.conjecture1_holds);
  CHECK(r.strength == 1);
  mgraph::Code even = {{0, q(1, 2)}, {1, q(1, 2)}, {2, q(1, 2)}};
  auto r2 = audit_code(s3, even, b);
  CHECK(r2.stabilizer_order == 6);
  CHECK(r2.conjecture1_holds);
  CHECK(r2.max_overlap == 3);
  CHECK(r2.conjecture2_margin == 2);
  CHECK(r2.generators.size() == 5);
}

TEST_CASE("audit reports") {
  Budget b(10'000'000);
  auto I = Space::interval(q(1));
  auto r = audit_code(I, {{q(0)}, {q(1, 2)}, {q(1)}}, b);
  CHECK(r.stabilizer_order == 2);
  CHECK(r.generators == std::vector<std::string>{"x -> [(-1)] x + (1)"});
  CHECK(r.conjecture1_holds);
  CHECK(r.conjecture2_margin == 3);
  auto box = Space::orthotope({q(1), q(1)});
  auto rb = audit_code(box, {{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}}, b);
  CHECK(rb.stabilizer_order == 8);
  CHECK(rb.generators.size() >= 2);
  CHECK(rb.generators.size() <= 3);
  CHECK_THROWS_AS(stabilizer(I, {{q(2)}}, b), Error);
  CHECK_THROWS_AS(stabilizer(I, {{q(0)}, {q(0)}}, b), Error);
  CHECK_THROWS_AS(Space::torus_of(torus::LatticeName::kE8), Error);
  CHECK_THROWS_AS(parse_space_kind("hyperbolic"), Error);
}

TEST_CASE("symmetry strength witnesses") {
  Budget b(50'000'000);
  auto plane = symmetry_strength_witness(Space::plane(), 20, 1, b);
  CHECK(plane.t == 2);
  CHECK(plane.upper == std::vector<RVec>{{0, 0}, {1, 0}, {0, 2}});
  CHECK(plane.upper_rigid);
  CHECK(plane.lower_verified);
  CHECK(plane.lower.size() >= 20);

  auto circle = symmetry_strength_witness(Space::circle(q(1)), 20, 2, b);
  CHECK(circle.t == 2);
  CHECK(circle.upper_rigid);
  CHECK(circle.lower_verified);

  auto torus = symmetry_strength_witness(Space::torus_of(torus::LatticeName::kA2), 20, 3, b);
  CHECK(torus.t == 2);
  CHECK(torus.upper.size() == 3);
  CHECK(torus.upper_rigid);
  CHECK(torus.lower_verified);
  auto a1 = symmetry_strength_witness(Space::torus_of(torus::LatticeName::kA1), 10, 3, b);
  CHECK(a1.t == 2);
  CHECK(a1.upper_rigid);

  auto interval = symmetry_strength_witness(Space::interval(q(1)), 5, 4, b);
  CHECK(interval.t == 0);
  CHECK(interval.upper == std::vector<RVec>{{q(1, 3)}});
  CHECK(interval.upper_rigid);

  auto box = symmetry_strength_witness(Space::orthotope({q(3), q(3)}), 5, 5, b);
  CHECK(box.t == 0);
  CHECK(box.upper_rigid);

  // Star with three legs: one generic point is fixed by swapping the other two
  // legs, while two generic points on different legs pin everything down.
  auto tree = symmetry_strength_witness(Space::metric_tree(star(3)), 10, 6, b);
  CHECK(tree.t == 1);
  CHECK(tree.graph_upper.size() == 2);
  CHECK(tree.upper_rigid);
  CHECK(tree.lower_verified);
  auto star4 = symmetry_strength_witness(Space::metric_tree(star(4)), 10, 7, b);
  CHECK(star4.t == 2);
  CHECK(star4.lower_verified);
  mgraph::MetricGraph path(3);
  path.add_edge(0, 1, q(1));
  path.add_edge(1, 2, q(1));
  CHECK(symmetry_strength_witness(Space::metric_tree(path), 5, 8, b).t == 0);
  CHECK_THROWS_AS(symmetry_strength_witness(Space::sphere(), 1, 1, b), Error);
}
