#include "doctest.h"

#include <set>

#include "unicorn/orthotope/orthotope.hpp"

using namespace unicorn;
using namespace unicorn::orthotope;

namespace {

RVec iv(std::initializer_list<long> xs) {
  RVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RVec rv(std::initializer_list<const char*> xs) {
  RVec v;
  for (auto x : xs) v.push_back(Rational::parse(x));
  return v;
}

// Every integer vector with m entries in [0, 3].
std::vector<RVec> small_boxes(std::size_t m) {
  std::vector<RVec> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 4;
  for (std::size_t k = 0; k < total; ++k) {
    RVec u;
    std::size_t r = k;
    for (std::size_t i = 0; i < m; ++i) {
      u.emplace_back(static_cast<long>(r % 4));
      r /= 4;
    }
    out.push_back(u);
  }
  return out;
}

long grid_size(const RVec& u) {
  long p = 1;
  for (auto& x : u) p *= x.num().get_si() + 1;
  return p;
}

}  // namespace

TEST_CASE("grid codes") {
  CHECK(grid_code(iv({1})).size() == 2);
  auto g21 = grid_code(iv({2, 1}));
  CHECK(g21.size() == 6);
  CHECK(orthotope::min_distance(g21) == Rational(1));
  CHECK(grid_code(iv({3, 3})).size() == 16);
  for (std::size_t m = 1; m <= 4; ++m)
    for (const auto& u : small_boxes(m)) {
      auto g = grid_code(u);
      CHECK(static_cast<long>(g.size()) == grid_size(u));
      if (g.size() >= 2) CHECK(orthotope::min_distance(g) == Rational(1));
    }
  CHECK_THROWS_AS(grid_code(rv({"1/2"})), Error);
  CHECK_THROWS_AS(grid_code(iv({-1})), Error);
}

TEST_CASE("unicorn sizes and volume bound") {
  auto a = is_unicorn_size(iv({1, 1}), 4);
  REQUIRE(a.yes);
  CHECK(a.deltas == std::vector<Rational>{Rational(1)});
  CHECK_FALSE(is_unicorn_size(iv({1, 1}), 3).yes);
  auto b = is_unicorn_size(iv({2, 2}), 9);
  REQUIRE(b.yes);
  CHECK(b.deltas.front() == Rational(1));
  auto c = is_unicorn_size(iv({2, 2}), 4);
  REQUIRE(c.yes);
  CHECK(c.deltas.front() == Rational(2));
  auto d = is_unicorn_size(rv({"3/2", "1/2"}), 8);  // delta = 1/2: 4 * 2
  REQUIRE(d.yes);
  CHECK(d.deltas.front() == Rational(1, 2));
  CHECK_THROWS_AS(is_unicorn_size(iv({1}), 1), Error);

  CHECK(volume_bound(iv({2, 1}), 1) == Rational(6));
  CHECK(volume_bound(iv({1}), Rational(1, 2)) == Rational(3));
  CHECK(volume_bound(iv({3, 3}), 2) == Rational(25, 4));

  // Brute force: the predicate agrees with scanning k directly.
  for (const auto& u : small_boxes(2)) {
    if (u[0].is_zero() && u[1].is_zero()) continue;
    for (long n = 2; n <= 40; ++n) {
      std::set<Rational> expect;
      for (long k = 1; k <= 40; ++k) {
        Rational g = u[0].is_zero() ? u[1] : u[1].is_zero() ? u[0] : gcd(u[0], u[1]);
        Rational delta = g / Rational(k);
        if (volume_bound(u, delta) == Rational(n)) expect.insert(delta);
      }
      auto got = is_unicorn_size(u, n);
      CHECK(std::set<Rational>(got.deltas.begin(), got.deltas.end()) == expect);
    }
  }
}

TEST_CASE("big code bound") {
  BoxCode cells = {rv({"1/4", "1/4"}), rv({"1/4", "7/4"}), rv({"7/4", "1/4"}), rv({"7/4", "7/4"})};
  auto v = big_code_bound(iv({2, 2}), cells);
  CHECK(v.delta == Rational(3, 2));
  CHECK(v.applicable);
  CHECK(v.within_bound);
  CHECK(v.bound == 4);
  auto w = big_code_bound(iv({1}), grid_code(iv({1})));
  CHECK_FALSE(w.applicable);
}

TEST_CASE("code minus one decomposition") {
  SUBCASE("fifteen puzzle") {
    BoxCode code;
    for (const auto& p : grid_code(iv({3, 3})))
      if (p[1] != Rational(3)) code.push_back(p);
    code.push_back(rv({"1/3", "3"}));
    code.push_back(rv({"3/2", "3"}));
    code.push_back(rv({"3", "3"}));
    auto d = verify_minus_one_structure(iv({3, 3}), code);
    REQUIRE(d.found);
    CHECK(d.a.size() == 12);
    CHECK(d.b.size() == 3);
    CHECK(d.axis == 0);
    CHECK(d.anchor == iv({0, 3}));
    CHECK(d.a_reflection_invariant);
  }
  SUBCASE("three corners") {
    BoxCode code = {iv({0, 0}), iv({1, 0}), iv({0, 1})};
    auto d = verify_minus_one_structure(iv({1, 1}), code);
    REQUIRE(d.found);
    CHECK(d.a.size() == 2);
    CHECK(d.b.size() == 1);
    CHECK(d.a == BoxCode{iv({0, 0}), iv({1, 0})});
  }
  SUBCASE("sliding survivor in a column") {
    BoxCode code = {iv({0, 0}), iv({0, 1}), iv({2, 0}), iv({2, 1}), rv({"1", "1/2"})};
    auto d = verify_minus_one_structure(iv({2, 1}), code);
    REQUIRE(d.found);
    CHECK(d.axis == 1);
    CHECK(d.b == BoxCode{rv({"1", "1/2"})});
    CHECK(d.a_reflection_invariant);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(verify_minus_one_structure(iv({3}), grid_code(iv({2}))), Error);
    BoxCode tight = {iv({0, 0}), iv({1, 0}), rv({"1/2", "1/2"})};
    CHECK_THROWS_AS(verify_minus_one_structure(iv({1, 1}), tight), Error);
    CHECK_THROWS_AS(verify_minus_one_structure(iv({1, 1}), grid_code(iv({1, 1}))), Error);
  }
}

TEST_CASE("brute force oracle") {
  Budget budget(50'000'000);
  auto a = brute_force_optimal(iv({1}), 3, Rational(1, 4), budget);
  CHECK(a.best_delta == Rational(1, 2));
  CHECK(a.configurations.size() == 1);
  auto b = brute_force_optimal(iv({1, 1}), 4, Rational(1, 4), budget);
  CHECK(b.best_delta == Rational(1));
  REQUIRE(b.configurations.size() == 1);
  CHECK(b.configurations[0] == grid_code(iv({1, 1})));
  auto c = brute_force_optimal(iv({1, 1}), 5, Rational(1, 4), budget);
  CHECK(c.best_delta < Rational(1));
  CHECK(c.best_delta == Rational(1, 2));
  Budget tiny(10);
  CHECK_THROWS_AS(brute_force_optimal(iv({3, 3}), 16, Rational(1, 4), tiny), Error);
}

TEST_CASE("oracle agrees with grid uniqueness and minus-one structure") {
  Budget budget(2'000'000'000);
  for (const auto& u : small_boxes(2)) {
    long full = grid_size(u);
    if (full < 2 || full > 16) continue;
    auto r = brute_force_optimal(u, full, Rational(1, 4), budget);
    CHECK(r.best_delta == Rational(1));
    REQUIRE(r.configurations.size() == 1);
    CHECK(r.configurations[0] == grid_code(u));
    bool two_positive = !u[0].is_zero() && !u[1].is_zero();
    if (!two_positive || full - 1 < 2) continue;
    auto s = brute_force_optimal(u, full - 1, Rational(1, 4), budget);
    CHECK(s.best_delta == Rational(1));
    for (const auto& code : s.configurations) {
      auto d = verify_minus_one_structure(u, code);
      REQUIRE(d.found);
      CHECK(d.a_reflection_invariant);
      BoxCode filled = d.a;
      RVec p = d.anchor;
      for (long t = 0; t <= u[d.axis].num().get_si(); ++t) {
        p[d.axis] = Rational(t);
        filled.push_back(p);
      }
      std::sort(filled.begin(), filled.end());
      CHECK(filled == grid_code(u));
    }
  }
}
