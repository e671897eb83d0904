#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "unicorn/core/code.hpp"
#include "unicorn/torus/torus.hpp"

using namespace unicorn;
using namespace unicorn::torus;

namespace {

RVec iv(std::initializer_list<long> xs) {
  RVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Determinant by cofactor expansion (small matrices only).
Rational det(const RMatrix& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational d;
  for (std::size_t c = 0; c < n; ++c) {
    RMatrix sub;
    for (std::size_t r = 1; r < n; ++r) {
      RVec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(row);
    }
    Rational t = m[0][c] * det(sub);
    d += (c % 2 ? -t : t);
  }
  return d;
}

RMatrix gram(const RMatrix& b) {
  RMatrix g(b.size(), RVec(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) g[i][j] = dot(b[i], b[j]);
  return g;
}

// Lattice points sum c_i b_i with |c_i| <= span: independent of the
// coordinate-congruence description.
std::vector<RVec> basis_points(const LatticeSpec& s, long span) {
  std::vector<RVec> out;
  std::vector<long> c(s.dim, -span);
  while (true) {
    RVec v(s.ambient_dim);
    for (std::size_t i = 0; i < s.dim; ++i) v = v + Rational(c[i]) * s.basis[i];
    out.push_back(v);
    std::size_t i = 0;
    while (i < s.dim && c[i] == span) c[i++] = -span;
    if (i == s.dim) break;
    ++c[i];
  }
  return out;
}

RVec random_point(const LatticeSpec& s, std::mt19937& rng, long den) {
  std::uniform_int_distribution<long> d(-3 * den, 3 * den);
  RVec x;
  for (std::size_t i = 0; i < s.ambient_dim; ++i) x.push_back(Rational(d(rng), den));
  if (s.zero_sum) {
    Rational sum;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) sum += x[i];
    x.back() = -sum;
  }
  return x;
}

const LatticeName kAll[] = {LatticeName::kA1, LatticeName::kA2, LatticeName::kD4,
                            LatticeName::kE8};

}  // namespace

TEST_CASE("lattice specs") {
  std::map<LatticeName, std::pair<Rational, std::size_t>> expect = {
      {LatticeName::kA1, {Rational(1), 2}},
      {LatticeName::kA2, {Rational(3), 6}},
      {LatticeName::kD4, {Rational(4), 24}},
      {LatticeName::kE8, {Rational(1), 240}}};
  for (auto name : kAll) {
    auto s = build_lattice(name);
    CAPTURE(lattice_name_str(name));
    CHECK(det(gram(s.basis)) == expect[name].first);
    CHECK(s.minimal_vectors.size() == expect[name].second);
    for (const auto& b : s.basis) CHECK(in_lattice(s, b));
    for (const auto& v : s.minimal_vectors) CHECK(dot(v, v) == s.min_norm_sq);
  }
  CHECK(build_lattice(LatticeName::kA1).covering_radius_sq == Rational(1, 4));
  CHECK(build_lattice(LatticeName::kA2).covering_radius_sq == Rational(2, 3));
  CHECK(build_lattice(LatticeName::kD4).covering_radius_sq == Rational(1));
  CHECK(build_lattice(LatticeName::kE8).covering_radius_sq == Rational(1));
  CHECK(parse_lattice_name("e8") == LatticeName::kE8);
  CHECK_THROWS_AS(parse_lattice_name("z9"), Error);
  try {
    build_lattice(LatticeName::kLeech);
    FAIL("expected unsupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUnsupported);
  }
}

TEST_CASE("membership agrees with basis combinations") {
  for (auto name : kAll) {
    auto s = build_lattice(name);
    long span = name == LatticeName::kE8 ? 1 : 3;
    std::set<RVec> from_basis;
    for (auto& v : basis_points(s, span)) {
      CHECK(in_lattice(s, v));
      from_basis.insert(v);
    }
    // Every congruence-lattice point of small norm is an integer combination.
    for (const auto& v : lattice_points_near(s, RVec(s.ambient_dim), Rational(4))) {
      auto c = coset_key(s, v);
      for (const auto& x : c) CHECK(x.is_zero());
    }
  }
}

namespace {

// Decoders for Z^n, D_n, A_n and E8 (nearest point by rounding).
Rational round_half_up(const Rational& x) { return Rational((x + Rational(1, 2)).floor()); }

RVec decode_zn(const RVec& x) {
  RVec y;
  for (const auto& c : x) y.push_back(round_half_up(c));
  return y;
}

RVec decode_dn(const RVec& x) {
  RVec y = decode_zn(x);
  Rational sum;
  for (const auto& c : y) sum += c;
  if ((sum / Rational(2)).is_integer()) return y;
  std::size_t worst = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if ((x[i] - y[i]).abs() > (x[worst] - y[worst]).abs()) worst = i;
  y[worst] += (x[worst] >= y[worst]) ? Rational(1) : Rational(-1);
  return y;
}

RVec decode_e8(const RVec& x) {
  RVec half(8, Rational(1, 2));
  RVec a = decode_dn(x);
  RVec b = decode_dn(x - half) + half;
  return squared_distance(x, a) <= squared_distance(x, b) ? a : b;
}

RVec decode_an(const RVec& x) {
  RVec y = decode_zn(x);
  Rational sum;
  for (const auto& c : y) sum += c;
  long delta = sum.num().get_si();
  std::vector<std::size_t> idx(x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return x[a] - y[a] < x[b] - y[b];
  });
  for (long k = 0; k < delta; ++k) y[idx[k]] -= Rational(1);
  for (long k = 0; k < -delta; ++k) y[idx[idx.size() - 1 - k]] += Rational(1);
  return y;
}

RVec decode(const LatticeSpec& s, const RVec& x) {
  switch (s.name) {
    case LatticeName::kA1: return decode_zn(x);
    case LatticeName::kA2: return decode_an(x);
    case LatticeName::kD4: return decode_dn(x);
    default: return decode_e8(x);
  }
}

}  // namespace

TEST_CASE("closest vectors against independent decoders") {
  std::mt19937 rng(7);
  for (auto name : kAll) {
    auto s = build_lattice(name);
    for (int t = 0; t < 300; ++t) {
      RVec x = random_point(s, rng, 12);
      RVec nearest = decode(s, x);
      REQUIRE(in_lattice(s, nearest));
      auto cv = closest_vectors(s, x);
      CHECK(cv.dist_sq == squared_distance(x, nearest));
      CHECK(std::find(cv.points.begin(), cv.points.end(), nearest) != cv.points.end());
      CHECK(cv.dist_sq <= s.covering_radius_sq);
      RVec r = reduce_mod_lattice(s, x);
      CHECK(in_lattice(s, x - r));
      CHECK(coset_key(s, r) == coset_key(s, x));
      CHECK(dot(r, r) == cv.dist_sq);
      RVec shifted = x + s.basis[t % s.dim];
      CHECK(reduce_mod_lattice(s, shifted) == r);
    }
  }
}

TEST_CASE("reduction with large denominators") {
  auto s = build_lattice(LatticeName::kA2);
  // Denominator 97 * 89 * 13 is above 2^16, as products of two sampled fractions are.
  Rational a(5000, 97 * 89 * 13);
  RVec x = {a, -a, Rational(0)};
  RVec nearest = decode(s, x);
  CHECK(closest_vectors(s, x).dist_sq == squared_distance(x, nearest));
  CHECK(reduce_mod_lattice(s, x + s.basis[0]) == reduce_mod_lattice(s, x));
  Rational huge(1, (1L << 25) + 1);
  CHECK_THROWS_AS(reduce_mod_lattice(s, RVec{huge, -huge, Rational(0)}), Error);
}

TEST_CASE("coset keys detect lattice differences") {
  std::mt19937 rng(11);
  for (auto name : kAll) {
    auto s = build_lattice(name);
    for (int t = 0; t < 200; ++t) {
      RVec x = random_point(s, rng, 2), y = random_point(s, rng, 2);
      CHECK((coset_key(s, x) == coset_key(s, y)) == in_lattice(s, x - y));
    }
  }
}

TEST_CASE("deep holes") {
  auto a2 = build_lattice(LatticeName::kA2);
  auto d4 = build_lattice(LatticeName::kD4);
  auto e8 = build_lattice(LatticeName::kE8);
  CHECK(is_deep_hole(d4, iv({1, 0, 0, 0})));
  CHECK_FALSE(is_deep_hole(d4, iv({1, 1, 0, 0})));
  for (const auto& v : e8.minimal_vectors) CHECK_FALSE(is_deep_hole(e8, Rational(1, 2) * v));
  auto count_cosets = [](const LatticeSpec& s, const std::vector<RVec>& hs) {
    std::set<CosetKey> keys;
    for (const auto& h : hs) keys.insert(coset_key(s, h));
    return keys.size();
  };
  auto hd = deep_holes_min_norm(d4);
  CHECK(hd.size() == 24);
  CHECK(count_cosets(d4, hd) == 3);
  CHECK(sweep_deep_holes(d4, Rational(1, 2)) == hd);
  CHECK(sweep_deep_holes(d4, Rational(1, 4)) == hd);
  auto ha = deep_holes_min_norm(a2);
  CHECK(ha.size() == 6);
  CHECK(count_cosets(a2, ha) == 2);
  CHECK(sweep_deep_holes(a2, Rational(1, 12)) == ha);
  auto h1 = deep_holes_min_norm(build_lattice(LatticeName::kA1));
  CHECK(h1 == std::vector<RVec>{RVec{Rational(-1, 2)}, RVec{Rational(1, 2)}});
  auto he = deep_holes_min_norm(e8);
  CHECK(he.size() == 2160);
  CHECK(count_cosets(e8, he) == 135);
  // Halves of the E8 vectors of squared norm 4.
  std::vector<RVec> halves;
  for (const auto& v : lattice_points_near(e8, RVec(8), Rational(4)))
    if (dot(v, v) == Rational(4)) halves.push_back(Rational(1, 2) * v);
  std::sort(halves.begin(), halves.end());
  CHECK(halves == he);
  // Independent sweep of the quarter grid in the unit sphere.
  CHECK(sweep_deep_holes(e8, Rational(1, 4)) == he);
}

TEST_CASE("E8 theta series") {
  CHECK(theta_count_e8(1) == 240);
  CHECK(theta_count_e8(2) == 2160);
  CHECK(theta_count_e8(3) == 6720);
  for (long k = 1; k <= 4; ++k) CHECK(theta_count_e8(k) == theta_count_e8_enumerated(k));
  CHECK_THROWS_AS(theta_count_e8(0), Error);
}

TEST_CASE("size sets") {
  std::set<long> loesch;
  for (long a = 0; a <= 40; ++a)
    for (long b = 0; b <= 40; ++b) loesch.insert(a * a + a * b + b * b);
  for (long n = 1; n <= 500; ++n) CHECK(size_set_member(LatticeName::kA2, n) == (loesch.count(n) > 0));
  std::vector<long> first;
  for (long n = 1; first.size() < 7; ++n)
    if (size_set_member(LatticeName::kA2, n)) first.push_back(n);
  CHECK(first == std::vector<long>{1, 3, 4, 7, 9, 12, 13});
  CHECK(size_set_member(LatticeName::kD4, 9));
  CHECK_FALSE(size_set_member(LatticeName::kD4, 8));
  CHECK(size_set_member(LatticeName::kE8, 16));
  CHECK_FALSE(size_set_member(LatticeName::kE8, 8));
  CHECK(size_set_member(LatticeName::kLeech, 4096));
  CHECK(size_set_member(LatticeName::kA1, 17));

  std::vector<long> np;
  for (long n = 1; np.size() < 7; ++n)
    if (nprime_member(n)) np.push_back(n);
  CHECK(np == std::vector<long>{1, 3, 4, 9, 12, 16, 25});
  CHECK_FALSE(nprime_member(7));
  CHECK_FALSE(nprime_member(49));
  CHECK(size_set_member(LatticeName::kA2, 49));
  // Characterization: exactly six Eisenstein integers of norm n.
  for (long n = 1; n <= 300; ++n) {
    if (!loeschian(n)) continue;
    CHECK(nprime_member(n) == (a2_norm_orbit(n).elements == 6));
  }
}

TEST_CASE("A2 norm orbits") {
  CHECK(a2_norm_orbit(3).orbits == 1);
  CHECK(a2_norm_orbit(3).elements == 6);
  for (long n : {1, 3, 4, 9, 12, 16, 25}) CHECK(a2_norm_orbit(n).orbits == 1);
  CHECK(a2_norm_orbit(49).orbits >= 2);
  CHECK(a2_norm_orbit(7).orbits == 1);  // 12 elements, one orbit under conjugation too
  CHECK_THROWS_AS(a2_norm_orbit(2), Error);
}

namespace {

void check_code(const LatticeSpec& s, const RVec& v, long expected_size) {
  auto code = lattice_code(s, v);
  CHECK(static_cast<long>(code.points.size()) == expected_size);
  std::set<CosetKey> keys;
  for (const auto& p : code.points) keys.insert(coset_key(s, p));
  CHECK(keys.size() == code.points.size());
  if (code.points.size() >= 2) {
    auto md = min_distance(code.points, [&](const RVec& a, const RVec& b) {
      return torus_distance_sq(s, a, b);
    });
    CHECK(md == code.min_distance_sq);
    CHECK(md == s.min_norm_sq / code.scale_sq);
  }
  // Closure: the code is a group modulo L.
  for (const auto& p : code.points)
    for (const auto& q : code.points) CHECK(keys.count(coset_key(s, p + q)));
}

}  // namespace

TEST_CASE("lattice codes") {
  auto a1 = build_lattice(LatticeName::kA1);
  auto c3 = lattice_code(a1, iv({3}));
  std::set<CosetKey> k3;
  for (const auto& p : c3.points) k3.insert(coset_key(a1, p));
  CHECK(k3 == std::set<CosetKey>{{Rational(0)}, {Rational(1, 3)}, {Rational(2, 3)}});
  check_code(a1, iv({5}), 5);

  auto a2 = build_lattice(LatticeName::kA2);
  check_code(a2, iv({1, 1, -2}), 3);
  check_code(a2, iv({2, -2, 0}), 4);
  check_code(a2, iv({2, 1, -3}), 7);
  check_code(a2, iv({7, -7, 0}), 49);
  check_code(a2, iv({3, 5, -8}), 49);

  auto d4 = build_lattice(LatticeName::kD4);
  check_code(d4, iv({0, 2, 0, 0}), 4);
  check_code(d4, iv({1, 1, 1, 1}), 4);
  check_code(d4, iv({2, 1, 1, 0}), 9);
  check_code(d4, iv({2, 2, 0, 0}), 16);

  auto e8 = build_lattice(LatticeName::kE8);
  check_code(e8, e8.minimal_vectors[0], 1);
  check_code(e8, iv({2, 0, 0, 0, 0, 0, 0, 0}), 16);
  CHECK_THROWS_AS(lattice_code(e8, iv({2, 1, 1, 0, 0, 0, 0, 0})), Error);  // |z|^2 = 3

  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int t = 0; t < 20; ++t) {
    RVec v = {Rational(d(rng)), Rational(d(rng)), Rational(0), Rational(0)};
    v[2] = d(rng);
    Rational sum = v[0] + v[1] + v[2];
    v[3] = sum.num() % 2 == 0 ? 0 : 1;
    if (dot(v, v).is_zero()) continue;
    Rational k = dot(v, v) / Rational(2);
    if (k > Rational(16)) continue;
    check_code(d4, v, (k * k).num().get_si());
  }
  CHECK_THROWS_AS(lattice_code(d4, iv({1, 0, 0, 0})), Error);
  CHECK_THROWS_AS(lattice_code(d4, iv({0, 0, 0, 0})), Error);
}

TEST_CASE("holy graphs") {
  Budget budget(100'000'000);
  auto check_complete = [&](LatticeName name, std::size_t n) {
    auto s = build_lattice(name);
    auto h = holy_graph(s);
    CHECK(h.graph.size() == n);
    CHECK(h.graph.edge_count() == n * (n - 1) / 2);
    auto mc = max_cliques(h, budget);
    CHECK(mc.clique_number == n);
    CHECK(mc.cliques.size() == 1);
    CHECK(minus_one_extension(h, budget));
    CHECK(clique_orbit(s, h, mc.cliques).orbits.size() == 1);
    CHECK(clique_is_equidistant(s, h, mc.cliques[0]));
  };
  check_complete(LatticeName::kA1, 2);
  check_complete(LatticeName::kA2, 3);
  check_complete(LatticeName::kD4, 4);
}

TEST_CASE("E8 holy graph") {
  auto s = build_lattice(LatticeName::kE8);
  auto h = holy_graph(s);
  CHECK(h.deep_holes == 2160);
  REQUIRE(h.graph.size() == 136);
  CHECK(h.graph.degree(0) == 135);
  Budget budget(2'000'000'000);
  auto mc = max_cliques(h, budget);
  CHECK(mc.clique_number == 16);
  CHECK(mc.cliques.size() == 270);
  CHECK(minus_one_extension(h, budget));
  auto orbit = clique_orbit(s, h, mc.cliques);
  CHECK(orbit.orbits.size() == 1);
  CHECK(orbit.reflections == 120);
  for (const auto& c : mc.cliques) CHECK(clique_is_equidistant(s, h, c));
  auto walk = random_walk_orbit(s, h, mc.cliques, 42, 20000);
  CHECK(walk.distinct_visited == 270);
  CHECK(walk.first_full_cover > 0);
  // The lattice code of size 16 is one of the cliques.
  auto code = lattice_code(s, {Rational(2), 0, 0, 0, 0, 0, 0, 0});
  std::map<CosetKey, std::size_t> id;
  for (std::size_t i = 0; i < h.keys.size(); ++i) id[h.keys[i]] = i;
  std::vector<std::size_t> as_clique;
  for (const auto& p : code.points) {
    REQUIRE(id.count(coset_key(s, p)));
    as_clique.push_back(id[coset_key(s, p)]);
  }
  std::sort(as_clique.begin(), as_clique.end());
  CHECK(std::find(mc.cliques.begin(), mc.cliques.end(), as_clique) != mc.cliques.end());
}
