// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "unicorn/audit/audit.hpp"
#include "unicorn/core/error.hpp"
#include "unicorn/mgraph/mgraph.hpp"
#include "unicorn/orthotope/orthotope.hpp"
#include "unicorn/rankin/rankin.hpp"
#include "unicorn/seq/seq.hpp"
#include "unicorn/torus/torus.hpp"
#include "unicorn/ultra/ultra.hpp"

using namespace unicorn;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      failures.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

// ---- 1, 2: holy codes ---------------------------------------------------------

struct HolyFigures {
  std::size_t deep_holes, cosets, vertices, edges, clique_number, max_cliques, orbits;
  bool certified, extension;
};

HolyFigures holy_figures(torus::LatticeName name) {
  Budget b(2'000'000'000);
  auto spec = torus::build_lattice(name);
  auto holes = torus::deep_holes_min_norm(spec);
  bool certified = std::all_of(holes.begin(), holes.end(), [&](const RVec& h) {
    return torus::is_deep_hole(spec, h) && dot(h, h) == spec.covering_radius_sq;
  });
  auto g = torus::holy_graph(spec);
  auto cl = torus::max_cliques(g, b);
  auto orb = torus::clique_orbit(spec, g, cl.cliques);
  return {holes.size(),       g.reps.size() - 1, g.reps.size(), g.graph.edge_count(), cl.clique_number,
          cl.cliques.size(), orb.orbits.size(), certified,     torus::minus_one_extension(g, b)};
}

Outcome criterion1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto f = holy_figures(torus::LatticeName::kE8);
  double s = seconds_since(t0);
  o.expect(f.deep_holes == 2160, "deep holes " + std::to_string(f.deep_holes) + " != 2160");
  o.expect(f.certified, "some listed deep hole fails certification");
  o.expect(f.cosets == 135, "cosets " + std::to_string(f.cosets) + " != 135");
  o.expect(f.vertices == 136, "holy graph vertices " + std::to_string(f.vertices) + " != 136");
  o.expect(f.clique_number == 16, "clique number " + std::to_string(f.clique_number) + " != 16");
  o.expect(f.max_cliques == 270, "maximum cliques " + std::to_string(f.max_cliques) + " != 270");
  o.expect(f.orbits == 1, "orbits " + std::to_string(f.orbits) + " != 1");
  o.expect(f.extension, "some 15-clique does not extend");
  o.expect(s < 300, "runtime " + fmt_seconds(s) + " exceeds 5 minutes");
  o.note("2160 deep holes, 135 cosets, 136 vertices, clique number 16, 270 cliques, 1 orbit, in " + fmt_seconds(s));
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto f = holy_figures(torus::LatticeName::kD4);
  double s = seconds_since(t0);
  o.expect(f.deep_holes == 24, "deep holes " + std::to_string(f.deep_holes) + " != 24");
  o.expect(f.certified, "some deep hole fails certification");
  o.expect(f.cosets == 3, "nonzero cosets " + std::to_string(f.cosets) + " != 3");
  o.expect(f.vertices == 4 && f.edges == 6, "holy graph is not K4");
  o.expect(f.clique_number == 4 && f.max_cliques == 1, "expected one clique of size 4");
  o.expect(f.orbits == 1, "expected a single orbit");
  o.expect(f.extension, "some 3-clique does not extend");
  o.expect(s < 5, "runtime " + fmt_seconds(s) + " exceeds 5 seconds");
  o.note("24 deep holes, 3 cosets, K4, unique up to isometry, in " + fmt_seconds(s));
  return o;
}

// ---- 3: theta series ------------------------------------------------------------

Outcome criterion3() {
  Outcome o;
  const long published[] = {240, 2160, 6720, 17520};
  for (long k = 1; k <= 4; ++k) {
    long sigma3 = 0;
    for (long d = 1; d <= k; ++d)
      if (k % d == 0) sigma3 += d * d * d;
    BigInt enumerated = torus::theta_count_e8_enumerated(k);
    o.expect(240 * sigma3 == published[k - 1], "240 sigma_3(" + std::to_string(k) + ") disagrees with the table");
    o.expect(enumerated == 240 * sigma3,
             "k=" + std::to_string(k) + ": enumerated " + enumerated.get_str() + " != " + std::to_string(240 * sigma3));
  }
  o.note("counts 240, 2160, 6720, 17520");
  return o;
}

// ---- 4: size sets ---------------------------------------------------------------

Outcome criterion4() {
  Outcome o;
  std::set<long> brute;  // a^2 + ab + b^2 by exhaustive search
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) brute.insert(a * a + a * b + b * b);
  std::vector<long> n_a2, n_brute, nprime;
  for (long n = 1; n_a2.size() < 7; ++n)
    if (torus::size_set_member(torus::LatticeName::kA2, BigInt(n))) n_a2.push_back(n);
  for (long n = 1; n_brute.size() < 7; ++n)
    if (brute.count(n)) n_brute.push_back(n);
  for (long n = 1; nprime.size() < 7; ++n)
    if (torus::nprime_member(BigInt(n))) nprime.push_back(n);
  o.expect(n_a2 == std::vector<long>{1, 3, 4, 7, 9, 12, 13}, "N(A2) prefix differs from {1,3,4,7,9,12,13}");
  o.expect(n_brute == n_a2, "N(A2) prefix differs from exhaustive a^2+ab+b^2");
  o.expect(nprime == std::vector<long>{1, 3, 4, 9, 12, 16, 25}, "N' prefix differs from {1,3,4,9,12,16,25}");
  for (long n : nprime)
    o.expect(torus::a2_norm_orbit(BigInt(n)).orbits == 1, "a2_norm_orbit(" + std::to_string(n) + ") is not one orbit");
  auto o49 = torus::a2_norm_orbit(BigInt(49));
  o.expect(o49.orbits >= 2, "49 should split into at least two orbits");
  o.note("N(A2) and N' prefixes match; 49 has " + std::to_string(o49.orbits) + " orbits");
  return o;
}

// ---- 5: metric graphs -------------------------------------------------------------

Outcome criterion5() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  Budget b(4'000'000'000ULL);
  std::size_t cases_a = 0, cases_b = 0, families_b = 0;
  for (std::size_t v = 2; v <= 7; ++v)
    for (const auto& t : mgraph::unit_trees(v)) {
      auto grp = mgraph::isometry_group(t, b);
      if (grp.elements.size() < 2) continue;
      std::size_t m = t.edge_count();
      for (std::size_t k = 1; k <= m; ++k) {
        std::string tag = "tree v=" + std::to_string(v) + " k=" + std::to_string(k);
        auto a = mgraph::optimal_codes(t, v + k * m, b);
        ++cases_a;
        o.expect(a.certified, tag + ": LP bound not certified");
        o.expect(a.delta == Rational(1, static_cast<long>(k + 1)), tag + ": delta " + a.delta.str());
        o.expect(a.unique, tag + ": optimum at |V|+k|E| not unique");
        if (!a.families.empty()) {
          auto ck = mgraph::canonical_codes(t, k).ck_prime;
          o.expect(mgraph::code_min_distance(t, ck) == Rational(1, static_cast<long>(k + 1)), tag + ": C'_k spacing");
          o.expect(mgraph::canonical_form(grp, a.families[0].representative) == mgraph::canonical_form(grp, ck),
                   tag + ": optimum is not C'_k");
        }
        auto bb = mgraph::optimal_codes(t, (k + 1) * m, b);
        ++cases_b;
        for (const auto& f : bb.families) {
          ++families_b;
          auto au = mgraph::audit_symmetry(t, grp, f.representative);
          o.expect(au.fixing_count > 0, tag + ": an optimum at (k+1)|E| has no fixing isometry");
        }
      }
    }
  std::size_t flagged = 0, asymmetric = 0;
  for (std::size_t v = 2; v <= 7; ++v)
    for (const auto& t : mgraph::unit_trees(v)) {
      auto r = mgraph::optimal_codes(t, 2 * t.edge_count(), b);
      if (r.unique) continue;
      if (mgraph::isometry_group(t, b).elements.size() >= 2) ++flagged;
      else ++asymmetric;
    }
  double s = seconds_since(t0);
  o.expect(flagged == 3, "non-unique symmetric trees at 2m points: " + std::to_string(flagged) + " != 3");
  o.expect(s < 600, "runtime " + fmt_seconds(s) + " exceeds 10 minutes");
  o.note("(a) " + std::to_string(cases_a) + " cases; (b) " + std::to_string(families_b) + " optimal families over " +
         std::to_string(cases_b) + " cases, instance-level evidence only; (c) " + std::to_string(flagged) +
         " flagged (" + std::to_string(asymmetric) + " asymmetric tree reported separately); " + fmt_seconds(s));
  return o;
}

// ---- 6: orthotopes ------------------------------------------------------------------

Outcome criterion6() {
  Outcome o;
  Budget b(4'000'000'000ULL);
  const Rational res(1, 4);
  std::vector<RVec> boxes;
  for (long a = 1; a <= 3; ++a) boxes.push_back({Rational(a)});
  for (long a = 0; a <= 3; ++a)
    for (long c = a; c <= 3; ++c)
      if (c > 0) boxes.push_back({Rational(a), Rational(c)});
  std::size_t unicorn_checks = 0, minus_one_codes = 0;
  for (const auto& u : boxes) {
    for (long n = 2; n <= 16; ++n) {
      auto us = orthotope::is_unicorn_size(u, BigInt(n));
      if (!us.yes) continue;
      for (const auto& delta : us.deltas) {
        if (!(delta / res).is_integer()) continue;  // not representable at the oracle resolution
        auto r = orthotope::brute_force_optimal(u, static_cast<std::size_t>(n), res, b);
        std::string tag = "u=(" + u[0].str() + (u.size() > 1 ? "," + u[1].str() : "") + ") n=" + std::to_string(n);
        ++unicorn_checks;
        o.expect(r.best_delta == delta, tag + ": oracle delta " + r.best_delta.str() + " != " + delta.str());
        o.expect(r.classes.size() == 1, tag + ": " + std::to_string(r.classes.size()) + " symmetry classes");
        if (r.classes.size() == 1)
          o.expect(r.classes[0] == orthotope::canonical_class(u, orthotope::scaled_grid_code(u, delta)),
                   tag + ": optimum is not the scaled grid");
      }
    }
    if (u.size() == 2 && u[0].sign() > 0) {
      long full = (u[0].num().get_si() + 1) * (u[1].num().get_si() + 1);
      if (full - 1 > 16) continue;
      auto r = orthotope::brute_force_optimal(u, static_cast<std::size_t>(full - 1), res, b);
      o.expect(r.best_delta == Rational(1), "minus-one oracle delta " + r.best_delta.str());
      for (const auto& code : r.configurations) {
        ++minus_one_codes;
        auto d = orthotope::verify_minus_one_structure(u, code);
        o.expect(d.found, "minus-one optimum without decomposition: " + d.reason);
        o.expect(d.a_reflection_invariant, "A part not reflection invariant");
      }
    }
  }
  orthotope::BoxCode puzzle;
  for (long x = 0; x <= 3; ++x)
    for (long y = 0; y <= 3; ++y)
      if (!(x == 3 && y == 3)) puzzle.push_back({Rational(x), Rational(y)});
  auto d = orthotope::verify_minus_one_structure({Rational(3), Rational(3)}, puzzle);
  o.expect(d.found && d.a.size() == 12 && d.b.size() == 3, "15-puzzle decomposition is not 12 + 3");
  o.expect(d.a_reflection_invariant, "15-puzzle A part not reflection invariant");
  o.note(std::to_string(unicorn_checks) + " unicorn-size oracle runs, " + std::to_string(minus_one_codes) +
         " minus-one optima decomposed, 15-puzzle 12 + 3");
  return o;
}

// ---- 7: Rankin ----------------------------------------------------------------------

Outcome criterion7() {
  Outcome o;
  using Idx = std::vector<std::size_t>;
  std::vector<RVec> oct;
  for (std::size_t i = 0; i < 3; ++i) {
    RVec p(3, Rational(0)), q(3, Rational(0));
    p[i] = 1;
    q[i] = -1;
    oct.push_back(p);
    oct.push_back(q);
  }
  auto full = rankin::orthoplex_decompose(rankin::GramMatrix::from_coordinates(oct));
  o.expect(full.x0.empty() && full.parts == std::vector<Idx>{{0, 1}, {2, 3}, {4, 5}},
           "octahedron: expected three antipodal pairs and empty X0");
  auto minus_pts = oct;
  minus_pts.erase(minus_pts.begin() + 4);  // drop +e3; -e3 becomes index 4
  auto minus = rankin::orthoplex_decompose(rankin::GramMatrix::from_coordinates(minus_pts));
  o.expect(minus.x0 == Idx{4} && minus.l() == 2, "octahedron minus a vertex: X0 should be the antipode, l = 2");
  std::vector<RVec> pe = {{0, 0, 1}, {0, 0, -1}};
  // Equilateral triangle on the equator has irrational coordinates, so it is given by its Gram.
  RMatrix g(5, RVec(5, Rational(0)));
  for (std::size_t i = 0; i < 5; ++i) g[i][i] = 1;
  g[0][1] = g[1][0] = -1;
  for (std::size_t i = 2; i < 5; ++i)
    for (std::size_t j = 2; j < 5; ++j)
      if (i != j) g[i][j] = Rational(-1, 2);
  auto poles = rankin::orthoplex_decompose(rankin::GramMatrix::from_matrix(g, 3));
  o.expect(poles.x0.empty() && poles.l() == 2 && poles.parts[0].size() == 2 && poles.parts[1].size() == 3,
           "poles and equator: expected parts of sizes 2 and 3");
  std::size_t ok = 0;
  for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
    auto inst = rankin::random_direct_sum(6, seed);
    auto dec = rankin::orthoplex_decompose(inst.gram);
    bool same = dec.x0 == inst.x0 && dec.parts == inst.parts;
    ok += same;
    o.expect(inst.dimension <= 6, "instance dimension above 6");
  }
  o.expect(ok == 100, std::to_string(100 - ok) + " random direct sums not recovered");
  o.note("three types at n in {5, 6}; 100/100 random direct sums recovered");
  return o;
}

// ---- 8: Hilbert cube ------------------------------------------------------------------

std::multiset<std::string> edge_set(const seq::HilbertCode& c) {
  std::multiset<std::string> s;
  for (const auto& e : c.squared_edges) s.insert(e.str());
  return s;
}

Outcome criterion8() {
  Outcome o;
  const Rational width_cap = Rational(1) / Rational(BigInt(1) << 64);
  const PiPoly pi2_6 = PiPoly::pi_squared() / QSqrt2(Rational(6));
  const PiPoly alpha = PiPoly(QSqrt2(Rational(0), Rational(1, 3))) * PiPoly::pi();
  o.expect(seq::hilbert_alpha() == alpha, "alpha differs from sqrt(2) pi / 3");

  auto pair = seq::hilbert_pair();
  o.expect(pair.squared_edges.size() == 1 && pair.squared_edges[0] == pi2_6, "pair: squared distance is not pi^2/6");

  auto triple = seq::hilbert_triple();
  PiPoly long_edge = pi2_6 - PiPoly(Rational(3, 4));
  o.expect(edge_set(triple) == std::multiset<std::string>{PiPoly(1).str(), long_edge.str(), long_edge.str()},
           "triple: squared distances are not {1, pi^2/6 - 3/4 (x2)}");

  seq::NamedSet n({2, 3, 4}, 20);
  auto quad = seq::hilbert_quad(n);
  std::multiset<std::string> want;
  want.insert((alpha * alpha).str());
  for (int i = 0; i < 5; ++i) want.insert((alpha * alpha - alpha).str());
  auto got = edge_set(quad);
  std::string got_s;
  for (const auto& e : got) got_s += (got_s.empty() ? "" : "; ") + e;
  o.expect(got == want, "quad (conjectural): squared distances {" + got_s + "} differ from {alpha^2, (alpha^2 - alpha) x5}");
  o.expect(quad.conjectural, "quad must be labelled conjectural");

  for (const auto& e : pair.squared_edges) o.expect(e.enclose(64).width() <= width_cap, "pair enclosure wider than 2^-64");
  for (const auto& e : triple.squared_edges) o.expect(e.enclose(64).width() <= width_cap, "triple enclosure wider than 2^-64");
  // Independent numeric cross-check: partial sum of 1/k^2 plus its integral tail bounds.
  double partial = 0;
  const long kmax = 200000;
  for (long k = kmax; k >= 1; --k) partial += 1.0 / (static_cast<double>(k) * k);
  auto enc = pair.squared_edges[0].enclose(64);
  o.expect(enc.lo().to_double() <= partial + 1.0 / kmax + 1e-12 && enc.hi().to_double() >= partial + 1.0 / (kmax + 1) - 1e-12,
           "pi^2/6 enclosure inconsistent with the partial sums");

  auto x = alpha - PiPoly(1) - PiPoly(Rational(1, 4)) - PiPoly(Rational(1, 9)) - PiPoly(Rational(1, 16));
  auto g = seq::salzer_greedy(x, 20);
  o.expect(g.steps.size() == 20 && g.steps[0].a == 5, "a1 != 5 for base {2,3,4}");
  auto xp = x - PiPoly(Rational(1, 36)) - PiPoly(Rational(1, 49));
  auto gp = seq::salzer_greedy(xp, 20);
  o.expect(gp.steps.size() == 20 && gp.steps[0].a == 11, "a'1 != 11 for base {2,3,4,6,7}");
  for (const auto* r : {&g, &gp}) {
    for (std::size_t k = 0; k < r->steps.size(); ++k) {
      o.expect(r->steps[k].sandwich, "sandwich not certified at step " + std::to_string(k + 1));
      if (k > 0) o.expect(r->steps[k].a > r->steps[k - 1].a, "greedy terms not increasing");
    }
    o.expect(r->residual.width() <= width_cap, "greedy residual enclosure wider than 2^-64");
  }
  o.note("pair, triple, greedy a1 = 5, a'1 = 11, sandwich for 20 terms; quad is conjectural");
  return o;
}

// ---- 9: ultrametrics ------------------------------------------------------------------

Outcome criterion9() {
  Outcome o;
  Budget b(4'000'000'000ULL);
  std::size_t comparisons = 0, triples = 0, exchanges = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto t = ultra::random_ball_tree(seed, 12);
    auto pts = t.points();
    o.expect(pts.size() <= 12, "tree with more than 12 leaves");
    for (auto x : pts)
      for (auto y : pts)
        for (auto z : pts) {
          ++triples;
          o.expect(t.distance(x, z) <= max(t.distance(x, y), t.distance(y, z)), "strong triangle inequality fails");
        }
    for (std::size_t n = 2; n <= pts.size(); ++n) {
      auto c = ultra::optimal_code(t, n);
      Rational brute = ultra::brute_force_delta(t, n, b);
      ++comparisons;
      o.expect(c.delta == brute, "seed " + std::to_string(seed) + " n=" + std::to_string(n) + ": delta " +
                                     c.delta.str() + " != oracle " + brute.str());
      Rational realized = c.delta;
      for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t j = i + 1; j < c.points.size(); ++j) realized = min(realized, t.distance(c.points[i], c.points[j]));
      o.expect(realized == c.delta, "optimal code does not realize its delta");
      std::vector<std::size_t> alt;
      for (auto part : c.parts) alt.push_back(t.points_under(part).back());
      ++exchanges;
      o.expect(ultra::representative_exchange_isometry(t, c.points, alt), "representative exchange changes distances");
    }
  }
  o.note("200 trees, " + std::to_string(comparisons) + " oracle comparisons, " + std::to_string(triples) +
         " triples, " + std::to_string(exchanges) + " exchanges");
  return o;
}

// ---- 10: symmetry strength ---------------------------------------------------------------

bool pairwise_distinct(const audit::Space& s, const std::vector<RVec>& pts) {
  std::set<Rational> seen;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (!seen.insert(audit::metric_value(s, pts[i], pts[j])).second) return false;
  return true;
}

Outcome criterion10() {
  Outcome o;
  Budget b(2'000'000'000);
  auto plane = audit::symmetry_strength_witness(audit::Space::plane(), 20, 1, b);
  o.expect(plane.t == 2, "plane t != 2");
  o.expect(plane.upper == std::vector<RVec>{{0, 0}, {1, 0}, {0, 2}}, "plane upper witness is not {(0,0),(1,0),(0,2)}");
  o.expect(pairwise_distinct(audit::Space::plane(), plane.upper), "plane witness is not scalene");
  o.expect(plane.upper_rigid, "plane upper witness not rigid");
  o.expect(plane.lower_verified, "plane lower witnesses not verified");

  auto circle_space = audit::Space::circle(Rational(1));
  auto circle = audit::symmetry_strength_witness(circle_space, 20, 2, b);
  o.expect(circle.t == 2 && circle.upper_rigid && circle.lower_verified, "circle two-sided witness fails");
  o.expect(pairwise_distinct(circle_space, circle.upper), "circle upper witness is not scalene");
  for (const auto& torus_name : {torus::LatticeName::kA1, torus::LatticeName::kA2}) {
    auto space = audit::Space::torus_of(torus_name);
    auto w = audit::symmetry_strength_witness(space, 20, 3, b);
    std::string nm = torus::lattice_name_str(torus_name);
    o.expect(w.t == 2 && w.upper_rigid && w.lower_verified, nm + " torus two-sided witness fails");
    o.expect(pairwise_distinct(space, w.upper), nm + " torus upper witness is not scalene");
    for (const auto& l : w.lower)
      o.expect(audit::stabilizer(space, l.set, b).order() != 1, nm + " torus lower witness has trivial stabilizer");
  }
  auto interval = audit::symmetry_strength_witness(audit::Space::interval(Rational(1)), 5, 4, b);
  o.expect(interval.t == 0 && interval.upper_rigid, "interval t != 0 or witness not rigid");
  o.expect(interval.upper.size() == 1 && interval.upper[0][0] * 2 != Rational(1), "interval witness is the midpoint");
  o.note("plane t=2 with {(0,0),(1,0),(0,2)}, circle and tori t=2, interval t=0");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"E8 holy-code reproduction", criterion1},
      {"D4 reproduction", criterion2},
      {"E8 theta cross-check", criterion3},
      {"size-set and N' prefixes", criterion4},
      {"metric-graph suite", criterion5},
      {"orthotope suite", criterion6},
      {"Rankin suite", criterion7},
      {"Hilbert and l^p identities", criterion8},
      {"ultrametric property suite", criterion9},
      {"symmetry-strength witnesses", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    for (const auto& n : o.notes) std::printf(" | %s", n.c_str());
    std::printf("\n");
    std::size_t shown = 0;
    for (const auto& f : o.failures) {
      if (++shown > 10) {
        std::printf("    ... %zu more\n", o.failures.size() - 10);
        break;
      }
      std::printf("    %s\n", f.c_str());
    }
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
