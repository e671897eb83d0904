#include "repro.hpp"

#include <algorithm>
#include <map>

#include "io.hpp"
#include "unicorn/mgraph/mgraph.hpp"
#include "unicorn/seq/seq.hpp"

namespace unicorn::report {

using namespace io;

namespace {

class Checks {
 public:
  void add(const std::string& name, const Json& expected, const Json& actual, bool conjectural = false) {
    Json c = {{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", expected == actual}};
    if (conjectural) c["conjectural"] = true;
    all_ = all_ && expected == actual;
    list_.push_back(c);
  }
  Json finish(const std::string& name, Json extra = Json::object()) const {
    Json out = {{"name", name}};
    for (auto& [k, v] : extra.items()) out[k] = v;
    out["checks"] = list_;
    out["pass"] = all_;
    return out;
  }

 private:
  Json list_ = Json::array();
  bool all_ = true;
};

BigInt lcm_den(const std::vector<RVec>& pts) {
  BigInt l = 1;
  for (const auto& p : pts)
    for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  return l;
}

Json holy_suite(const std::string& name, torus::LatticeName lattice, Context& ctx) {
  auto spec = torus::build_lattice(lattice);
  Json h = holy_report(spec, ctx, false);
  Checks c;
  bool e8 = lattice == torus::LatticeName::kE8;
  c.add("deep_holes", e8 ? 2160 : 24, h["deep_holes"]);
  c.add("cosets", e8 ? 135 : 3, h["cosets"]);
  c.add("vertices", e8 ? 136 : 4, h["vertices"]);
  if (!e8) c.add("holy_graph_edges (K4)", 6, h["edges"]);
  c.add("clique_number", e8 ? 16 : 4, h["clique_number"]);
  c.add("max_cliques", e8 ? 270 : 1, h["max_cliques"]);
  c.add("orbits", 1, h["orbits"]);
  c.add("extension", true, h["extension"]);
  c.add("equidistant", true, h["equidistant"]);
  Json extra = {{"deep_holes", h["deep_holes"]},   {"cosets", h["cosets"]},
                {"clique_number", h["clique_number"]}, {"max_cliques", h["max_cliques"]},
                {"orbits", h["orbits"]},           {"extension", h["extension"]}};
  return c.finish(name, extra);
}

Json fig3(Context& ctx) {
  std::size_t symmetric = 0;
  Json flagged = Json::array(), asymmetric = Json::array();
  bool fixing_ok = true;
  for (std::size_t v = 2; v <= 7; ++v)
    for (const auto& t : mgraph::unit_trees(v)) {
      auto grp = mgraph::isometry_group(t, ctx.budget);
      auto r = mgraph::optimal_codes(t, 2 * t.edge_count(), ctx.budget);
      if (r.unique) continue;
      Json entry = {{"graph", graph_json(t)}, {"n", 2 * t.edge_count()}, {"delta", r.delta.str()},
                    {"families", r.families.size()}};
      if (grp.elements.size() < 2) {
        asymmetric.push_back(entry);
        continue;
      }
      for (const auto& f : r.families)
        fixing_ok = fixing_ok && mgraph::audit_symmetry(t, grp, f.representative).fixing_count > 0;
      flagged.push_back(entry);
    }
  for (std::size_t v = 2; v <= 7; ++v)
    for (const auto& t : mgraph::unit_trees(v)) symmetric += mgraph::isometry_group(t, ctx.budget).elements.size() >= 2;
  Checks c;
  c.add("non-unique trees with a nontrivial group", 3, flagged.size());
  c.add("every flagged optimum has a fixing isometry", true, fixing_ok);
  return c.finish("fig3", {{"symmetric_trees", symmetric},
                           {"flagged", flagged},
                           {"asymmetric_non_unique", asymmetric},
                           {"evidence", "instance-level"}});
}

Json loeschian_suite(Context& ctx) {
  std::vector<unsigned long> n_a2, nprime;
  for (unsigned long n = 1; n_a2.size() < 7; ++n) {
    ctx.budget.charge();
    if (torus::size_set_member(torus::LatticeName::kA2, BigInt(n))) n_a2.push_back(n);
  }
  for (unsigned long n = 1; nprime.size() < 7; ++n)
    if (torus::nprime_member(BigInt(n))) nprime.push_back(n);
  Checks c;
  c.add("N(A2) first 7", Json({1, 3, 4, 7, 9, 12, 13}), n_a2);
  c.add("N' first 7", Json({1, 3, 4, 9, 12, 16, 25}), nprime);
  for (auto n : nprime)
    c.add("a2_norm_orbit(" + std::to_string(n) + ") orbits", 1, torus::a2_norm_orbit(BigInt(n)).orbits);
  c.add("a2_norm_orbit(49) has at least 2 orbits", true, torus::a2_norm_orbit(BigInt(49)).orbits >= 2);
  return c.finish("loeschian");
}

std::vector<std::string> edge_strings(const seq::HilbertCode& code) {
  std::vector<std::string> out;
  for (const auto& e : code.squared_edges) out.push_back(e.str());
  std::sort(out.begin(), out.end());
  return out;
}

Json hilbert_suite(Context& ctx) {
  const PiPoly pi2_6 = PiPoly::pi_squared() / QSqrt2(Rational(6));
  const PiPoly alpha = seq::hilbert_alpha();
  Checks c;
  auto pair = seq::hilbert_pair();
  c.add("pair squared distance", pi2_6.str(), pair.squared_edges.at(0).str());

  auto triple = seq::hilbert_triple();
  std::vector<std::string> want3 = {PiPoly(1).str(), (pi2_6 - PiPoly(Rational(3, 4))).str(),
                                    (pi2_6 - PiPoly(Rational(3, 4))).str()};
  std::sort(want3.begin(), want3.end());
  c.add("triple squared distances", want3, edge_strings(triple));

  seq::NamedSet n({2, 3, 4}, 20, ctx.options.precision_bits);
  auto quad = seq::hilbert_quad(n);
  std::vector<std::string> want4 = {(alpha * alpha).str()};
  for (int i = 0; i < 5; ++i) want4.push_back((alpha * alpha - alpha).str());
  std::sort(want4.begin(), want4.end());
  c.add("quad squared distances", want4, edge_strings(quad), true);

  auto x = alpha - PiPoly(1) - PiPoly(Rational(61, 144));
  auto g = seq::salzer_greedy(x, 20, ctx.options.precision_bits);
  c.add("a1 for base {2,3,4}", 5, big_json(g.steps.at(0).a));
  bool sandwich = std::all_of(g.steps.begin(), g.steps.end(), [](const auto& s) { return s.sandwich; });
  c.add("sandwich certified for 20 terms", true, sandwich);
  c.add("residual width at most 2^-64", true, g.residual.width() <= Rational(1) / Rational(BigInt(1) << 64));
  auto xp = x - PiPoly(Rational(1, 36)) - PiPoly(Rational(1, 49));
  auto gp = seq::salzer_greedy(xp, 20, ctx.options.precision_bits);
  c.add("a'1 for base {2,3,4,6,7}", 11, big_json(gp.steps.at(0).a));
  bool sandwich_p = std::all_of(gp.steps.begin(), gp.steps.end(), [](const auto& s) { return s.sandwich; });
  c.add("sandwich certified for 20 terms (second base)", true, sandwich_p);
  return c.finish("hilbert", {{"quad_conjectural", quad.conjectural}});
}

Json orthoplex_suite() {
  Checks c;
  auto oct = rankin::orthoplex_decompose(rankin::GramMatrix::from_coordinates(rankin::orthoplex_vertices(3)));
  c.add("octahedron type", "orthoplex", decomposition_type(oct));
  c.add("octahedron parts", 3, oct.l());

  auto pts = rankin::orthoplex_vertices(3);
  pts.erase(pts.begin() + 4);
  auto minus = rankin::orthoplex_decompose(rankin::GramMatrix::from_coordinates(pts));
  c.add("octahedron minus a vertex type", "orthoplex-with-leftover", decomposition_type(minus));
  c.add("octahedron minus a vertex leftover", Json({4}), minus.x0);

  RMatrix m(5, RVec(5));
  for (std::size_t i = 0; i < 5; ++i) m[i][i] = 1;
  m[0][1] = m[1][0] = -1;
  for (std::size_t i = 2; i < 5; ++i)
    for (std::size_t j = 2; j < 5; ++j)
      if (i != j) m[i][j] = Rational(-1, 2);
  auto pe = rankin::orthoplex_decompose(rankin::GramMatrix::from_matrix(m, 3));
  c.add("poles and equator type", "mixed-simplices", decomposition_type(pe));
  c.add("poles and equator part sizes", Json({2, 3}), Json({pe.parts.at(0).size(), pe.parts.at(1).size()}));

  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = rankin::random_direct_sum(6, seed);
    auto dec = rankin::orthoplex_decompose(inst.gram);
    ok += dec.x0 == inst.x0 && dec.parts == inst.parts;
  }
  c.add("random direct sums recovered", 100, ok);
  return c.finish("orthoplex");
}

}  // namespace

Json holy_report(const torus::LatticeSpec& spec, Context& ctx, bool include_cliques) {
  auto g = torus::holy_graph(spec);
  auto cl = torus::max_cliques(g, ctx.budget);
  bool ext = torus::minus_one_extension(g, ctx.budget);
  auto orb = torus::clique_orbit(spec, g, cl.cliques);
  bool equi = true;
  for (const auto& k : cl.cliques) equi = equi && torus::clique_is_equidistant(spec, g, k);
  BigInt scale = lcm_den(g.reps);
  Json reps = Json::array();
  for (const auto& r : g.reps) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(big_json((x * Rational(scale)).num()));
    reps.push_back(row);
  }
  Json out = {{"lattice", torus::lattice_name_str(spec.name)},
              {"deep_holes", g.deep_holes},
              {"cosets", g.reps.size() - 1},
              {"vertices", g.reps.size()},
              {"edges", g.graph.edge_count()},
              {"clique_number", cl.clique_number},
              {"max_cliques", cl.cliques.size()},
              {"extension", ext},
              {"orbits", orb.orbits.size()},
              {"reflections", orb.reflections},
              {"equidistant", equi},
              {"coset_scale", big_json(scale)},
              {"coset_reps", reps}};
  if (include_cliques) out["cliques"] = index_lists(cl.cliques);
  return out;
}

std::vector<std::string> repro_names() { return {"e8-holy", "d4-holy", "fig3", "loeschian", "hilbert", "orthoplex"}; }

Json run_repro(const std::string& name, Context& ctx) {
  if (name == "e8-holy") return holy_suite(name, torus::LatticeName::kE8, ctx);
  if (name == "d4-holy") return holy_suite(name, torus::LatticeName::kD4, ctx);
  if (name == "fig3") return fig3(ctx);
  if (name == "loeschian") return loeschian_suite(ctx);
  if (name == "hilbert") return hilbert_suite(ctx);
  if (name == "orthoplex") return orthoplex_suite();
  invalid("/name", "unknown suite \"" + name + "\"");
}

}  // namespace unicorn::report
