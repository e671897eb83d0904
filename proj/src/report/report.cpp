#include "unicorn/report/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "io.hpp"
#include "repro.hpp"
#include "unicorn/orthotope/orthotope.hpp"
#include "unicorn/rankin/rankin.hpp"
#include "unicorn/torus/torus.hpp"
#include "unicorn/tree/tree_unicorn.hpp"

namespace unicorn::report {

using namespace io;

namespace {

using Handler = std::function<Json(const Json&, Context&)>;

// ---- rankin -------------------------------------------------------------------

rankin::GramMatrix read_gram(const Json& req, std::optional<std::size_t> d) {
  if (const Json* g = optional(req, "gram")) {
    RMatrix m = to_matrix(*g, "/gram");
    try {
      return rankin::GramMatrix::from_matrix(m, d);
    } catch (const Error& e) {
      invalid("/gram", e.what());
    }
  }
  if (const Json* p = optional(req, "points")) {
    RMatrix pts = to_matrix(*p, "/points");
    try {
      return rankin::GramMatrix::from_coordinates(pts);
    } catch (const Error& e) {
      invalid("/points", e.what());
    }
  }
  invalid("/gram", "missing required field (or give /points)");
}

Json rankin_check(const Json& req, Context&) {
  std::size_t d = to_size(require(req, "", "d"), "/d", 1, 1000);
  auto gram = read_gram(req, d);
  auto r = rankin::check_rankin(gram, d);
  return {{"n", r.n},
          {"d", r.d},
          {"rank", gram.rank()},
          {"max_offdiag", r.max_offdiag.str()},
          {"simplex_bound", r.simplex_bound.str()},
          {"simplex_ok", r.simplex_ok},
          {"simplex_equality", r.simplex_equality},
          {"orthoplex_applies", r.orthoplex_applies},
          {"orthoplex_ok", r.orthoplex_ok},
          {"orthoplex_equality", r.orthoplex_equality}};
}

Json rankin_decompose(const Json& req, Context&) {
  std::optional<std::size_t> d;
  if (const Json* v = optional(req, "d")) d = to_size(*v, "/d", 1, 1000);
  auto gram = read_gram(req, d);
  auto dec = rankin::orthoplex_decompose(gram);
  return {{"n", gram.size()},
          {"rank", dec.rank},
          {"x0", dec.x0},
          {"parts", index_lists(dec.parts)},
          {"l", dec.l()},
          {"type", decomposition_type(dec)}};
}

// ---- orthotope ------------------------------------------------------------------

RVec read_box(const Json& req) {
  RVec u = to_vec(require(req, "", "u"), "/u");
  if (u.empty()) invalid("/u", "the box needs at least one side");
  try {
    orthotope::validate_box(u, false);
  } catch (const Error& e) {
    invalid("/u", e.what());
  }
  return u;
}

Json orthotope_grid(const Json& req, Context&) {
  RVec u = read_box(req);
  Rational delta = rational_or(req, "delta", Rational(1));
  if (delta.sign() <= 0) invalid("/delta", "delta must be positive");
  auto code = delta == Rational(1) ? orthotope::grid_code(u) : orthotope::scaled_grid_code(u, delta);
  Json out = {{"u", vec_json(u)}, {"delta", delta.str()}, {"size", code.size()}};
  out["min_distance"] = code.size() >= 2 ? Json(orthotope::min_distance(code).str()) : Json(nullptr);
  out["code"] = code_json(code);
  return out;
}

Json orthotope_size(const Json& req, Context&) {
  RVec u = read_box(req);
  BigInt n = to_bigint(require(req, "", "n"), "/n");
  auto r = orthotope::is_unicorn_size(u, n);
  Json deltas = Json::array();
  for (const auto& d : r.deltas) deltas.push_back(d.str());
  return {{"u", vec_json(u)}, {"n", big_json(n)}, {"unicorn_size", r.yes}, {"deltas", deltas}, {"reason", r.reason}};
}

Json orthotope_minus_one(const Json& req, Context&) {
  RVec u = read_box(req);
  auto code = to_matrix(require(req, "", "code"), "/code");
  for (std::size_t i = 0; i < code.size(); ++i)
    if (code[i].size() != u.size()) invalid(child("/code", i), "point dimension differs from the box");
  auto dec = orthotope::verify_minus_one_structure(u, code);
  Json out = {{"u", vec_json(u)}, {"size", code.size()}, {"found", dec.found}};
  if (dec.found) {
    out["axis"] = dec.axis;
    out["anchor"] = vec_json(dec.anchor);
    out["a"] = code_json(dec.a);
    out["b"] = code_json(dec.b);
    out["a_reflection_invariant"] = dec.a_reflection_invariant;
  }
  out["reason"] = dec.reason;
  out["code"] = code_json(code);
  return out;
}

Json orthotope_oracle(const Json& req, Context& ctx) {
  RVec u = read_box(req);
  if (u.size() > 2) invalid("/u", "the oracle handles at most two dimensions");
  std::size_t n = to_size(require(req, "", "n"), "/n", 2, 16);
  Rational res = rational_or(req, "resolution", Rational(1, 4));
  if (res.sign() <= 0) invalid("/resolution", "resolution must be positive");
  auto r = orthotope::brute_force_optimal(u, n, res, ctx.budget);
  Json classes = Json::array();
  for (const auto& c : r.classes) classes.push_back(code_json(c));
  auto size = orthotope::is_unicorn_size(u, BigInt(static_cast<unsigned long>(n)));
  return {{"u", vec_json(u)},
          {"n", n},
          {"resolution", res.str()},
          {"best_delta", r.best_delta.str()},
          {"configurations", r.configurations.size()},
          {"classes", classes},
          {"unique_up_to_symmetry", r.classes.size() == 1},
          {"unicorn_size", size.yes},
          {"nodes", r.nodes}};
}

// ---- torus ------------------------------------------------------------------------

torus::LatticeSpec read_lattice(const Json& req) {
  std::string name = to_string(require(req, "", "lattice"), "/lattice");
  try {
    return torus::build_lattice(torus::parse_lattice_name(name));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kUnsupported) throw;
    invalid("/lattice", e.what());
  }
}

Json torus_holy(const Json& req, Context& ctx) {
  auto spec = read_lattice(req);
  return holy_report(spec, ctx, !optional(req, "cliques") || to_bool(req["cliques"], "/cliques"));
}

Json torus_code(const Json& req, Context&) {
  auto spec = read_lattice(req);
  RVec v = to_vec(require(req, "", "v"), "/v");
  if (v.size() != spec.ambient_dim)
    invalid("/v", "expected " + std::to_string(spec.ambient_dim) + " coordinates");
  if (!torus::in_lattice(spec, v)) invalid("/v", "not a lattice vector");
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); }))
    invalid("/v", "the lattice vector must be nonzero");
  auto c = torus::lattice_code(spec, v);
  return {{"lattice", torus::lattice_name_str(spec.name)},
          {"v", vec_json(v)},
          {"scale_sq", c.scale_sq.str()},
          {"size", c.points.size()},
          {"min_distance_sq", c.min_distance_sq.str()},
          {"multiplier", code_json(c.multiplier)},
          {"code", code_json(c.points)}};
}

Json torus_sizes(const Json& req, Context& ctx) {
  auto spec = read_lattice(req);
  std::size_t count = size_or(req, "count", 7, 1, 200);
  Json members = Json::array();
  for (unsigned long n = 1; members.size() < count; ++n) {
    ctx.budget.charge();
    if (torus::size_set_member(spec.name, BigInt(n))) members.push_back(n);
  }
  Json out = {{"lattice", torus::lattice_name_str(spec.name)}, {"members", members}};
  if (spec.name == torus::LatticeName::kA2) {
    Json nprime = Json::array();
    for (unsigned long n = 1; nprime.size() < count; ++n) {
      ctx.budget.charge();
      if (!torus::nprime_member(BigInt(n))) continue;
      auto o = torus::a2_norm_orbit(BigInt(n));
      nprime.push_back({{"n", n}, {"elements", o.elements}, {"orbits", o.orbits}});
    }
    out["nprime"] = nprime;
  }
  return out;
}

Json torus_theta(const Json& req, Context&) {
  std::size_t max_k = size_or(req, "max_k", 4, 1, 6);
  Json rows = Json::array();
  for (std::size_t k = 1; k <= max_k; ++k) {
    BigInt f = torus::theta_count_e8(BigInt(static_cast<unsigned long>(k)));
    BigInt e = torus::theta_count_e8_enumerated(static_cast<long>(k));
    rows.push_back({{"k", k}, {"formula", big_json(f)}, {"enumerated", big_json(e)}, {"agree", f == e}});
  }
  return {{"lattice", "E8"}, {"rows", rows}};
}

Json torus_orbits(const Json& req, Context& ctx) {
  auto spec = read_lattice(req);
  std::size_t steps = size_or(req, "steps", 2000, 1, 10'000'000);
  auto g = torus::holy_graph(spec);
  auto cl = torus::max_cliques(g, ctx.budget);
  auto bfs = torus::clique_orbit(spec, g, cl.cliques);
  auto walk = torus::random_walk_orbit(spec, g, cl.cliques, ctx.options.seed, steps);
  return {{"lattice", torus::lattice_name_str(spec.name)},
          {"max_cliques", cl.cliques.size()},
          {"bfs_orbits", bfs.orbits.size()},
          {"walk",
           {{"seed", ctx.options.seed},
            {"steps", walk.steps},
            {"distinct_visited", walk.distinct_visited},
            {"first_full_cover", walk.first_full_cover}}}};
}

// ---- metric graphs -------------------------------------------------------------------

Json family_json(const mgraph::MetricGraph& g, const mgraph::CodeFamily& f) {
  auto wg = mgraph::work_graph(g);
  auto model = mgraph::build_lp(wg.graph, f.t);
  Json vars = Json::array();
  for (std::size_t i = 0; i < f.d_min.size(); ++i) {
    Json v = {{"name", i < model.names.size() ? model.names[i] : "x" + std::to_string(i)},
              {"min", f.d_min[i].str()},
              {"max", f.d_max[i].str()}};
    v["free"] = f.d_min[i] != f.d_max[i];
    vars.push_back(v);
  }
  Json extremes = Json::array();
  for (const auto& c : f.extremes) extremes.push_back(graph_code_json(c));
  return {{"points_per_edge", f.t},
          {"single_code", f.single},
          {"rattle_edges", f.rattle_edges},
          {"variables", vars},
          {"representative", graph_code_json(f.representative)},
          {"extremes", extremes}};
}

Json mgraph_solve(const Json& req, Context& ctx) {
  auto g = to_graph(require(req, "", "graph"), "/graph");
  std::size_t n = to_size(require(req, "", "n"), "/n", 2, 200);
  mgraph::SearchOptions opt;
  opt.seed = ctx.options.seed;
  auto r = mgraph::optimal_codes(g, n, ctx.budget, opt);
  Json fams = Json::array();
  for (const auto& f : r.families) fams.push_back(family_json(g, f));
  Json out = {{"graph", graph_json(g)},
              {"n", n},
              {"delta", r.delta.str()},
              {"certified", r.certified},
              {"cycle", r.cycle},
              {"lower_bound", r.lower_bound.str()},
              {"assignments", r.assignments},
              {"unique", r.unique},
              {"isometry_classes", r.isometry_classes},
              {"families", fams}};
  out["code"] = r.families.empty() ? Json::array() : graph_code_json(r.families.front().representative);
  return out;
}

Json mgraph_canonical(const Json& req, Context&) {
  auto g = to_graph(require(req, "", "graph"), "/graph");
  if (!g.unit_weights()) invalid("/graph", "canonical codes need unit edge lengths");
  std::size_t k = to_size(require(req, "", "k"), "/k", 1, 1000);
  auto c = mgraph::canonical_codes(g, k);
  return {{"graph", graph_json(g)},
          {"k", k},
          {"ck", {{"size", c.ck.size()},
                  {"delta", c.ck_delta.str()},
                  {"unique", mgraph::uniqueness_verdict(g, mgraph::Family::kCk, k)},
                  {"code", graph_code_json(c.ck)}}},
          {"ck_prime", {{"size", c.ck_prime.size()},
                        {"delta", c.ck_prime_delta.str()},
                        {"unique", mgraph::uniqueness_verdict(g, mgraph::Family::kCkPrime, k)},
                        {"code", graph_code_json(c.ck_prime)}}}};
}

Json isometry_json(const mgraph::Isometry& iso) {
  Json edges = Json::array();
  for (const auto& e : iso.edge) edges.push_back({{"edge", e.edge}, {"reversed", e.reversed}});
  return {{"vertices", iso.vertex}, {"edges", edges}};
}

Json mgraph_group(const Json& req, Context& ctx) {
  auto g = to_graph(require(req, "", "graph"), "/graph");
  auto grp = mgraph::isometry_group(g, ctx.budget);
  Json gens = Json::array();
  for (const auto& x : grp.generators) gens.push_back(isometry_json(x));
  Json out = {{"graph", graph_json(g)},
              {"tree", g.is_tree()},
              {"cycle", grp.cycle},
              {"smoothed", graph_json(grp.smoothed.graph)}};
  if (grp.cycle) {
    out["order"] = nullptr;
    out["cycle_length"] = grp.cycle_length.str();
  } else {
    out["order"] = grp.elements.size();
  }
  out["generators"] = gens;
  if (const Json* c = optional(req, "code")) {
    auto code = to_graph_code(*c, "/code");
    for (const auto& p : code) mgraph::validate_point(g, p);
    auto a = mgraph::audit_symmetry(g, grp, code);
    out["code_audit"] = {{"fixing", a.fixing_count}, {"max_overlap", a.max_overlap}};
  }
  return out;
}

// ---- metric trees ---------------------------------------------------------------------

tree::MetricTree read_tree(const Json& req) {
  const char* key = optional(req, "tree") ? "tree" : "graph";
  auto g = to_graph(require(req, "", key), std::string("/") + key);
  if (!g.is_tree()) invalid(std::string("/") + key, "not a tree");
  try {
    return tree::metric_tree(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kValidation) throw;
    invalid(std::string("/") + key, e.what());
  }
}

Json tree_scan(const Json& req, Context& ctx) {
  auto t = read_tree(req);
  std::size_t max_k = size_or(req, "max_k", 100, 1, 100000);
  auto s = tree::enumerate_deltas(t, max_k, ctx.budget);
  Json deltas = Json::array(), bases = Json::array();
  for (const auto& d : s.deltas) deltas.push_back(d.str());
  for (const auto& b : s.bases) bases.push_back(b.str());
  return {{"graph", graph_json(t.original)},
          {"smoothed", graph_json(t.graph())},
          {"junctions", t.junctions},
          {"leaves", t.leaves},
          {"max_k", max_k},
          {"shapes", s.shapes},
          {"bases", bases},
          {"deltas", deltas}};
}

Json tree_code(const Json& req, Context&) {
  auto t = read_tree(req);
  Rational delta = to_rational(require(req, "", "delta"), "/delta");
  if (delta.sign() <= 0) invalid("/delta", "delta must be positive");
  auto w = tree::check_delta(t, delta);
  Json out = {{"graph", graph_json(t.original)}, {"delta", delta.str()}, {"admissible", w.has_value()}};
  if (!w) {
    out["code"] = Json::array();
    return out;
  }
  out["witness"] = {{"junctions", w->junction}, {"f", w->f}, {"g", index_lists(w->g)}};
  auto code = tree::build_unique_code(t, delta, *w);
  out["size"] = code.size();
  out["min_distance"] = code.size() >= 2 ? Json(mgraph::code_min_distance(t.original, code).str()) : Json(nullptr);
  out["code"] = graph_code_json(code);
  return out;
}

// ---- ultrametric ---------------------------------------------------------------------

std::string point_name(const ultra::BallTree& t, std::size_t id) {
  const auto& l = t.node(id).label;
  return l.empty() ? "#" + std::to_string(id) : l;
}

Json ultra_optimal(const Json& req, Context& ctx) {
  ultra::BallTree t = optional(req, "dyadic_depth")
                          ? ultra::dyadic_tree(to_size(req["dyadic_depth"], "/dyadic_depth", 1, 16))
                          : to_ball_tree(require(req, "", "tree"), "/tree");
  std::size_t n = to_size(require(req, "", "n"), "/n", 2, 100000);
  if (n > t.points().size()) invalid("/n", "more points requested than the space has");
  auto c = ultra::optimal_code(t, n);
  Json pts = Json::array(), parts = Json::array();
  for (auto p : c.points) pts.push_back(point_name(t, p));
  for (auto p : c.parts) parts.push_back({{"node", p}, {"diam", t.node(p).diam.str()}});
  Json out = {{"points_in_space", t.points().size()}, {"n", n}, {"delta", c.delta.str()}, {"parts", parts}};
  if (optional(req, "verify") && to_bool(req["verify"], "/verify")) {
    Rational b = ultra::brute_force_delta(t, n, ctx.budget);
    out["oracle_delta"] = b.str();
    out["oracle_agrees"] = b == c.delta;
  }
  out["code"] = pts;
  return out;
}

// ---- Hilbert cube and sequences --------------------------------------------------------

Json hilbert_code_json(const seq::HilbertCode& c) {
  Json pts = Json::array(), edges = Json::array();
  for (const auto& p : c.points) pts.push_back(hilbert_point_json(p));
  std::size_t k = 0;
  for (std::size_t i = 0; i < c.points.size(); ++i)
    for (std::size_t j = i + 1; j < c.points.size(); ++j)
      edges.push_back({{"pair", {i, j}}, {"squared_distance", pipoly_json(c.squared_edges.at(k++))}});
  return {{"conjectural", c.conjectural}, {"size", c.points.size()}, {"points", pts}, {"squared_edges", edges}};
}

Json hilbert_pair(const Json&, Context&) { return hilbert_code_json(seq::hilbert_pair()); }
Json hilbert_triple(const Json&, Context&) { return hilbert_code_json(seq::hilbert_triple()); }

std::vector<unsigned long> read_base(const Json& req) {
  std::vector<unsigned long> base;
  const Json* b = optional(req, "base");
  if (!b) return {2, 3, 4};
  if (!b->is_array()) invalid("/base", "expected an array of indices");
  for (std::size_t i = 0; i < b->size(); ++i) base.push_back(to_size((*b)[i], child("/base", i), 2, 1000000));
  return base;
}

Json hilbert_quad(const Json& req, Context& ctx) {
  auto base = read_base(req);
  std::size_t terms = size_or(req, "terms", 20, 1, 40);
  seq::NamedSet n(base, terms, ctx.options.precision_bits);
  Json greedy = Json::array();
  for (const auto& a : n.greedy_terms()) greedy.push_back(big_json(a));
  Json out = hilbert_code_json(seq::hilbert_quad(n));
  out["index_set"] = {{"base", base}, {"greedy_terms", greedy}, {"residual", interval_json(n.residual())}};
  out["alpha"] = pipoly_json(seq::hilbert_alpha());
  return out;
}

Json hilbert_lp(const Json& req, Context&) {
  seq::LpSpaceSpec s;
  s.p = to_size(require(req, "", "p"), "/p", 1, 64);
  if (const Json* l = optional(req, "listed")) {
    if (!l->is_array()) invalid("/listed", "expected an array of indices");
    for (std::size_t i = 0; i < l->size(); ++i) s.listed.insert(to_size((*l)[i], child("/listed", i), 1, 1000000));
  }
  s.cutoff = size_or(req, "cutoff", s.listed.empty() ? 0 : *s.listed.rbegin(), 0, 1000000);
  if (const Json* t = optional(req, "tail_in_n")) s.tail_in_n = to_bool(*t, "/tail_in_n");
  try {
    s.validate();
  } catch (const Error& e) {
    invalid("/listed", e.what());
  }
  std::size_t n = to_size(require(req, "", "n"), "/n", 2, 10000);
  auto c = seq::lp_optimal_code(s, n);
  auto ex = seq::lp_exchange_suboptimality(s, c.points);
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back({{"k", p.k}, {"sign", p.sign}});
  return {{"p", s.p}, {"n", n}, {"delta_p", c.delta_p.str()}, {"exchange_certificate", ex.optimal}, {"code", pts}};
}

Json hilbert_search(const Json& req, Context& ctx) {
  std::size_t dims = to_size(require(req, "", "dims"), "/dims", 1, 8);
  std::size_t n = to_size(require(req, "", "n"), "/n", 2, 6);
  std::size_t restarts = size_or(req, "restarts", 20, 1, 10000);
  auto r = seq::truncated_hilbert_search(dims, n, restarts, ctx.options.seed);
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(p);
  return {{"dims", dims}, {"n", n}, {"restarts", restarts}, {"seed", ctx.options.seed}, {"numerical", true},
          {"delta_sq", r.delta_sq}, {"code", pts}};
}

Json salzer(const Json& req, Context& ctx) {
  std::string text = to_string(require(req, "", "target"), "/target");
  PiPoly x;
  try {
    x = parse_target(text);
  } catch (const Error& e) {
    invalid("/target", e.what());
  }
  std::size_t count = size_or(req, "terms", 10, 1, 40);
  auto r = seq::salzer_greedy(x, count, ctx.options.precision_bits);
  Json steps = Json::array();
  bool all = true;
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    steps.push_back({{"k", k + 1}, {"a", big_json(r.steps[k].a)}, {"sandwich", r.steps[k].sandwich}});
    all = all && r.steps[k].sandwich;
  }
  return {{"target", text},
          {"x", pipoly_json(x)},
          {"terms", count},
          {"steps", steps},
          {"sandwich_all", all},
          {"residual", interval_json(r.residual)},
          {"bits_used", r.bits_used}};
}

// ---- audit ------------------------------------------------------------------------------

Json audit_report_json(const audit::AuditReport& r) {
  Json out = {{"space", r.space}, {"code_size", r.code_size}};
  out["stabilizer_order"] = r.stabilizer_order == 0 ? Json(nullptr) : Json(r.stabilizer_order);
  out["stabilizer_infinite"] = r.stabilizer_order == 0;
  out["generators"] = r.generators;
  out["max_overlap"] = r.max_overlap;
  out["overlap_restricted"] = r.overlap_restricted;
  bool sphere = r.space == "sphere";
  out["strength"] = sphere ? Json(nullptr) : Json(r.strength);
  out["conjecture1_holds"] = r.conjecture1_holds;
  out["conjecture2_margin"] = sphere ? Json(nullptr) : Json(r.conjecture2_margin);
  out["conjecture2_holds"] = sphere ? Json(nullptr) : Json(r.conjecture2_margin > 0);
  out["evidence"] = "instance-level";
  return out;
}

Json audit_code(const Json& req, Context& ctx) {
  auto space = to_space(require(req, "", "space"), "/space");
  const Json& c = require(req, "", "code");
  if (space.kind == audit::SpaceKind::kMetricTree) {
    auto code = to_graph_code(c, "/code");
    for (std::size_t i = 0; i < code.size(); ++i) {
      try {
        mgraph::validate_point(*space.graph, code[i]);
      } catch (const Error& e) {
        invalid(child("/code", i), e.what());
      }
    }
    Json out = audit_report_json(audit::audit_code(space, code, ctx.budget));
    out["code"] = graph_code_json(code);
    return out;
  }
  if (!c.is_array()) invalid("/code", "expected an array of points");
  std::vector<RVec> code;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::string p = child("/code", i);
    RVec x = c[i].is_array() ? to_vec(c[i], p) : RVec{to_rational(c[i], p)};
    try {
      space.validate_point(x);
    } catch (const Error& e) {
      invalid(p, e.what());
    }
    code.push_back(x);
  }
  Json out = audit_report_json(audit::audit_code(space, code, ctx.budget));
  out["code"] = code_json(code);
  return out;
}

Json audit_strength(const Json& req, Context& ctx) {
  auto space = to_space(require(req, "", "space"), "/space");
  std::size_t samples = size_or(req, "samples", 8, 1, 10000);
  auto w = audit::symmetry_strength_witness(space, samples, ctx.options.seed, ctx.budget);
  Json lower = Json::array();
  for (const auto& l : w.lower) {
    Json set = space.kind == audit::SpaceKind::kMetricTree ? graph_code_json(l.graph_set) : code_json(l.set);
    lower.push_back({{"set", set}, {"symmetry", l.symmetry}, {"verified", l.verified}});
  }
  Json upper = space.kind == audit::SpaceKind::kMetricTree ? graph_code_json(w.graph_upper) : code_json(w.upper);
  return {{"space", audit::space_kind_name(space.kind)},
          {"t", w.t},
          {"lower", lower},
          {"lower_verified", w.lower_verified},
          {"upper", upper},
          {"upper_rigid", w.upper_rigid}};
}

Json repro(const Json& req, Context& ctx) {
  return run_repro(to_string(require(req, "", "name"), "/name"), ctx);
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"rankin.check", rankin_check},
      {"rankin.decompose", rankin_decompose},
      {"orthotope.grid", orthotope_grid},
      {"orthotope.size", orthotope_size},
      {"orthotope.minus-one", orthotope_minus_one},
      {"orthotope.oracle", orthotope_oracle},
      {"torus.holy", torus_holy},
      {"torus.code", torus_code},
      {"torus.sizes", torus_sizes},
      {"torus.theta", torus_theta},
      {"torus.orbits", torus_orbits},
      {"mgraph.solve", mgraph_solve},
      {"mgraph.canonical", mgraph_canonical},
      {"mgraph.group", mgraph_group},
      {"tree.scan", tree_scan},
      {"tree.code", tree_code},
      {"ultra.optimal", ultra_optimal},
      {"hilbert.pair", hilbert_pair},
      {"hilbert.triple", hilbert_triple},
      {"hilbert.quad", hilbert_quad},
      {"hilbert.lp", hilbert_lp},
      {"hilbert.search", hilbert_search},
      {"salzer", salzer},
      {"audit.code", audit_code},
      {"audit.strength", audit_strength},
      {"repro", repro},
  };
  return table;
}

// ---- CSV --------------------------------------------------------------------------------

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string decomposition_type(const rankin::OrthoplexDecomposition& dec) {
  bool pairs = std::all_of(dec.parts.begin(), dec.parts.end(), [](const auto& p) { return p.size() == 2; });
  if (pairs && dec.x0.empty()) return "orthoplex";
  if (pairs) return "orthoplex-with-leftover";
  return "mixed-simplices";
}

std::vector<std::string> commands() {
  std::vector<std::string> out;
  for (const auto& [k, v] : handlers()) out.push_back(k);
  return out;
}

Json run(const std::string& command, const Json& request, const Options& options) {
  auto it = handlers().find(command);
  if (it == handlers().end()) raise(ErrorKind::kValidation, "unknown command \"" + command + "\"");
  if (!request.is_object()) invalid("", "the request must be a JSON object");
  Context ctx{options, Budget(options.budget)};
  Json body = it->second(request, ctx);
  Json out = {{"command", command}, {"schema_version", 1}};
  for (auto& [k, v] : body.items()) out[k] = v;
  out["budget"] = {{"cap", options.budget}, {"used", ctx.budget.used()}};
  out["precision_bits"] = options.precision_bits;
  out["seed"] = options.seed;
  return out;
}

std::string to_csv(const Json& report) {
  std::ostringstream os;
  const Json* code = nullptr;
  if (report.is_object()) {
    auto it = report.find("code");
    if (it != report.end() && it->is_array() && !it->empty()) code = &*it;
  }
  if (code) {
    const Json& first = (*code)[0];
    if (first.is_array()) {
      for (std::size_t i = 0; i < first.size(); ++i) os << (i ? "," : "") << "x" << i;
      os << "\n";
      for (const auto& row : *code) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << "\n";
      }
    } else if (first.is_object()) {
      std::vector<std::string> keys;
      for (auto& [k, v] : first.items()) keys.push_back(k);
      for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
      os << "\n";
      for (const auto& row : *code) {
        for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_cell(row.value(keys[i], Json()));
        os << "\n";
      }
    } else {
      os << "x\n";
      for (const auto& v : *code) os << csv_cell(v) << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  if (report.is_object())
    for (auto& [k, v] : report.items())
      if (!v.is_structured()) os << csv_cell(k) << "," << csv_cell(v) << "\n";
  return os.str();
}

}  // namespace unicorn::report
