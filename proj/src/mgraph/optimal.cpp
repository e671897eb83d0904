#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "unicorn/graph/cliques.hpp"
#include "unicorn/mgraph/mgraph.hpp"

namespace unicorn::mgraph {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

GraphPoint WorkGraph::map(const GraphPoint& p) const {
  const EdgeImage& im = to_original.at(p.edge);
  return {im.edge, im.reversed ? im.start - p.offset : im.start + p.offset};
}

WorkGraph work_graph(const MetricGraph& g) {
  std::size_t loops = 0;
  for (const auto& e : g.edges()) loops += e.u == e.v;
  WorkGraph w{MetricGraph(g.vertex_count() + loops), {}};
  std::size_t extra = g.vertex_count();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u != ed.v) {
      w.graph.add_edge(ed.u, ed.v, ed.w);
      w.to_original.push_back({e, Rational(0), false});
      continue;
    }
    Rational half = ed.w / Rational(2);
    std::size_t m = extra++;
    w.graph.add_edge(ed.u, m, half);
    w.to_original.push_back({e, Rational(0), false});
    w.graph.add_edge(m, ed.u, half);
    w.to_original.push_back({e, half, false});
  }
  return w;
}

LpModel build_lp(const MetricGraph& w, const Assignment& t) {
  if (t.size() != w.edge_count()) raise(ErrorKind::kValidation, "assignment length differs from edge count");
  for (const auto& e : w.edges())
    if (e.u == e.v) raise(ErrorKind::kPrecondition, "the program is built on a loop-free graph");
  LpModel m;
  m.var_edge.push_back(kNone);
  m.var_vertex.push_back(kNone);
  m.names.push_back("delta");
  std::vector<std::pair<std::size_t, std::size_t>> end_var(w.edge_count(), {kNone, kNone});
  std::vector<std::vector<std::size_t>> at(w.vertex_count());
  for (std::size_t e = 0; e < w.edge_count(); ++e) {
    if (t[e] == 0) continue;
    const Edge& ed = w.edge(e);
    for (int side = 0; side < 2; ++side) {
      std::size_t v = side == 0 ? ed.u : ed.v;
      std::size_t idx = m.names.size();
      m.var_edge.push_back(e);
      m.var_vertex.push_back(v);
      m.names.push_back("d[" + std::to_string(v) + "," + std::to_string(e) + "]");
      (side == 0 ? end_var[e].first : end_var[e].second) = idx;
      at[v].push_back(idx);
    }
  }
  std::size_t nv = m.names.size();
  auto& p = m.program;
  p.vars = nv;
  p.objective.assign(nv, Rational(0));
  p.objective[0] = Rational(1);
  m.capacity_row.assign(w.edge_count(), kNone);
  for (std::size_t e = 0; e < w.edge_count(); ++e) {
    if (t[e] == 0) continue;
    lp::Constraint c{RVec(nv), lp::Sense::kLe, w.edge(e).w};
    c.a[end_var[e].first] = Rational(1);
    c.a[end_var[e].second] = Rational(1);
    if (t[e] == 1) {
      c.sense = lp::Sense::kEq;
    } else {
      c.a[0] = Rational(static_cast<long>(t[e] - 1));
    }
    m.capacity_row[e] = p.rows.size();
    p.rows.push_back(c);
  }
  for (const auto& vars : at)
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        lp::Constraint c{RVec(nv), lp::Sense::kGe, Rational(0)};
        c.a[vars[i]] = Rational(1);
        c.a[vars[j]] = Rational(1);
        c.a[0] = Rational(-1);
        p.rows.push_back(c);
      }
  lp::Constraint cap{RVec(nv), lp::Sense::kLe, w.total_length()};
  cap.a[0] = Rational(1);
  p.rows.push_back(cap);
  return m;
}

namespace {

lp::Program face_program(const LpModel& m, const Rational& delta, const RVec& objective) {
  lp::Program p = m.program;
  lp::Constraint fix{RVec(p.vars), lp::Sense::kEq, delta};
  fix.a[0] = Rational(1);
  p.rows.push_back(fix);
  p.objective = objective;
  return p;
}

lp::Solution solve_or_throw(const lp::Program& p) {
  auto s = lp::maximize(p);
  if (s.status != lp::Status::kOptimal) raise(ErrorKind::kInternal, "linear program did not reach an optimum");
  return s;
}

/// Largest slack a row can take over the optimal face.
Rational max_row_slack(const LpModel& m, const Rational& delta, std::size_t row) {
  const auto& c = m.program.rows[row];
  if (c.sense == lp::Sense::kEq) return Rational(0);
  RVec obj(m.program.vars);
  for (std::size_t i = 0; i < obj.size(); ++i) obj[i] = c.sense == lp::Sense::kLe ? -c.a[i] : c.a[i];
  auto s = solve_or_throw(face_program(m, delta, obj));
  return lp::slack(c, s.x);
}

}  // namespace

LPSolution lp_solve(const MetricGraph& w, const Assignment& t, bool tightness) {
  LpModel m = build_lp(w, t);
  auto s = lp::maximize(m.program);
  LPSolution out;
  if (s.status != lp::Status::kOptimal) return out;
  out.feasible = true;
  out.delta = s.value;
  out.values = s.x;
  if (tightness) {
    for (std::size_t r = 0; r < m.program.rows.size(); ++r)
      out.tight_in_all_optima.push_back(max_row_slack(m, out.delta, r).is_zero());
  }
  return out;
}

namespace {

/// Builds the code for an assignment from program values. `shares[e]` gives
/// positive weights for the gaps of an edge with slack; empty means equal gaps.
Code realize(const MetricGraph& w, const LpModel& m, const Assignment& t, const RVec& x,
             const std::vector<RVec>& shares) {
  std::vector<std::pair<std::size_t, std::size_t>> ends(w.edge_count(), {kNone, kNone});
  for (std::size_t i = 1; i < m.var_edge.size(); ++i) {
    auto& pr = ends[m.var_edge[i]];
    (pr.first == kNone ? pr.first : pr.second) = i;
  }
  const Rational& delta = x[0];
  Code code;
  for (std::size_t e = 0; e < w.edge_count(); ++e) {
    if (t[e] == 0) continue;
    const Rational& len = w.edge(e).w;
    Rational du = x[ends[e].first], dv = x[ends[e].second];
    if (t[e] == 1) {
      code.push_back({e, du});
      continue;
    }
    Rational free = len - du - dv - Rational(static_cast<long>(t[e] - 1)) * delta;
    RVec share = shares.empty() || shares[e].empty() ? RVec(t[e] - 1, Rational(1)) : shares[e];
    Rational total;
    for (const auto& s : share) total += s;
    Rational pos = du;
    code.push_back({e, pos});
    for (std::size_t j = 0; j + 1 < t[e]; ++j) {
      pos += delta + free * share[j] / total;
      code.push_back({e, pos});
    }
  }
  return code;
}

Code to_original(const WorkGraph& wg, const Code& c) {
  Code out;
  for (const auto& p : c) out.push_back(wg.map(p));
  return out;
}

Assignment proportional(const MetricGraph& w, std::size_t n) {
  Rational total = w.total_length();
  Assignment t(w.edge_count());
  std::vector<std::pair<Rational, std::size_t>> rem;
  std::size_t used = 0;
  for (std::size_t e = 0; e < w.edge_count(); ++e) {
    Rational share = Rational(static_cast<long>(n)) * w.edge(e).w / total;
    BigInt f = share.floor();
    t[e] = f.get_ui();
    used += t[e];
    rem.emplace_back(share - Rational(f), e);
  }
  std::stable_sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; used < n; ++i, ++used) ++t[rem[i % rem.size()].second];
  return t;
}

std::vector<std::vector<std::size_t>> edge_permutations(const MetricGraph& w, Budget& budget) {
  std::set<std::vector<std::size_t>> perms;
  for (const auto& iso : automorphisms(w, budget)) {
    std::vector<std::size_t> p;
    for (const auto& im : iso.edge) p.push_back(im.edge);
    perms.insert(p);
  }
  return {perms.begin(), perms.end()};
}

}  // namespace

OptimalCodes optimal_codes(const MetricGraph& g, std::size_t n, Budget& budget, const SearchOptions& opt) {
  g.validate();
  if (n < 2) raise(ErrorKind::kDomain, "codes need at least two points");
  OptimalCodes out;
  IsometryGroup grp = isometry_group(g, budget);
  std::mt19937_64 rng(opt.seed);
  auto random_weight = [&]() { return Rational(static_cast<long>(rng() % 1000 + 1)); };

  if (grp.cycle) {
    out.cycle = true;
    out.certified = true;
    out.delta = grp.cycle_length / Rational(static_cast<long>(n));
    out.lower_bound = out.delta;
    // Pull the evenly spaced points back through the smoothing map.
    Code code;
    for (std::size_t j = 0; j < n; ++j) {
      Rational pos = out.delta * Rational(static_cast<long>(j));
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const EdgeImage& im = grp.smoothed.image[e];
        Rational lo = im.reversed ? im.start - g.edge(e).w : im.start;
        Rational hi = lo + g.edge(e).w;
        if (pos >= lo && pos < hi) {
          code.push_back({e, im.reversed ? im.start - pos : pos - im.start});
          break;
        }
      }
    }
    CodeFamily fam;
    fam.single = true;
    fam.representative = code;
    fam.extremes = {code};
    out.families.push_back(fam);
    out.unique = true;
    out.isometry_classes = 1;
    return out;
  }

  WorkGraph wg = work_graph(g);
  const MetricGraph& w = wg.graph;
  std::size_t m = w.edge_count();
  Geodesics geo(g);
  auto realized_delta = [&](const Code& c) {
    Code o = to_original(wg, c);
    Rational best = geo(o[0], o[1]);
    for (std::size_t i = 0; i < o.size(); ++i)
      for (std::size_t j = i + 1; j < o.size(); ++j) best = unicorn::min(best, geo(o[i], o[j]));
    return best;
  };
  auto evaluate = [&](const Assignment& t) {
    budget.charge(1);
    LpModel model = build_lp(w, t);
    auto s = solve_or_throw(model.program);
    return realized_delta(realize(w, model, t, s.x, {}));
  };

  // Lower bound from a realized code: proportional start, then unit moves.
  Assignment cur = proportional(w, n);
  Rational lb = evaluate(cur);
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t a = 0; a < m && !improved; ++a)
      for (std::size_t b = 0; b < m && !improved; ++b) {
        if (a == b || cur[a] == 0) continue;
        Assignment nxt = cur;
        --nxt[a];
        ++nxt[b];
        Rational d = evaluate(nxt);
        if (d > lb) {
          lb = d;
          cur = nxt;
          improved = true;
        }
      }
  }
  out.lower_bound = lb;

  std::vector<std::size_t> cap(m);
  for (std::size_t e = 0; e < m; ++e) {
    BigInt c = (w.edge(e).w / lb).floor() + 1;
    cap[e] = std::min<std::size_t>(n, c.get_ui());
  }
  auto perms = opt.dedupe ? edge_permutations(w, budget) : std::vector<std::vector<std::size_t>>{};
  auto is_canonical = [&](const Assignment& t) {
    Assignment img(m);
    for (const auto& p : perms) {
      for (std::size_t e = 0; e < m; ++e) img[p[e]] = t[e];
      if (img < t) return false;
    }
    return true;
  };

  std::vector<std::pair<Assignment, Rational>> best;
  Rational best_delta;
  Assignment t(m, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t e, std::size_t left) {
    budget.charge(1);
    if (e + 1 == m) {
      if (left > cap[e]) return;
      t[e] = left;
      if (!is_canonical(t)) return;
      ++out.assignments;
      LpModel model = build_lp(w, t);
      auto s = solve_or_throw(model.program);
      if (best.empty() || s.value > best_delta) {
        best.clear();
        best_delta = s.value;
      }
      if (s.value == best_delta) best.emplace_back(t, s.value);
      return;
    }
    for (std::size_t c = 0; c <= std::min(left, cap[e]); ++c) {
      t[e] = c;
      rec(e + 1, left - c);
    }
    t[e] = 0;
  };
  rec(0, n);
  out.delta = best_delta;
  out.certified = best_delta <= w.min_weight();

  bool all_single = true;
  for (const auto& [ta, dval] : best) {
    CodeFamily fam;
    fam.t = ta;
    LpModel model = build_lp(w, ta);
    std::size_t nv = model.program.vars;
    fam.d_min.assign(nv, Rational(0));
    fam.d_max.assign(nv, Rational(0));
    std::vector<RVec> vertices;
    auto add_vertex = [&](const RVec& x) {
      if (std::find(vertices.begin(), vertices.end(), x) == vertices.end()) vertices.push_back(x);
    };
    bool fixed = true;
    for (std::size_t i = 0; i < nv; ++i) {
      RVec obj(nv);
      obj[i] = Rational(1);
      auto hi = solve_or_throw(face_program(model, out.delta, obj));
      obj[i] = Rational(-1);
      auto lo = solve_or_throw(face_program(model, out.delta, obj));
      budget.charge(2);
      fam.d_max[i] = hi.x[i];
      fam.d_min[i] = lo.x[i];
      if (fam.d_min[i] != fam.d_max[i]) fixed = false;
      add_vertex(hi.x);
      add_vertex(lo.x);
    }
    for (std::size_t e = 0; e < m; ++e)
      if (ta[e] >= 3 && max_row_slack(model, out.delta, model.capacity_row[e]).sign() > 0)
        fam.rattle_edges.push_back(e);
    fam.single = fixed && fam.rattle_edges.empty();
    all_single = all_single && fam.single;
    for (const auto& x : vertices) fam.extremes.push_back(to_original(wg, realize(w, model, ta, x, {})));
    if (fam.single) {
      fam.representative = fam.extremes.front();
    } else {
      RVec mix(nv);
      Rational total;
      for (const auto& x : vertices) {
        Rational c = random_weight();
        total += c;
        for (std::size_t i = 0; i < nv; ++i) mix[i] += c * x[i];
      }
      for (auto& v : mix) v /= total;
      std::vector<RVec> shares(m);
      for (auto e : fam.rattle_edges)
        for (std::size_t j = 0; j + 1 < ta[e]; ++j) shares[e].push_back(random_weight());
      fam.representative = to_original(wg, realize(w, model, ta, mix, shares));
    }
    out.families.push_back(std::move(fam));
  }
  if (all_single) {
    std::set<std::vector<Address>> classes;
    for (const auto& f : out.families) classes.insert(canonical_form(grp, f.representative));
    out.isometry_classes = classes.size();
    out.unique = classes.size() == 1;
  }
  return out;
}

Rational discretized_optimum(const MetricGraph& g, std::size_t n, const Rational& step, Budget& budget) {
  g.validate();
  if (step.sign() <= 0) raise(ErrorKind::kDomain, "step must be positive");
  if (n < 2) raise(ErrorKind::kDomain, "codes need at least two points");
  // Everything is measured in units of `step`.
  std::vector<long> len(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    Rational r = g.edge(e).w / step;
    if (!r.is_integer()) raise(ErrorKind::kDomain, "step must divide every edge length");
    len[e] = r.floor().get_si();
  }
  std::size_t nv = g.vertex_count();
  constexpr long kInf = std::numeric_limits<long>::max() / 4;
  std::vector<std::vector<long>> vd(nv, std::vector<long>(nv, kInf));
  for (std::size_t v = 0; v < nv; ++v) vd[v][v] = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto& x = vd[g.edge(e).u][g.edge(e).v];
    x = std::min(x, len[e]);
    vd[g.edge(e).v][g.edge(e).u] = x;
  }
  for (std::size_t k = 0; k < nv; ++k)
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j) vd[i][j] = std::min(vd[i][j], vd[i][k] + vd[k][j]);

  struct P {
    std::size_t edge;
    long off;
  };
  std::vector<P> cand;
  for (std::size_t v = 0; v < nv; ++v) {
    GraphPoint p = vertex_point(g, v);
    cand.push_back({p.edge, p.offset.is_zero() ? 0 : len[p.edge]});
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    for (long j = 1; j < len[e]; ++j) cand.push_back({e, j});
  std::size_t c = cand.size();
  if (c < n) raise(ErrorKind::kDomain, "grid has fewer points than the code size");
  auto dist = [&](const P& a, const P& b) {
    const Edge& e = g.edge(a.edge);
    const Edge& f = g.edge(b.edge);
    long best = a.edge == b.edge ? std::labs(a.off - b.off) : kInf;
    long ae[2] = {a.off, len[a.edge] - a.off};
    long be[2] = {b.off, len[b.edge] - b.off};
    std::size_t av[2] = {e.u, e.v}, bv[2] = {f.u, f.v};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) best = std::min(best, ae[i] + vd[av[i]][bv[j]] + be[j]);
    return best;
  };
  std::vector<std::vector<long>> d(c, std::vector<long>(c, 0));
  std::set<long> values;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j) {
      d[i][j] = d[j][i] = dist(cand[i], cand[j]);
      values.insert(d[i][j]);
    }
  budget.charge(c * c);
  std::vector<long> vals(values.begin(), values.end());
  auto feasible = [&](long D) {
    graph::Graph h(c);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = i + 1; j < c; ++j)
        if (d[i][j] >= D) h.add_edge(i, j);
    return graph::has_clique_of_size(h, n, budget);
  };
  std::size_t lo = 0, hi = vals.size() - 1;  // vals[lo] is always feasible
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (feasible(vals[mid])) lo = mid;
    else hi = mid - 1;
  }
  return step * Rational(vals[lo]);
}

}  // namespace unicorn::mgraph
