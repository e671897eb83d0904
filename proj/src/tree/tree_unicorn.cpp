#include "unicorn/tree/tree_unicorn.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace unicorn::tree {

using mgraph::Address;
using mgraph::Code;
using mgraph::GraphPoint;
using mgraph::MetricGraph;

namespace {

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(const MetricGraph& g) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    adj[g.edge(e).u].emplace_back(g.edge(e).v, e);
    adj[g.edge(e).v].emplace_back(g.edge(e).u, e);
  }
  return adj;
}

/// Leaves reachable from `start` without passing through `block`, sorted.
std::vector<std::size_t> branch_leaves(const MetricTree& t, std::size_t block, std::size_t start) {
  auto adj = adjacency(t.graph());
  std::vector<std::size_t> out;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent) {
    if (adj[v].size() == 1) out.push_back(v);
    for (auto [w, e] : adj[v])
      if (w != parent) dfs(w, v);
  };
  dfs(start, block);
  std::sort(out.begin(), out.end());
  return out;
}

GraphPoint pull_back(const MetricTree& t, const GraphPoint& p) {
  const auto& s = t.smoothing;
  for (std::size_t e = 0; e < t.original.edge_count(); ++e) {
    const auto& im = s.image[e];
    if (im.edge != p.edge) continue;
    const Rational& w = t.original.edge(e).w;
    Rational lo = im.reversed ? im.start - w : im.start;
    if (p.offset >= lo && p.offset <= lo + w)
      return {e, im.reversed ? im.start - p.offset : p.offset - im.start};
  }
  raise(ErrorKind::kInternal, "point lies outside every original edge");
}

}  // namespace

MetricTree metric_tree(const MetricGraph& g) {
  g.validate();
  if (!g.is_tree()) raise(ErrorKind::kValidation, "graph is not a tree");
  MetricTree t{g, mgraph::smooth(g), {}, {}, Rational(0)};
  const MetricGraph& s = t.graph();
  for (std::size_t v = 0; v < s.vertex_count(); ++v) (s.degree(v) == 1 ? t.leaves : t.junctions).push_back(v);
  t.shortest = s.min_weight();
  return t;
}

namespace {

/// Candidate (f(u), g(u)) choices at one junction, optionally only the first.
std::vector<std::pair<std::size_t, std::vector<std::size_t>>> junction_choices(
    const MetricTree& t, const mgraph::Geodesics& geo, std::size_t u, const std::optional<Rational>& delta,
    bool first_only) {
  const MetricGraph& s = t.graph();
  std::vector<std::vector<std::size_t>> branches;
  auto adj = adjacency(s);
  for (auto [w, e] : adj[u]) branches.push_back(branch_leaves(t, u, w));
  auto dist = [&](std::size_t v) { return geo.vertices(u, v); };
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> out;
  for (std::size_t b = 0; b < branches.size(); ++b)
    for (std::size_t f : branches[b]) {
      if (delta && (dist(f) / *delta).frac() > Rational(1) / Rational(2)) continue;
      // Each other branch contributes one leaf; in the search every valid leaf
      // is a choice, in the check only the smallest is kept.
      std::vector<std::vector<std::size_t>> options(branches.size());
      bool ok = true;
      for (std::size_t c = 0; c < branches.size() && ok; ++c) {
        if (c == b) {
          options[c] = {f};
          continue;
        }
        for (std::size_t v : branches[c])
          if (!delta || divides(*delta, dist(f) + dist(v))) {
            options[c].push_back(v);
            if (delta) break;
          }
        ok = !options[c].empty();
      }
      if (!ok) continue;
      std::vector<std::size_t> pick(branches.size());
      std::function<bool(std::size_t)> rec = [&](std::size_t c) {
        if (c == branches.size()) {
          auto g = pick;
          std::sort(g.begin(), g.end());
          out.emplace_back(f, g);
          return first_only;
        }
        for (auto v : options[c]) {
          pick[c] = v;
          if (rec(c + 1)) return true;
        }
        return false;
      };
      if (rec(0) && first_only) return out;
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<FGWitness> check_delta(const MetricTree& t, const Rational& delta) {
  if (delta.sign() <= 0 || delta >= t.shortest)
    raise(ErrorKind::kDomain, "delta must lie strictly between 0 and the shortest edge length");
  if (t.junctions.empty()) {
    if (!divides(delta, t.graph().edge(0).w)) return std::nullopt;
    return FGWitness{};
  }
  mgraph::Geodesics geo(t.graph());
  FGWitness w;
  for (std::size_t u : t.junctions) {
    auto c = junction_choices(t, geo, u, delta, true);
    if (c.empty()) return std::nullopt;
    w.junction.push_back(u);
    w.f.push_back(c[0].first);
    w.g.push_back(c[0].second);
  }
  return w;
}

DeltaScan enumerate_deltas(const MetricTree& t, std::size_t max_k, Budget& budget) {
  if (max_k < 1) raise(ErrorKind::kDomain, "max_k must be positive");
  DeltaScan scan;
  std::set<Rational> bases;
  if (t.junctions.empty()) {
    bases.insert(t.graph().edge(0).w);
    scan.shapes = 1;
  } else {
    mgraph::Geodesics geo(t.graph());
    std::vector<std::vector<Rational>> sums;  // per junction, per choice: gcd of its path sums
    for (std::size_t u : t.junctions) {
      std::set<Rational> gs;
      for (const auto& [f, g] : junction_choices(t, geo, u, std::nullopt, false)) {
        budget.charge(1);
        Rational acc;
        for (auto v : g)
          if (v != f) acc = acc.is_zero() ? geo.vertices(u, f) + geo.vertices(u, v)
                                          : gcd(acc, geo.vertices(u, f) + geo.vertices(u, v));
        gs.insert(acc);
      }
      sums.emplace_back(gs.begin(), gs.end());
    }
    std::vector<std::size_t> idx(sums.size(), 0);
    while (true) {
      budget.charge(1);
      ++scan.shapes;
      Rational acc = sums[0][idx[0]];
      for (std::size_t j = 1; j < sums.size(); ++j) acc = gcd(acc, sums[j][idx[j]]);
      bases.insert(acc);
      std::size_t j = 0;
      while (j < sums.size() && idx[j] + 1 == sums[j].size()) idx[j++] = 0;
      if (j == sums.size()) break;
      ++idx[j];
    }
  }
  std::set<Rational> found;
  for (const auto& base : bases)
    for (std::size_t k = 1; k <= max_k; ++k) {
      Rational d = base / Rational(static_cast<long>(k));
      if (d >= t.shortest) continue;
      budget.charge(1);
      if (check_delta(t, d)) found.insert(d);
    }
  scan.bases.assign(bases.rbegin(), bases.rend());
  scan.deltas.assign(found.rbegin(), found.rend());
  return scan;
}

Code build_unique_code(const MetricTree& t, const Rational& delta, const FGWitness& w) {
  if (!check_delta(t, delta)) raise(ErrorKind::kPrecondition, "delta is not admissible for this tree");
  const MetricGraph& s = t.graph();
  std::map<Address, GraphPoint> pts;
  auto add = [&](const GraphPoint& p) { pts.emplace(mgraph::address(s, p), p); };
  if (t.junctions.empty()) {
    const Rational& len = s.edge(0).w;
    for (Rational x; x <= len; x += delta) add({0, x});
  } else {
    if (w.junction.size() != t.junctions.size()) raise(ErrorKind::kValidation, "witness does not cover every junction");
    auto adj = adjacency(s);
    for (std::size_t i = 0; i < w.junction.size(); ++i) {
      std::size_t from = w.f[i];
      // Parent pointers from f(u).
      std::vector<std::pair<std::size_t, std::size_t>> parent(s.vertex_count(), {from, s.edge_count()});
      std::vector<bool> seen(s.vertex_count(), false);
      std::vector<std::size_t> stack = {from};
      seen[from] = true;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto [x, e] : adj[v])
          if (!seen[x]) {
            seen[x] = true;
            parent[x] = {v, e};
            stack.push_back(x);
          }
      }
      for (std::size_t target : w.g[i]) {
        if (target == from) continue;
        std::vector<std::pair<std::size_t, std::size_t>> steps;  // (vertex entered from, edge)
        for (std::size_t v = target; v != from; v = parent[v].first) steps.push_back({parent[v].first, parent[v].second});
        std::reverse(steps.begin(), steps.end());
        Rational walked, next;
        for (auto [a, e] : steps) {
          const auto& ed = s.edge(e);
          while (next <= walked + ed.w) {
            Rational off = next - walked;
            add({e, ed.u == a ? off : ed.w - off});
            next += delta;
          }
          walked += ed.w;
        }
        if (next - delta != walked) raise(ErrorKind::kInternal, "path length is not a multiple of delta");
      }
    }
  }
  Code code;
  for (const auto& [a, p] : pts) code.push_back(pull_back(t, p));
  if (code.size() >= 2 && mgraph::code_min_distance(t.original, code) < delta)
    raise(ErrorKind::kInternal, "constructed points collide; the witness is invalid");
  return code;
}

}  // namespace unicorn::tree
