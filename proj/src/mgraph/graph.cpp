#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "unicorn/mgraph/mgraph.hpp"

namespace unicorn::mgraph {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

std::size_t MetricGraph::add_edge(std::size_t u, std::size_t v, const Rational& w) {
  if (u >= n_ || v >= n_) raise(ErrorKind::kValidation, "edge endpoint out of range");
  if (w.sign() <= 0) raise(ErrorKind::kValidation, "edge lengths must be positive");
  edges_.push_back({u, v, w});
  return edges_.size() - 1;
}

std::size_t MetricGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

bool MetricGraph::connected() const {
  if (n_ == 0) return false;
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : edges_) parent[find(e.u)] = find(e.v);
  for (std::size_t v = 0; v < n_; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

bool MetricGraph::is_tree() const {
  if (!connected() || edges_.size() + 1 != n_) return false;
  return std::none_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

bool MetricGraph::unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == Rational(1); });
}

Rational MetricGraph::total_length() const {
  Rational s;
  for (const auto& e : edges_) s += e.w;
  return s;
}

Rational MetricGraph::min_weight() const {
  if (edges_.empty()) raise(ErrorKind::kValidation, "graph has no edges");
  Rational m = edges_[0].w;
  for (const auto& e : edges_) m = unicorn::min(m, e.w);
  return m;
}

void MetricGraph::validate() const {
  if (edges_.empty()) raise(ErrorKind::kValidation, "metric graph needs at least one edge");
  if (!connected()) raise(ErrorKind::kValidation, "metric graph must be connected");
}

void validate_point(const MetricGraph& g, const GraphPoint& p) {
  if (p.edge >= g.edge_count()) raise(ErrorKind::kValidation, "point refers to a missing edge");
  if (p.offset.sign() < 0 || p.offset > g.edge(p.edge).w)
    raise(ErrorKind::kValidation, "point offset outside its edge");
}

Address address(const MetricGraph& g, const GraphPoint& p) {
  validate_point(g, p);
  const Edge& e = g.edge(p.edge);
  if (p.offset.is_zero()) return {true, e.u, Rational(0)};
  if (p.offset == e.w) return {true, e.v, Rational(0)};
  return {false, p.edge, p.offset};
}

GraphPoint vertex_point(const MetricGraph& g, std::size_t v) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).u == v) return {e, Rational(0)};
    if (g.edge(e).v == v) return {e, g.edge(e).w};
  }
  raise(ErrorKind::kValidation, "vertex has no incident edge");
}

Geodesics::Geodesics(const MetricGraph& g) : g_(&g) {
  std::size_t n = g.vertex_count();
  std::vector<std::vector<std::optional<Rational>>> d(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = Rational(0);
  for (const auto& e : g.edges()) {
    if (!d[e.u][e.v] || e.w < *d[e.u][e.v]) d[e.u][e.v] = d[e.v][e.u] = e.w;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        Rational c = *d[i][k] + *d[k][j];
        if (!d[i][j] || c < *d[i][j]) d[i][j] = c;
      }
    }
  d_.assign(n, RVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!d[i][j]) raise(ErrorKind::kValidation, "metric graph must be connected");
      d_[i][j] = *d[i][j];
    }
}

Rational Geodesics::operator()(const GraphPoint& p, const GraphPoint& q) const {
  const Edge& e = g_->edge(p.edge);
  const Edge& f = g_->edge(q.edge);
  std::optional<Rational> best;
  auto consider = [&](const Rational& c) {
    if (!best || c < *best) best = c;
  };
  if (p.edge == q.edge) consider((p.offset - q.offset).abs());
  std::pair<std::size_t, Rational> pe[2] = {{e.u, p.offset}, {e.v, e.w - p.offset}};
  std::pair<std::size_t, Rational> qe[2] = {{f.u, q.offset}, {f.v, f.w - q.offset}};
  for (const auto& a : pe)
    for (const auto& b : qe) consider(a.second + d_[a.first][b.first] + b.second);
  return *best;
}

Rational geodesic_distance(const MetricGraph& g, const GraphPoint& p, const GraphPoint& q) {
  validate_point(g, p);
  validate_point(g, q);
  return Geodesics(g)(p, q);
}

Rational code_min_distance(const MetricGraph& g, const Code& code) {
  if (code.size() < 2) raise(ErrorKind::kDomain, "minimum distance needs at least two points");
  for (const auto& p : code) validate_point(g, p);
  Geodesics geo(g);
  Rational best = geo(code[0], code[1]);
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) best = unicorn::min(best, geo(code[i], code[j]));
  return best;
}

std::vector<Address> code_addresses(const MetricGraph& g, const Code& code) {
  std::vector<Address> a;
  for (const auto& p : code) a.push_back(address(g, p));
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end())
    raise(ErrorKind::kValidation, "code contains a repeated point");
  return a;
}

GraphPoint Smoothed::map(const GraphPoint& p) const {
  const EdgeImage& im = image.at(p.edge);
  return {im.edge, im.reversed ? im.start - p.offset : im.start + p.offset};
}

Smoothed smooth(const MetricGraph& g) {
  g.validate();
  std::vector<Edge> edges = g.edges();
  std::vector<bool> alive(edges.size(), true);
  Smoothed s;
  s.image.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) s.image[e] = {e, Rational(0), false};
  std::size_t n = g.vertex_count();
  auto incident = [&](std::size_t v) {
    std::vector<std::size_t> inc;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (alive[e] && (edges[e].u == v || edges[e].v == v)) inc.push_back(e);
    return inc;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n && !changed; ++v) {
      auto inc = incident(v);
      if (inc.size() != 2) continue;
      std::size_t e1 = inc[0], e2 = inc[1];
      if (edges[e1].u == edges[e1].v || edges[e2].u == edges[e2].v) continue;
      std::size_t a = edges[e1].u == v ? edges[e1].v : edges[e1].u;
      std::size_t b = edges[e2].u == v ? edges[e2].v : edges[e2].u;
      Rational w1 = edges[e1].w, w2 = edges[e2].w;
      // New edge runs a -> v -> b and replaces e1.
      auto remap = [&](std::size_t from, const Rational& base, bool flip, const Rational& w) {
        for (auto& im : s.image) {
          if (im.edge != from) continue;
          // pos' = base + pos, or base + w - pos when flipped.
          if (flip) {
            im.start = base + w - im.start;
            im.reversed = !im.reversed;
          } else {
            im.start = base + im.start;
          }
          im.edge = e1;
        }
      };
      remap(e1, Rational(0), edges[e1].u != a, w1);
      remap(e2, w1, edges[e2].u != v, w2);
      edges[e1] = {a, b, w1 + w2};
      alive[e2] = false;
      changed = true;
    }
  }
  // Compact.
  std::vector<std::size_t> new_edge(edges.size(), kNone);
  s.vertex.assign(n, kNone);
  std::size_t nv = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!alive[e]) continue;
    for (std::size_t x : {edges[e].u, edges[e].v})
      if (s.vertex[x] == kNone) s.vertex[x] = nv++;
  }
  s.graph = MetricGraph(nv);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (alive[e]) new_edge[e] = s.graph.add_edge(s.vertex[edges[e].u], s.vertex[edges[e].v], edges[e].w);
  for (auto& im : s.image) im.edge = new_edge[im.edge];
  s.cycle = s.graph.edge_count() == 1 && s.graph.edge(0).u == s.graph.edge(0).v;
  return s;
}

bool Isometry::identity() const {
  for (std::size_t v = 0; v < vertex.size(); ++v)
    if (vertex[v] != v) return false;
  for (std::size_t e = 0; e < edge.size(); ++e)
    if (edge[e].edge != e || edge[e].reversed) return false;
  return true;
}

GraphPoint apply(const MetricGraph& g, const Isometry& iso, const GraphPoint& p) {
  const EdgeImage& im = iso.edge.at(p.edge);
  const Rational& w = g.edge(im.edge).w;
  return {im.edge, im.reversed ? w - p.offset : p.offset};
}

std::vector<Isometry> automorphisms(const MetricGraph& g, Budget& budget) {
  std::size_t n = g.vertex_count();
  // between[a][b]: sorted weights of edges joining a and b (loops on the diagonal).
  std::vector<std::vector<std::vector<Rational>>> between(n, std::vector<std::vector<Rational>>(n));
  for (const auto& e : g.edges()) {
    between[e.u][e.v].push_back(e.w);
    if (e.u != e.v) between[e.v][e.u].push_back(e.w);
  }
  for (auto& row : between)
    for (auto& c : row) std::sort(c.begin(), c.end());
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = std::minmax(g.edge(e).u, g.edge(e).v);
    groups[{u, v}].push_back(e);
  }

  std::vector<Isometry> out;
  std::vector<std::size_t> pi(n, kNone);
  std::vector<bool> used(n, false);

  auto emit_edges = [&]() {
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> work;
    for (const auto& [key, es] : groups) {
      auto [a, b] = std::minmax(pi[key.first], pi[key.second]);
      work.emplace_back(es, groups.at({a, b}));
    }
    Isometry iso;
    iso.vertex = pi;
    iso.edge.resize(g.edge_count());
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
      budget.charge(1);
      if (gi == work.size()) {
        out.push_back(iso);
        return;
      }
      const auto& src = work[gi].first;
      std::vector<std::size_t> dst = work[gi].second;
      std::sort(dst.begin(), dst.end());
      do {
        bool ok = true;
        for (std::size_t i = 0; i < src.size() && ok; ++i)
          if (g.edge(src[i]).w != g.edge(dst[i]).w) ok = false;
        if (!ok) continue;
        std::vector<std::size_t> loops;
        for (std::size_t i = 0; i < src.size(); ++i) {
          const Edge& e = g.edge(src[i]);
          const Edge& f = g.edge(dst[i]);
          if (e.u == e.v) {
            loops.push_back(i);
            iso.edge[src[i]] = {dst[i], Rational(0), false};
          } else {
            bool rev = pi[e.u] != f.u;
            iso.edge[src[i]] = {dst[i], rev ? f.w : Rational(0), rev};
          }
        }
        for (unsigned mask = 0; mask < (1U << loops.size()); ++mask) {
          for (std::size_t k = 0; k < loops.size(); ++k) {
            bool rev = mask >> k & 1U;
            auto& im = iso.edge[src[loops[k]]];
            im.reversed = rev;
            im.start = rev ? g.edge(im.edge).w : Rational(0);
          }
          rec(gi + 1);
        }
      } while (std::next_permutation(dst.begin(), dst.end()));
    };
    rec(0);
  };

  std::function<void(std::size_t)> assign = [&](std::size_t a) {
    budget.charge(1);
    if (a == n) {
      emit_edges();
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || deg[c] != deg[a] || between[c][c] != between[a][a]) continue;
      bool ok = true;
      for (std::size_t b = 0; b < a && ok; ++b)
        if (between[a][b] != between[c][pi[b]]) ok = false;
      if (!ok) continue;
      pi[a] = c;
      used[c] = true;
      assign(a + 1);
      used[c] = false;
      pi[a] = kNone;
    }
  };
  assign(0);
  return out;
}

namespace {

Isometry compose(const MetricGraph& g, const Isometry& a, const Isometry& b) {
  // a after b
  Isometry c;
  c.vertex.resize(b.vertex.size());
  for (std::size_t v = 0; v < b.vertex.size(); ++v) c.vertex[v] = a.vertex[b.vertex[v]];
  c.edge.resize(b.edge.size());
  for (std::size_t e = 0; e < b.edge.size(); ++e) {
    const auto& ib = b.edge[e];
    const auto& ia = a.edge[ib.edge];
    bool rev = ib.reversed != ia.reversed;
    c.edge[e] = {ia.edge, rev ? g.edge(ia.edge).w : Rational(0), rev};
  }
  return c;
}

using IsoKey = std::pair<std::vector<std::size_t>, std::vector<std::pair<std::size_t, bool>>>;

IsoKey key_of(const Isometry& i) {
  IsoKey k;
  k.first = i.vertex;
  for (const auto& e : i.edge) k.second.emplace_back(e.edge, e.reversed);
  return k;
}

}  // namespace

IsometryGroup isometry_group(const MetricGraph& g, Budget& budget) {
  IsometryGroup grp;
  grp.smoothed = smooth(g);
  if (grp.smoothed.cycle) {
    grp.cycle = true;
    grp.cycle_length = grp.smoothed.graph.edge(0).w;
    return grp;
  }
  const MetricGraph& s = grp.smoothed.graph;
  grp.elements = automorphisms(s, budget);
  // Identity first, then the rest in enumeration order.
  std::stable_partition(grp.elements.begin(), grp.elements.end(),
                        [](const Isometry& i) { return i.identity(); });
  std::set<IsoKey> closure = {key_of(grp.elements[0])};
  for (const auto& el : grp.elements) {
    if (closure.count(key_of(el))) continue;
    grp.generators.push_back(el);
    std::vector<Isometry> frontier;
    std::map<IsoKey, Isometry> all;
    all.emplace(key_of(grp.elements[0]), grp.elements[0]);
    frontier.push_back(grp.elements[0]);
    while (!frontier.empty()) {
      Isometry x = frontier.back();
      frontier.pop_back();
      for (const auto& gen : grp.generators) {
        Isometry y = compose(s, gen, x);
        budget.charge(1);
        if (all.emplace(key_of(y), y).second) frontier.push_back(y);
      }
    }
    closure.clear();
    for (const auto& [k, v] : all) closure.insert(k);
  }
  return grp;
}

namespace {

RVec cycle_positions(const IsometryGroup& grp, const Code& code) {
  RVec pos;
  const Rational& len = grp.cycle_length;
  for (const auto& p : code) {
    Rational x = grp.smoothed.map(p).offset;
    if (x == len) x = 0;
    pos.push_back(x);
  }
  return pos;
}

Rational mod_len(Rational x, const Rational& len) {
  while (x.sign() < 0) x += len;
  while (x >= len) x -= len;
  return x;
}

std::vector<Address> as_cycle_addresses(const RVec& pos) {
  std::vector<Address> a;
  for (const auto& x : pos) a.push_back(x.is_zero() ? Address{true, 0, Rational(0)} : Address{false, 0, x});
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

std::vector<Address> canonical_form(const IsometryGroup& grp, const Code& code) {
  if (code.empty()) return {};
  if (grp.cycle) {
    RVec pos = cycle_positions(grp, code);
    std::optional<std::vector<Address>> best;
    for (const auto& base : pos)
      for (int dir : {1, -1}) {
        RVec shifted;
        for (const auto& x : pos) shifted.push_back(mod_len(dir > 0 ? x - base : base - x, grp.cycle_length));
        auto a = as_cycle_addresses(shifted);
        if (!best || a < *best) best = a;
      }
    return *best;
  }
  const MetricGraph& s = grp.smoothed.graph;
  Code mapped;
  for (const auto& p : code) mapped.push_back(grp.smoothed.map(p));
  std::optional<std::vector<Address>> best;
  for (const auto& el : grp.elements) {
    Code img;
    for (const auto& p : mapped) img.push_back(apply(s, el, p));
    auto a = code_addresses(s, img);
    if (!best || a < *best) best = a;
  }
  return *best;
}

SymmetryAudit audit_symmetry(const MetricGraph& g, const IsometryGroup& grp, const Code& code) {
  for (const auto& p : code) validate_point(g, p);
  SymmetryAudit audit;
  if (grp.cycle) {
    audit.cycle = true;
    RVec pos = cycle_positions(grp, code);
    std::set<Rational> set(pos.begin(), pos.end());
    const Rational& len = grp.cycle_length;
    std::set<std::pair<int, Rational>> candidates;
    for (const auto& a : pos)
      for (const auto& b : pos) {
        if (a != b) candidates.insert({0, mod_len(b - a, len)});
        candidates.insert({1, mod_len(a + b, len)});
      }
    for (const auto& [kind, c] : candidates) {
      std::size_t overlap = 0;
      for (const auto& x : pos) overlap += set.count(mod_len(kind == 0 ? x + c : c - x, len));
      audit.max_overlap = std::max(audit.max_overlap, overlap);
      if (overlap == pos.size()) ++audit.fixing_count;
    }
    return audit;
  }
  const MetricGraph& s = grp.smoothed.graph;
  Code mapped;
  for (const auto& p : code) mapped.push_back(grp.smoothed.map(p));
  auto base = code_addresses(s, mapped);
  std::set<Address> base_set(base.begin(), base.end());
  audit.group_order = grp.elements.size();
  for (std::size_t i = 0; i < grp.elements.size(); ++i) {
    if (grp.elements[i].identity()) continue;
    std::size_t overlap = 0;
    for (const auto& p : mapped) overlap += base_set.count(address(s, apply(s, grp.elements[i], p)));
    audit.max_overlap = std::max(audit.max_overlap, overlap);
    if (overlap == mapped.size()) audit.fixing.push_back(i);
  }
  audit.fixing_count = audit.fixing.size();
  return audit;
}

CanonicalCodes canonical_codes(const MetricGraph& g, std::size_t k) {
  g.validate();
  if (!g.unit_weights()) raise(ErrorKind::kDomain, "canonical codes need unit edge lengths");
  if (k < 1) raise(ErrorKind::kDomain, "k must be at least 1");
  CanonicalCodes c;
  Rational kk(static_cast<long>(k));
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    for (std::size_t j = 1; j <= k; ++j) {
      c.ck.push_back({e, Rational(static_cast<long>(2 * j - 1)) / (Rational(2) * kk)});
      c.ck_prime.push_back({e, Rational(static_cast<long>(j)) / (kk + Rational(1))});
    }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) c.ck_prime.push_back(vertex_point(g, v));
  c.ck_delta = c.ck.size() >= 2 ? code_min_distance(g, c.ck) : Rational(1) / kk;
  c.ck_prime_delta = code_min_distance(g, c.ck_prime);
  return c;
}

bool uniqueness_verdict(const MetricGraph& g, Family which, std::size_t k) {
  g.validate();
  if (!g.unit_weights()) raise(ErrorKind::kDomain, "the criterion is stated for unit edge lengths");
  if (k < 1) raise(ErrorKind::kDomain, "k must be at least 1");
  if (which == Family::kCkPrime) return g.is_tree();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < 2) return false;
  return true;
}

namespace {

std::string rooted_code(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (auto c : adj[v])
    if (c != parent) kids.push_back(rooted_code(adj, c, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

std::string tree_code(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Centers by leaf stripping.
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (auto v : layer)
      for (auto c : adj[v])
        if (--deg[c] == 1) next.push_back(c);
    layer = next;
  }
  std::string best;
  for (auto c : layer) {
    std::string s = rooted_code(adj, c, n);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<MetricGraph> unit_trees(std::size_t vertices) {
  if (vertices < 2 || vertices > 10) raise(ErrorKind::kDomain, "tree enumeration supports 2..10 vertices");
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> found;
  std::size_t len = vertices - 2;
  std::vector<std::size_t> seq(len, 0);
  while (true) {
    // Decode the Pruefer sequence.
    std::vector<std::size_t> deg(vertices, 1);
    for (auto x : seq) ++deg[x];
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto x : seq) {
      std::size_t leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --deg[leaf];
      --deg[x];
    }
    std::size_t a = vertices, b = vertices;
    for (std::size_t v = 0; v < vertices; ++v)
      if (deg[v] == 1) (a == vertices ? a : b) = v;
    edges.emplace_back(a, b);
    found.emplace(tree_code(vertices, edges), edges);
    std::size_t i = 0;
    while (i < len && seq[i] == vertices - 1) seq[i++] = 0;
    if (i == len) break;
    ++seq[i];
  }
  std::vector<MetricGraph> out;
  for (const auto& [code, edges] : found) {
    // Relabel by BFS from vertex 0 so edges read naturally.
    MetricGraph g(vertices);
    auto sorted = edges;
    for (auto& e : sorted)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(sorted.begin(), sorted.end());
    for (auto [x, y] : sorted) g.add_edge(x, y, Rational(1));
    out.push_back(g);
  }
  return out;
}

}  // namespace unicorn::mgraph
