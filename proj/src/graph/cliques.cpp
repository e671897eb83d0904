#include "unicorn/graph/cliques.hpp"

#include <algorithm>
#include <bit>

namespace unicorn::graph {

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::none() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

std::size_t Bitset::next(std::size_t from) const {
  if (from >= n_) return n_;
  std::size_t wi = from >> 6;
  std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
  for (;;) {
    if (w) {
      std::size_t i = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      return i < n_ ? i : n_;
    }
    if (++wi >= w_.size()) return n_;
    w = w_[wi];
  }
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

void Bitset::keep_above(std::size_t i) {
  std::size_t wi = i >> 6;
  for (std::size_t k = 0; k < wi && k < w_.size(); ++k) w_[k] = 0;
  if (wi < w_.size()) {
    std::size_t b = i & 63;
    std::uint64_t mask = b == 63 ? 0 : (~std::uint64_t{0} << (b + 1));
    w_[wi] &= mask;
  }
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = first(); i < n_; i = next(i + 1)) out.push_back(i);
  return out;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) return;
  adj_[a].set(b);
  adj_[b].set(a);
}

std::size_t Graph::edge_count() const {
  std::size_t c = 0;
  for (const auto& row : adj_) c += row.count();
  return c / 2;
}

bool Graph::is_clique(const std::vector<std::size_t>& vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!adjacent(vs[i], vs[j])) return false;
  return true;
}

std::vector<std::size_t> degeneracy_order(const Graph& g) {
  std::size_t n = g.size();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
    removed[best] = true;
    order.push_back(best);
    const Bitset& nb = g.neighbours(best);
    for (std::size_t u = nb.first(); u < n; u = nb.next(u + 1))
      if (!removed[u]) --deg[u];
  }
  return order;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<std::size_t>& r, Bitset p, Bitset x,
                   Budget& budget, std::vector<std::vector<std::size_t>>& out) {
  budget.charge();
  std::size_t n = g.size();
  if (p.none()) {
    if (x.none()) {
      std::vector<std::size_t> c = r;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return;
  }
  // Tomita pivot: vertex of P u X with the most neighbours in P.
  std::size_t pivot = n, best = 0;
  for (const Bitset* s : {&p, &x})
    for (std::size_t u = s->first(); u < n; u = s->next(u + 1)) {
      std::size_t c = (p & g.neighbours(u)).count();
      if (pivot == n || c > best) {
        pivot = u;
        best = c;
      }
    }
  Bitset cand = p;
  cand.subtract(g.neighbours(pivot));
  for (std::size_t v = cand.first(); v < n; v = cand.next(v + 1)) {
    r.push_back(v);
    bron_kerbosch(g, r, p & g.neighbours(v), x & g.neighbours(v), budget, out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

std::size_t colour_bound(const Graph& g, Bitset p) {
  std::size_t colours = 0;
  while (!p.none()) {
    ++colours;
    Bitset q = p;
    while (!q.none()) {
      std::size_t v = q.first();
      q.reset(v);
      q.subtract(g.neighbours(v));
      p.reset(v);
    }
  }
  return colours;
}

bool extend_to_size(const Graph& g, std::size_t k, std::vector<std::size_t>& r, const Bitset& p,
                    Budget& budget,
                    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  budget.charge();
  if (r.size() == k) return visit(r);
  std::size_t need = k - r.size();
  if (p.count() < need) return true;
  if (colour_bound(g, p) < need) return true;
  std::size_t n = g.size();
  for (std::size_t v = p.first(); v < n; v = p.next(v + 1)) {
    Bitset next = p & g.neighbours(v);
    next.keep_above(v);
    r.push_back(v);
    bool go_on = extend_to_size(g, k, r, next, budget, visit);
    r.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g, Budget& budget) {
  std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  std::vector<std::size_t> order = degeneracy_order(g);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = order[i];
    Bitset p(n), x(n);
    const Bitset& nb = g.neighbours(v);
    for (std::size_t u = nb.first(); u < n; u = nb.next(u + 1)) {
      if (pos[u] > i) p.set(u); else x.set(u);
    }
    std::vector<std::size_t> r{v};
    bron_kerbosch(g, r, p, x, budget, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MaximumCliques maximum_cliques(const Graph& g, Budget& budget) {
  MaximumCliques res;
  for (auto& c : maximal_cliques(g, budget)) {
    if (c.size() > res.clique_number) {
      res.clique_number = c.size();
      res.cliques.clear();
    }
    if (c.size() == res.clique_number) res.cliques.push_back(std::move(c));
  }
  return res;
}

void for_each_clique_of_size(const Graph& g, std::size_t k, Budget& budget,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::size_t n = g.size();
  Bitset all(n);
  for (std::size_t v = 0; v < n; ++v) all.set(v);
  std::vector<std::size_t> r;
  if (k == 0) {
    visit(r);
    return;
  }
  extend_to_size(g, k, r, all, budget, visit);
}

bool has_clique_of_size(const Graph& g, std::size_t k, Budget& budget) {
  bool found = false;
  for_each_clique_of_size(g, k, budget, [&](const std::vector<std::size_t>&) {
    found = true;
    return false;
  });
  return found;
}

bool every_near_maximum_clique_extends(const Graph& g, Budget& budget) {
  auto all = maximal_cliques(g, budget);
  std::size_t omega = 0;
  for (const auto& c : all) omega = std::max(omega, c.size());
  if (omega <= 1) return true;
  for (const auto& c : all)
    if (c.size() == omega - 1) return false;
  return true;
}

}  // namespace unicorn::graph
