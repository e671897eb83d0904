#include "unicorn/ultra/ultra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace unicorn::ultra {

BallTree::BallTree(const Rational& root_diam) {
  if (root_diam.sign() <= 0) raise(ErrorKind::kValidation, "ball diameters must be positive");
  nodes_.push_back({root_diam, kNoParent, {}, {}});
}

std::size_t BallTree::add_ball(std::size_t parent, const Rational& diam, std::string label) {
  if (parent >= nodes_.size() || is_point(parent)) raise(ErrorKind::kValidation, "parent must be a ball");
  if (diam.sign() <= 0 || diam >= nodes_[parent].diam)
    raise(ErrorKind::kValidation, "diameters must be positive and strictly decrease");
  nodes_.push_back({diam, parent, {}, std::move(label)});
  nodes_[parent].children.push_back(nodes_.size() - 1);
  return nodes_.size() - 1;
}

std::size_t BallTree::add_point(std::size_t parent, std::string label) {
  if (parent >= nodes_.size() || is_point(parent)) raise(ErrorKind::kValidation, "parent must be a ball");
  nodes_.push_back({Rational(0), parent, {}, std::move(label)});
  nodes_[parent].children.push_back(nodes_.size() - 1);
  return nodes_.size() - 1;
}

std::vector<std::size_t> BallTree::points_under(std::size_t id) const {
  std::vector<std::size_t> out;
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    if (is_point(v)) out.push_back(v);
    for (auto c : nodes_[v].children) dfs(c);
  };
  dfs(id);
  return out;
}

std::vector<std::size_t> BallTree::points() const { return points_under(root()); }

void BallTree::validate() const {
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].diam.sign() > 0 && nodes_[v].children.empty())
      raise(ErrorKind::kValidation, "ball " + std::to_string(v) + " has no children");
  }
  if (points().empty()) raise(ErrorKind::kValidation, "ball tree has no points");
}

Rational BallTree::distance(std::size_t x, std::size_t y) const {
  if (!is_point(x) || !is_point(y)) raise(ErrorKind::kValidation, "distance is defined between points");
  if (x == y) return Rational(0);
  std::set<std::size_t> up;
  for (std::size_t v = x; v != kNoParent; v = nodes_[v].parent) up.insert(v);
  std::size_t v = y;
  while (!up.count(v)) v = nodes_[v].parent;
  return nodes_[v].diam;
}

std::vector<std::size_t> BallTree::partition(const Rational& r) const {
  if (r.sign() <= 0) raise(ErrorKind::kDomain, "radius must be positive");
  std::vector<std::size_t> out;
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    if (nodes_[v].diam < r) {
      out.push_back(v);
      return;
    }
    for (auto c : nodes_[v].children) dfs(c);
  };
  dfs(root());
  return out;
}

std::size_t BallTree::part_of(std::size_t point, const Rational& r) const {
  std::size_t v = point;
  while (nodes_[v].parent != kNoParent && nodes_[nodes_[v].parent].diam < r) v = nodes_[v].parent;
  return v;
}

BallTree dyadic_tree(std::size_t depth) {
  if (depth < 1 || depth > 16) raise(ErrorKind::kDomain, "depth must be between 1 and 16");
  BallTree t(Rational(1) / Rational(2));
  std::function<void(std::size_t, std::size_t, const std::string&)> grow = [&](std::size_t node, std::size_t level,
                                                                               const std::string& prefix) {
    for (char bit : {'0', '1'}) {
      std::string s = prefix + bit;
      if (level == depth) {
        t.add_point(node, s);
      } else {
        Rational d = Rational(1) / Rational(BigInt(BigInt(1) << static_cast<mp_bitcnt_t>(level + 1)));
        grow(t.add_ball(node, d, s), level + 1, s);
      }
    }
  };
  grow(t.root(), 1, "");
  return t;
}

BallTree random_ball_tree(std::uint64_t seed, std::size_t max_points) {
  if (max_points < 2) raise(ErrorKind::kDomain, "need room for two points");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); };
  BallTree t(Rational(static_cast<long>(pick(8, 16))));
  std::size_t budget = pick(2, max_points);
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t node, std::size_t pts) {
    // Split pts points among 2..pts children; a child gets either a point or a sub-ball.
    std::size_t k = pick(2, std::min<std::size_t>(pts, 4));
    std::vector<std::size_t> share(k, 1);
    for (std::size_t left = pts - k; left > 0; --left) ++share[pick(0, k - 1)];
    for (auto s : share) {
      if (s == 1) {
        t.add_point(node);
      } else {
        const Rational& d = t.node(node).diam;
        Rational child = d * Rational(static_cast<long>(pick(1, 7))) / Rational(8);
        grow(t.add_ball(node, child), s);
      }
    }
  };
  grow(t.root(), budget);
  return t;
}

UltraCode optimal_code(const BallTree& t, std::size_t n) {
  t.validate();
  auto pts = t.points();
  if (n < 2 || n > pts.size()) raise(ErrorKind::kDomain, "code size must lie between 2 and the number of points");
  std::set<Rational> radii;
  for (std::size_t v = 0; v < t.size(); ++v)
    if (t.node(v).diam.sign() > 0) radii.insert(t.node(v).diam);
  UltraCode code;
  for (auto it = radii.rbegin(); it != radii.rend(); ++it) {
    auto parts = t.partition(*it);
    if (parts.size() >= n) {
      code.delta = *it;
      code.parts.assign(parts.begin(), parts.begin() + static_cast<long>(n));
      break;
    }
  }
  for (auto p : code.parts) code.points.push_back(t.points_under(p).front());
  Rational m = t.distance(code.points[0], code.points[1]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m = unicorn::min(m, t.distance(code.points[i], code.points[j]));
  if (m != code.delta) raise(ErrorKind::kInternal, "representatives do not realize the partition radius");
  return code;
}

Rational brute_force_delta(const BallTree& t, std::size_t n, Budget& budget) {
  auto pts = t.points();
  if (n < 2 || n > pts.size()) raise(ErrorKind::kDomain, "code size must lie between 2 and the number of points");
  std::size_t p = pts.size();
  std::vector<std::vector<Rational>> d(p, std::vector<Rational>(p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) d[i][j] = t.distance(pts[i], pts[j]);
  std::vector<bool> sel(p, false);
  std::fill(sel.begin(), sel.begin() + static_cast<long>(n), true);
  Rational best;
  do {
    budget.charge(1);
    std::optional<Rational> m;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j)
        if (sel[i] && sel[j] && (!m || d[i][j] < *m)) m = d[i][j];
    best = unicorn::max(best, *m);
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return best;
}

bool representative_exchange_isometry(const BallTree& t, const std::vector<std::size_t>& a,
                                      const std::vector<std::size_t>& b) {
  auto min_dist = [&](const std::vector<std::size_t>& c) {
    if (c.size() < 2) raise(ErrorKind::kPrecondition, "codes need at least two points");
    Rational m = t.distance(c[0], c[1]);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (c[i] == c[j]) raise(ErrorKind::kPrecondition, "code repeats a point");
        m = unicorn::min(m, t.distance(c[i], c[j]));
      }
    return m;
  };
  Rational r = min_dist(a);
  if (min_dist(b) != r) raise(ErrorKind::kPrecondition, "codes come from partitions of different radii");
  std::map<std::size_t, std::size_t> pa, pb;
  for (auto x : a) pa[t.part_of(x, r)] = x;
  for (auto x : b) pb[t.part_of(x, r)] = x;
  std::set<std::size_t> ka, kb;
  for (auto& [k, v] : pa) ka.insert(k);
  for (auto& [k, v] : pb) kb.insert(k);
  if (ka != kb || pa.size() != a.size() || pb.size() != b.size())
    raise(ErrorKind::kPrecondition, "codes do not represent the same parts");
  for (const auto& [p, x] : pa)
    for (const auto& [q, y] : pa)
      if (t.distance(x, y) != t.distance(pb.at(p), pb.at(q))) return false;
  return true;
}

}  // namespace unicorn::ultra
