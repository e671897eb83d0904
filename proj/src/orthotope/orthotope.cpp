#include "unicorn/orthotope/orthotope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "unicorn/core/code.hpp"
#include "unicorn/graph/cliques.hpp"

namespace unicorn::orthotope {

void validate_box(const RVec& u, bool require_integer) {
  if (u.empty()) raise(ErrorKind::kValidation, "box must have at least one dimension");
  for (const auto& x : u) {
    if (x.sign() < 0) raise(ErrorKind::kValidation, "box side lengths must be nonnegative");
    if (require_integer && !x.is_integer())
      raise(ErrorKind::kValidation, "box side lengths must be integers here");
  }
}

namespace {

void lattice_points(const std::vector<BigInt>& counts, const Rational& step, std::size_t dim,
                    RVec& cur, BoxCode& out) {
  if (dim == counts.size()) {
    out.push_back(cur);
    return;
  }
  for (BigInt k = 0; k <= counts[dim]; ++k) {
    cur[dim] = step * Rational(k);
    lattice_points(counts, step, dim + 1, cur, out);
  }
}

}  // namespace

BoxCode scaled_grid_code(const RVec& u, const Rational& delta) {
  validate_box(u, false);
  if (delta.sign() <= 0) raise(ErrorKind::kDomain, "delta must be positive");
  std::vector<BigInt> counts;
  for (const auto& x : u) counts.push_back((x / delta).floor());
  BoxCode out;
  RVec cur(u.size());
  lattice_points(counts, delta, 0, cur, out);
  return out;
}

BoxCode grid_code(const RVec& u) {
  validate_box(u, true);
  return scaled_grid_code(u, Rational(1));
}

Rational min_distance(const BoxCode& code) {
  if (code.size() < 2) raise(ErrorKind::kDomain, "minimum distance needs at least two points");
  Rational best = chebyshev_distance(code[0], code[1]);
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      best = unicorn::min(best, chebyshev_distance(code[i], code[j]));
  return best;
}

Rational volume_bound(const RVec& u, const Rational& delta) {
  if (delta.sign() <= 0) raise(ErrorKind::kDomain, "delta must be positive");
  Rational p(1);
  for (const auto& x : u) p *= x / delta + Rational(1);
  return p;
}

UnicornSize is_unicorn_size(const RVec& u, const BigInt& n) {
  validate_box(u, false);
  UnicornSize res;
  if (n < 2) raise(ErrorKind::kDomain, "size must be at least 2");
  Rational g;
  for (const auto& x : u)
    if (x.sign() > 0) g = g.is_zero() ? x : gcd(g, x);
  if (g.is_zero()) {
    res.reason = "box is a single point";
    return res;
  }
  // Divisors of g are g/k; the product is strictly increasing in k.
  for (BigInt k = 1;; ++k) {
    Rational delta = g / Rational(k);
    Rational prod = volume_bound(u, delta);
    if (prod > Rational(n)) break;
    if (prod == Rational(n)) res.deltas.push_back(delta);
  }
  res.yes = !res.deltas.empty();
  if (!res.yes) res.reason = "no divisor of gcd(u) gives the product " + n.get_str();
  return res;
}

BigCodeVerdict big_code_bound(const RVec& u, const BoxCode& code) {
  validate_box(u, true);
  for (const auto& x : u)
    if (x.sign() <= 0) raise(ErrorKind::kValidation, "big code bound needs positive side lengths");
  BigCodeVerdict v;
  v.delta = min_distance(code);
  v.size = code.size();
  v.bound = 1;
  for (const auto& x : u) v.bound *= x.num();
  v.applicable = v.delta > Rational(1);
  v.within_bound = !v.applicable || BigInt(static_cast<unsigned long>(v.size)) <= v.bound;
  return v;
}

namespace {

bool in_box(const RVec& u, const RVec& p) {
  if (p.size() != u.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (p[i].sign() < 0 || p[i] > u[i]) return false;
  return true;
}

bool integral(const RVec& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_integer(); });
}

BoxCode sorted(BoxCode c) {
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

MinusOneDecomposition verify_minus_one_structure(const RVec& u, const BoxCode& code) {
  validate_box(u, true);
  std::size_t positive = 0;
  BigInt full = 1;
  for (const auto& x : u) {
    if (x.sign() > 0) ++positive;
    full *= x.num() + 1;
  }
  if (positive < 2) raise(ErrorKind::kPrecondition, "need at least two positive side lengths");
  if (BigInt(static_cast<unsigned long>(code.size())) != full - 1)
    raise(ErrorKind::kPrecondition, "code size must be prod(u_i + 1) - 1 = " +
                                        BigInt(full - 1).get_str());
  for (const auto& p : code)
    if (!in_box(u, p)) raise(ErrorKind::kPrecondition, "code point outside the box");
  if (std::set<RVec>(code.begin(), code.end()).size() != code.size())
    raise(ErrorKind::kPrecondition, "code points are not distinct");
  Rational delta = min_distance(code);
  if (delta != Rational(1))
    raise(ErrorKind::kPrecondition, "code is not optimal: minimum distance " + delta.str() +
                                        " but 1 is achievable");

  MinusOneDecomposition res;
  std::size_t m = u.size();
  for (std::size_t axis = 0; axis < m && !res.found; ++axis) {
    if (u[axis].sign() == 0) continue;
    // Anchors: integer points of the face x_axis = 0, lexicographic.
    RVec face_u = u;
    face_u[axis] = 0;
    for (const RVec& anchor : grid_code(face_u)) {
      BoxCode a, b;
      for (const auto& p : code) {
        bool on_line = true;
        for (std::size_t j = 0; j < m && on_line; ++j)
          if (j != axis && p[j] != anchor[j]) on_line = false;
        (on_line ? b : a).push_back(p);
      }
      if (Rational(static_cast<long>(b.size())) != u[axis]) continue;
      if (!std::all_of(a.begin(), a.end(), integral)) continue;
      res.found = true;
      res.axis = axis;
      res.anchor = anchor;
      res.a = sorted(a);
      res.b = sorted(b);
      break;
    }
  }
  if (!res.found) {
    res.reason = "no axis-aligned line splits the code into a grid part and a collinear part";
    return res;
  }
  BoxCode reflected;
  for (auto p : res.a) {
    p[res.axis] = u[res.axis] - p[res.axis];
    reflected.push_back(p);
  }
  res.a_reflection_invariant = sorted(reflected) == res.a;
  BigInt expect_a = full - (u[res.axis].num() + 1);
  if (BigInt(static_cast<unsigned long>(res.a.size())) != expect_a)
    raise(ErrorKind::kInternal, "grid part has unexpected size");
  return res;
}

std::vector<BoxCode> box_symmetry_images(const RVec& u, const BoxCode& code) {
  std::size_t m = u.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<BoxCode> images;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i)
      if (u[perm[i]] != u[i]) ok = false;
    if (!ok) continue;
    for (unsigned flips = 0; flips < (1U << m); ++flips) {
      BoxCode img;
      for (const auto& p : code) {
        RVec q(m);
        for (std::size_t i = 0; i < m; ++i) {
          q[i] = p[perm[i]];
          if (flips & (1U << i)) q[i] = u[i] - q[i];
        }
        img.push_back(q);
      }
      images.push_back(sorted(img));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return images;
}

BoxCode canonical_class(const RVec& u, const BoxCode& code) {
  auto images = box_symmetry_images(u, code);
  return *std::min_element(images.begin(), images.end());
}

OracleResult brute_force_optimal(const RVec& u, std::size_t n, const Rational& resolution,
                                 Budget& budget) {
  validate_box(u, false);
  if (u.size() > 2) raise(ErrorKind::kDomain, "oracle supports at most two dimensions");
  if (n < 2 || n > 16) raise(ErrorKind::kDomain, "oracle supports sizes 2..16");
  if (resolution.sign() <= 0) raise(ErrorKind::kDomain, "resolution must be positive");
  std::vector<long> steps;
  long max_steps = 0;
  for (const auto& x : u) {
    Rational k = x / resolution;
    if (!k.is_integer()) raise(ErrorKind::kDomain, "side lengths must be multiples of the resolution");
    steps.push_back(k.num().get_si());
    max_steps = std::max(max_steps, steps.back());
  }
  std::vector<std::vector<long>> pts;
  if (u.size() == 1) {
    for (long a = 0; a <= steps[0]; ++a) pts.push_back({a});
  } else {
    for (long a = 0; a <= steps[0]; ++a)
      for (long b = 0; b <= steps[1]; ++b) pts.push_back({a, b});
  }
  auto cheb = [](const std::vector<long>& p, const std::vector<long>& q) {
    long d = 0;
    for (std::size_t i = 0; i < p.size(); ++i) d = std::max(d, std::labs(p[i] - q[i]));
    return d;
  };
  auto compat_graph = [&](long dmin) {
    graph::Graph g(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (cheb(pts[i], pts[j]) >= dmin) g.add_edge(i, j);
    return g;
  };
  OracleResult res;
  if (pts.size() < n) raise(ErrorKind::kDomain, "fewer grid points than the requested size");
  // Largest feasible separation, by binary search (feasibility is monotone).
  long lo = 1, hi = std::max<long>(max_steps, 1);
  while (lo < hi) {
    long mid = (lo + hi + 1) / 2;
    if (graph::has_clique_of_size(compat_graph(mid), n, budget)) lo = mid; else hi = mid - 1;
  }
  graph::Graph g = compat_graph(lo);
  res.best_delta = resolution * Rational(lo);
  std::set<BoxCode> classes;
  graph::for_each_clique_of_size(g, n, budget, [&](const std::vector<std::size_t>& c) {
    BoxCode code;
    for (auto i : c) {
      RVec p;
      for (long x : pts[i]) p.push_back(resolution * Rational(x));
      code.push_back(p);
    }
    code = sorted(code);
    classes.insert(canonical_class(u, code));
    res.configurations.push_back(std::move(code));
    return true;
  });
  std::sort(res.configurations.begin(), res.configurations.end());
  res.classes.assign(classes.begin(), classes.end());
  res.nodes = budget.used();
  return res;
}

}  // namespace unicorn::orthotope
