#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "unicorn/core/code.hpp"
#include "unicorn/torus/torus.hpp"

namespace unicorn::torus {

namespace {

RMatrix scalar_matrix(std::size_t n, const Rational& c) {
  RMatrix m = identity(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = c;
  return m;
}

// Left multiplication by the quaternion q = q0 + q1 i + q2 j + q3 k.
RMatrix quaternion_left(const RVec& q) {
  const auto &a = q[0], &b = q[1], &c = q[2], &d = q[3];
  return {{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}};
}

RVec quaternion_mul(const RVec& p, const RVec& q) { return mat_vec(quaternion_left(p), q); }

RMatrix multiplier_for(const LatticeSpec& spec, const RVec& v, const Rational& scale_sq) {
  switch (spec.name) {
    case LatticeName::kA1:
      return {{v[0]}};
    case LatticeName::kA2: {
      // v = a(1,-1,0) + b(0,1,-1) corresponds to a + b w; M = aI + bW with W the
      // cyclic shift that sends (1,-1,0) to (0,1,-1).
      Rational a = v[0], b = -v[2];
      RMatrix m = scalar_matrix(3, a);
      m[0][2] += b;
      m[1][0] += b;
      m[2][1] += b;
      return m;
    }
    case LatticeName::kD4: {
      // D4 = H(1 + i) inside the Hurwitz order H, so v = q(1 + i) with q in H.
      RVec q = quaternion_mul(v, {Rational(1, 2), Rational(-1, 2), Rational(0), Rational(0)});
      bool all_int = std::all_of(q.begin(), q.end(), [](const Rational& x) { return x.is_integer(); });
      bool all_half = std::all_of(q.begin(), q.end(), [](const Rational& x) {
        return !x.is_integer() && (x * Rational(2)).is_integer();
      });
      if (!all_int && !all_half) raise(ErrorKind::kInternal, "quotient is not a Hurwitz quaternion");
      return quaternion_left(q);
    }
    case LatticeName::kE8: {
      if (!scale_sq.is_integer()) raise(ErrorKind::kInternal, "E8 norm is not integral");
      BigInt k = scale_sq.num();
      unsigned a = 0;
      while (k % 2 == 0) {
        k /= 2;
        ++a;
      }
      BigInt j;
      mpz_sqrt(j.get_mpz_t(), k.get_mpz_t());
      if (j * j != k)
        raise(ErrorKind::kUnsupported,
              "E8 lattice codes are built from the index-16 similarity and integer scalings; "
              "|z|^2 = " + scale_sq.str() + " is not of the form 2^a j^2");
      RMatrix s(8, RVec(8));
      for (std::size_t b = 0; b < 8; b += 2) {
        s[b][b] = 1;
        s[b][b + 1] = 1;
        s[b + 1][b] = 1;
        s[b + 1][b + 1] = -1;
      }
      RMatrix m = scalar_matrix(8, Rational(j));
      for (unsigned i = 0; i < a; ++i) m = mat_mul(s, m);
      return m;
    }
    case LatticeName::kLeech:
      break;
  }
  raise(ErrorKind::kUnsupported, "no multiplicative structure for this lattice");
}

}  // namespace

LatticeCode lattice_code(const LatticeSpec& spec, const RVec& v) {
  if (!in_lattice(spec, v)) raise(ErrorKind::kValidation, "z is not a lattice vector");
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); }))
    raise(ErrorKind::kValidation, "z must be nonzero");
  LatticeCode code;
  code.scale_sq = dot(v, v) / spec.min_norm_sq;
  code.multiplier = multiplier_for(spec, v, code.scale_sq);
  // Certificate: M L inside L and M is a similarity with ratio^2 = |z|^2.
  std::vector<RVec> images;
  for (const auto& b : spec.basis) {
    images.push_back(mat_vec(code.multiplier, b));
    if (!in_lattice(spec, images.back()))
      raise(ErrorKind::kInternal, "multiplier does not preserve the lattice");
  }
  for (std::size_t i = 0; i < spec.dim; ++i)
    for (std::size_t j = 0; j < spec.dim; ++j)
      if (dot(images[i], images[j]) != code.scale_sq * dot(spec.basis[i], spec.basis[j]))
        raise(ErrorKind::kInternal, "multiplier is not a similarity");
  // Index |z|^m.
  BigInt index;
  if (spec.dim == 1) {
    index = abs(v[0].num());
  } else {
    if (!code.scale_sq.is_integer()) raise(ErrorKind::kInternal, "non-integral norm");
    mpz_pow_ui(index.get_mpz_t(), code.scale_sq.num().get_mpz_t(), spec.dim / 2);
  }
  if (index > 200000) raise(ErrorKind::kResource, "lattice code of size " + index.get_str() +
                                                      " exceeds the enumeration cap 200000");
  // T = M^{-1} = M^T / |z|^2 on the span; generators T b_i of TL.
  RMatrix mt = transpose(code.multiplier);
  std::vector<RVec> gens;
  for (const auto& b : spec.basis) gens.push_back((Rational(1) / code.scale_sq) * mat_vec(mt, b));
  std::map<CosetKey, RVec> seen;
  std::deque<RVec> queue;
  RVec zero(spec.ambient_dim);
  seen.emplace(coset_key(spec, zero), zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    RVec e = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      RVec f = e + g;
      if (seen.emplace(coset_key(spec, f), f).second) queue.push_back(f);
    }
  }
  if (BigInt(static_cast<unsigned long>(seen.size())) != index)
    raise(ErrorKind::kInternal, "coset count " + std::to_string(seen.size()) +
                                    " differs from the index " + index.get_str());
  for (const auto& [k, rep] : seen) code.points.push_back(reduce_mod_lattice(spec, rep));
  std::sort(code.points.begin(), code.points.end());
  code.min_distance_sq = spec.min_norm_sq / code.scale_sq;
  return code;
}

HolyGraph holy_graph(const LatticeSpec& spec) {
  HolyGraph h;
  auto holes = deep_holes_min_norm(spec);
  h.deep_holes = holes.size();
  std::map<CosetKey, RVec> cosets;
  for (const auto& x : holes) {
    auto key = coset_key(spec, x);
    if (!cosets.count(key)) cosets.emplace(key, reduce_mod_lattice(spec, x));
  }
  RVec zero(spec.ambient_dim);
  h.reps.push_back(zero);
  std::vector<RVec> others;
  for (const auto& [k, r] : cosets) others.push_back(r);
  std::sort(others.begin(), others.end());
  for (auto& r : others) h.reps.push_back(r);
  for (const auto& r : h.reps) h.keys.push_back(coset_key(spec, r));
  std::set<CosetKey> hole_keys;
  for (const auto& [k, r] : cosets) hole_keys.insert(k);
  h.graph = graph::Graph(h.reps.size());
  for (std::size_t a = 0; a < h.reps.size(); ++a)
    for (std::size_t b = a + 1; b < h.reps.size(); ++b)
      if (hole_keys.count(coset_key(spec, h.reps[a] - h.reps[b]))) h.graph.add_edge(a, b);
  return h;
}

CliqueList max_cliques(const HolyGraph& g, Budget& budget) {
  auto mc = graph::maximum_cliques(g.graph, budget);
  return {mc.clique_number, mc.cliques};
}

bool minus_one_extension(const HolyGraph& g, Budget& budget) {
  return graph::every_near_maximum_clique_extends(g.graph, budget);
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Action {
  std::vector<std::vector<std::size_t>> reflections;  // vertex permutations
  std::vector<std::vector<std::size_t>> diff;         // diff[a][b] = vertex of a - b
};

Action build_action(const LatticeSpec& spec, const HolyGraph& g) {
  std::map<CosetKey, std::size_t> index;
  for (std::size_t i = 0; i < g.keys.size(); ++i) index.emplace(g.keys[i], i);
  Action act;
  for (const auto& r : spec.minimal_vectors) {
    // r and -r give the same reflection; keep the one with positive leading entry.
    auto lead = std::find_if(r.begin(), r.end(), [](const Rational& x) { return !x.is_zero(); });
    if (lead->sign() < 0) continue;
    std::vector<std::size_t> perm;
    for (const auto& rep : g.reps) {
      auto it = index.find(coset_key(spec, reflect(rep, r)));
      if (it == index.end()) raise(ErrorKind::kInternal, "reflection left the holy graph");
      perm.push_back(it->second);
    }
    act.reflections.push_back(std::move(perm));
  }
  std::size_t n = g.reps.size();
  act.diff.assign(n, std::vector<std::size_t>(n, kNone));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(coset_key(spec, g.reps[a] - g.reps[b]));
      if (it != index.end()) act.diff[a][b] = it->second;
    }
  return act;
}

using Clique = std::vector<std::size_t>;

Clique apply_perm(const std::vector<std::size_t>& perm, const Clique& c) {
  Clique out;
  for (auto v : c) out.push_back(perm[v]);
  std::sort(out.begin(), out.end());
  return out;
}

Clique translate(const Action& act, const Clique& c, std::size_t by) {
  Clique out;
  for (auto v : c) {
    auto d = act.diff[v][by];
    if (d == kNone) raise(ErrorKind::kInternal, "translate left the holy graph");
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Clique sorted_clique(Clique c) {
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

OrbitPartition clique_orbit(const LatticeSpec& spec, const HolyGraph& g,
                            const std::vector<std::vector<std::size_t>>& cliques) {
  Action act = build_action(spec, g);
  std::map<Clique, std::size_t> where;
  for (std::size_t i = 0; i < cliques.size(); ++i) where.emplace(sorted_clique(cliques[i]), i);
  OrbitPartition part;
  part.reflections = act.reflections.size();
  std::vector<bool> done(cliques.size(), false);
  for (std::size_t start = 0; start < cliques.size(); ++start) {
    if (done[start]) continue;
    std::vector<std::size_t> orbit;
    std::deque<Clique> queue = {sorted_clique(cliques[start])};
    std::set<Clique> seen = {queue.front()};
    while (!queue.empty()) {
      Clique c = queue.front();
      queue.pop_front();
      ++part.visited;
      auto it = where.find(c);
      if (it == where.end())
        raise(ErrorKind::kInternal, "orbit reached a clique missing from the input list");
      if (!done[it->second]) {
        done[it->second] = true;
        orbit.push_back(it->second);
      }
      std::vector<Clique> next;
      for (const auto& perm : act.reflections) next.push_back(apply_perm(perm, c));
      for (auto v : c) next.push_back(translate(act, c, v));
      for (auto& n : next)
        if (seen.insert(n).second) queue.push_back(std::move(n));
    }
    std::sort(orbit.begin(), orbit.end());
    part.orbits.push_back(std::move(orbit));
  }
  return part;
}

RandomWalk random_walk_orbit(const LatticeSpec& spec, const HolyGraph& g,
                             const std::vector<std::vector<std::size_t>>& cliques,
                             std::uint64_t seed, std::size_t steps) {
  if (cliques.empty()) raise(ErrorKind::kDomain, "random walk needs at least one clique");
  Action act = build_action(spec, g);
  std::mt19937_64 rng(seed);
  std::set<Clique> seen;
  Clique c = sorted_clique(cliques[0]);
  seen.insert(c);
  RandomWalk walk;
  for (std::size_t s = 1; s <= steps; ++s) {
    std::uniform_int_distribution<std::size_t> pick_r(0, act.reflections.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_t(0, c.size() - 1);
    c = apply_perm(act.reflections[pick_r(rng)], c);
    c = translate(act, c, c[pick_t(rng)]);
    seen.insert(c);
    if (!walk.first_full_cover && seen.size() == cliques.size()) walk.first_full_cover = s;
    walk.steps = s;
  }
  walk.distinct_visited = seen.size();
  return walk;
}

bool clique_is_equidistant(const LatticeSpec& spec, const HolyGraph& g,
                           const std::vector<std::size_t>& clique) {
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (torus_distance_sq(spec, g.reps[clique[i]], g.reps[clique[j]]) != spec.covering_radius_sq)
        return false;
  return true;
}

}  // namespace unicorn::torus
