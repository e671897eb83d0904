#include "unicorn/rankin/rankin.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "unicorn/core/error.hpp"

namespace unicorn::rankin {

GramMatrix GramMatrix::from_matrix(RMatrix m, std::optional<std::size_t> d) {
  std::size_t n = m.size();
  if (n == 0) raise(ErrorKind::kValidation, "empty Gram matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) raise(ErrorKind::kValidation, "Gram matrix is not square");
    if (m[i][i] != Rational(1))
      raise(ErrorKind::kValidation, "Gram diagonal entry " + std::to_string(i) + " is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) raise(ErrorKind::kValidation, "Gram matrix is not symmetric");
  }
  if (!is_psd(m)) raise(ErrorKind::kValidation, "Gram matrix is not positive semidefinite");
  GramMatrix g;
  g.m_ = std::move(m);
  g.rank_ = unicorn::rank(g.m_);
  if (d && g.rank_ > *d)
    raise(ErrorKind::kValidation, "Gram rank " + std::to_string(g.rank_) +
                                      " exceeds dimension " + std::to_string(*d));
  return g;
}

GramMatrix GramMatrix::from_coordinates(const std::vector<RVec>& points) {
  RMatrix m(points.size(), RVec(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (dot(points[i], points[i]) != Rational(1))
      raise(ErrorKind::kValidation, "point " + std::to_string(i) + " is not a unit vector");
    for (std::size_t j = 0; j < points.size(); ++j) m[i][j] = dot(points[i], points[j]);
  }
  std::size_t dim = points.empty() ? 0 : points[0].size();
  return from_matrix(std::move(m), dim);
}

Rational GramMatrix::max_offdiag() const {
  if (size() < 2) raise(ErrorKind::kDomain, "need at least two points");
  Rational best = m_[0][1];
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) best = max(best, m_[i][j]);
  return best;
}

RankinReport check_rankin(const GramMatrix& gram, std::size_t d) {
  RankinReport r;
  r.n = gram.size();
  r.d = d;
  if (gram.rank() > d) raise(ErrorKind::kValidation, "Gram rank exceeds dimension");
  r.max_offdiag = gram.max_offdiag();
  r.simplex_bound = Rational(-1, static_cast<long long>(r.n - 1));
  r.simplex_ok = r.max_offdiag >= r.simplex_bound;
  r.simplex_equality = r.max_offdiag == r.simplex_bound;
  r.orthoplex_applies = r.n >= d + 2;
  r.orthoplex_ok = !r.orthoplex_applies || r.max_offdiag.sign() >= 0;
  r.orthoplex_equality = r.orthoplex_applies && r.max_offdiag.is_zero();
  return r;
}

namespace {

std::vector<std::vector<std::size_t>> support_components(const GramMatrix& g) {
  std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.at(i, j).is_zero()) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> comps;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return comps;
}

}  // namespace

OrthoplexDecomposition orthoplex_decompose(const GramMatrix& gram) {
  if (gram.size() < 2) raise(ErrorKind::kPrecondition, "need at least two points");
  if (!gram.max_offdiag().is_zero())
    raise(ErrorKind::kPrecondition,
          "configuration is not at orthoplex equality: largest off-diagonal entry is " +
              gram.max_offdiag().str());
  OrthoplexDecomposition out;
  out.rank = gram.rank();
  for (const auto& comp : support_components(gram)) {
    RMatrix block = principal(gram.matrix(), comp);
    RMatrix kernel = null_space(block, comp.size());
    if (kernel.empty()) {
      out.x0.insert(out.x0.end(), comp.begin(), comp.end());
      continue;
    }
    if (kernel.size() > 1)
      raise(ErrorKind::kInternal, "component kernel has dimension " +
                                      std::to_string(kernel.size()) + "; expected at most 1");
    for (const auto& v : kernel[0])
      if (v.sign() <= 0)
        raise(ErrorKind::kInternal, "component dependency does not have full positive support");
    out.parts.push_back(comp);
  }
  std::sort(out.x0.begin(), out.x0.end());
  std::sort(out.parts.begin(), out.parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });

  // Structural conclusions.
  if (rank(principal(gram.matrix(), out.x0)) != out.x0.size())
    raise(ErrorKind::kInternal, "leftover block is not of full rank");
  for (const auto& part : out.parts)
    if (rank(principal(gram.matrix(), part)) + 1 != part.size())
      raise(ErrorKind::kInternal, "part rank is not size minus one");
  std::vector<long> owner(gram.size(), -1);
  for (std::size_t p = 0; p < out.parts.size(); ++p)
    for (auto i : out.parts[p]) owner[i] = static_cast<long>(p);
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j)
      if (owner[i] >= 0 && owner[i] != owner[j] && !gram.at(i, j).is_zero())
        raise(ErrorKind::kInternal, "cross block between parts is nonzero");
  std::size_t n = gram.size();
  if (out.l() + out.rank < n) raise(ErrorKind::kInternal, "part count below n - rank");
  if (n > 2 * out.rank) raise(ErrorKind::kInternal, "configuration exceeds twice its rank");
  return out;
}

DirectSumInstance random_direct_sum(std::size_t max_dim, std::uint64_t seed) {
  if (max_dim < 2) raise(ErrorKind::kDomain, "dimension must be at least 2");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::size_t dim = 0;
  std::vector<std::size_t> sizes;  // 1 = orthonormal leftover point
  // At least two blocks, so that some cross inner product is 0.
  while (sizes.size() < 2) {
    dim = uniform(2, max_dim);
    sizes.clear();
    std::size_t used = 0;
    while (used < dim) {
      std::size_t room = dim - used;
      std::size_t s = uniform(1, room + 1);
      sizes.push_back(s);
      used += s == 1 ? 1 : s - 1;
    }
  }
  std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  RMatrix g = identity(n);
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t off = 0;
  for (auto s : sizes) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), off);
    blocks.push_back(idx);
    off += s;
    if (s == 1) continue;
    // A = weighted average of symmetrized s-cycles: symmetric, doubly
    // stochastic, zero diagonal, connected; G = I - A then has kernel span(1).
    std::size_t cycles = uniform(1, 3);
    std::vector<long long> weights(cycles);
    long long total = 0;
    for (auto& w : weights) total += (w = static_cast<long long>(uniform(1, 5)));
    for (std::size_t c = 0; c < cycles; ++c) {
      std::vector<std::size_t> perm(s);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Rational w(weights[c], total);
      for (std::size_t k = 0; k < s; ++k) {
        std::size_t a = idx[perm[k]], b = idx[perm[(k + 1) % s]];
        Rational contrib = w / Rational(2);
        g[a][b] -= contrib;
        g[b][a] -= contrib;
      }
    }
  }
  std::vector<std::size_t> shuffle(n);
  std::iota(shuffle.begin(), shuffle.end(), 0);
  std::shuffle(shuffle.begin(), shuffle.end(), rng);
  RMatrix h(n, RVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[shuffle[i]][shuffle[j]] = g[i][j];
  DirectSumInstance inst{GramMatrix::from_matrix(h, dim), {}, {}, dim};
  for (const auto& b : blocks) {
    std::vector<std::size_t> mapped;
    for (auto i : b) mapped.push_back(shuffle[i]);
    std::sort(mapped.begin(), mapped.end());
    if (b.size() == 1) inst.x0.push_back(mapped[0]); else inst.parts.push_back(mapped);
  }
  std::sort(inst.x0.begin(), inst.x0.end());
  std::sort(inst.parts.begin(), inst.parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return inst;
}

std::vector<RVec> orthoplex_vertices(std::size_t d) {
  std::vector<RVec> pts;
  for (std::size_t i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      RVec v(d);
      v[i] = s;
      pts.push_back(v);
    }
  return pts;
}

GramMatrix regular_simplex_gram(std::size_t n) {
  RMatrix m(n, RVec(n, Rational(-1, static_cast<long long>(n - 1))));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return GramMatrix::from_matrix(std::move(m));
}

}  // namespace unicorn::rankin
