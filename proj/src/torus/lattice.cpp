#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "unicorn/core/code.hpp"
#include "unicorn/torus/torus.hpp"

namespace unicorn::torus {

LatticeName parse_lattice_name(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "a1") return LatticeName::kA1;
  if (t == "a2") return LatticeName::kA2;
  if (t == "d4") return LatticeName::kD4;
  if (t == "e8") return LatticeName::kE8;
  if (t == "leech" || t == "l24" || t == "lambda24") return LatticeName::kLeech;
  raise(ErrorKind::kValidation, "unknown lattice '" + s + "' (expected a1, a2, d4, e8)");
}

std::string lattice_name_str(LatticeName name) {
  switch (name) {
    case LatticeName::kA1: return "A1";
    case LatticeName::kA2: return "A2";
    case LatticeName::kD4: return "D4";
    case LatticeName::kE8: return "E8";
    case LatticeName::kLeech: return "Leech";
  }
  return "?";
}

namespace {

RVec ivec(std::initializer_list<long> xs) {
  RVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Integer vector scaled by a common factor K (even, multiple of every denominator).
struct Scaled {
  long k = 2;
  std::vector<long> x;
};

long checked_long(const BigInt& b, const char* what) {
  if (!b.fits_slong_p() || abs(b) > BigInt(1L << 40))
    raise(ErrorKind::kDomain, std::string(what) + " is too large for exact enumeration");
  return b.get_si();
}

Scaled scale(const RVec& x) {
  BigInt k = 2;
  for (const auto& c : x) k = lcm(k, c.den());
  Scaled s;
  s.k = checked_long(k, "denominator");
  if (s.k > (1L << 24)) raise(ErrorKind::kDomain, "denominator too large for exact enumeration");
  for (const auto& c : x) s.x.push_back(checked_long((c * Rational(k)).num(), "coordinate"));
  return s;
}

long isqrt(long n) {
  if (n < 0) return -1;
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }

struct Enumerator {
  const LatticeSpec& spec;
  const Scaled& s;
  long glue = 0;
  std::vector<long> cur;
  std::vector<std::vector<long>> out;

  void run(std::size_t i, long rem, long sum) {
    std::size_t n = s.x.size();
    if (i == n) {
      if (spec.even_sum && ((sum % (2 * s.k)) + 2 * s.k) % (2 * s.k) != 0) return;
      if (spec.zero_sum && sum != 0) return;
      out.push_back(cur);
      return;
    }
    long xi = s.x[i];
    if (spec.zero_sum && i + 1 == n) {
      long v = -sum;
      long d = xi - v;
      if (d * d <= rem) {
        cur[i] = v;
        run(i + 1, rem - d * d, sum + v);
      }
      return;
    }
    long r = isqrt(rem);
    long lo = ceil_div(xi - glue - r, s.k), hi = floor_div(xi - glue + r, s.k);
    for (long t = lo; t <= hi; ++t) {
      long v = s.k * t + glue;
      long d = xi - v;
      if (d * d > rem) continue;
      cur[i] = v;
      run(i + 1, rem - d * d, sum + v);
    }
  }
};

void validate_point(const LatticeSpec& spec, const RVec& x) {
  if (x.size() != spec.ambient_dim)
    raise(ErrorKind::kValidation, "point has " + std::to_string(x.size()) +
                                      " coordinates, lattice " + lattice_name_str(spec.name) +
                                      " needs " + std::to_string(spec.ambient_dim));
  if (!in_span(spec, x))
    raise(ErrorKind::kValidation, "point is outside the span of " + lattice_name_str(spec.name));
}

}  // namespace

bool in_span(const LatticeSpec& spec, const RVec& x) {
  if (x.size() != spec.ambient_dim) return false;
  if (!spec.zero_sum) return true;
  Rational s;
  for (const auto& c : x) s += c;
  return s.is_zero();
}

bool in_lattice(const LatticeSpec& spec, const RVec& x) {
  if (!in_span(spec, x)) return false;
  bool all_int = true, all_half = true;
  Rational s;
  for (const auto& c : x) {
    s += c;
    if (!c.is_integer()) all_int = false;
    if (!(c * Rational(2)).is_integer() || c.is_integer()) all_half = false;
  }
  if (!(all_int || (spec.half_glue && all_half))) return false;
  if (spec.even_sum && !(s / Rational(2)).is_integer()) return false;
  return true;
}

std::vector<RVec> lattice_points_near(const LatticeSpec& spec, const RVec& x,
                                      const Rational& bound_sq) {
  validate_point(spec, x);
  if (bound_sq.sign() < 0) return {};
  Scaled s = scale(x);
  Rational scaled_bound = bound_sq * Rational(s.k) * Rational(s.k);
  BigInt rem_big = scaled_bound.floor();
  if (rem_big > BigInt(1L << 60)) raise(ErrorKind::kDomain, "search radius is too large for exact enumeration");
  long rem = rem_big.get_si();
  std::vector<RVec> res;
  std::vector<long> glues = {0};
  if (spec.half_glue) glues.push_back(s.k / 2);
  for (long g : glues) {
    Enumerator e{spec, s, g, std::vector<long>(s.x.size()), {}};
    e.run(0, rem, 0);
    for (const auto& v : e.out) {
      RVec r;
      for (long c : v) r.push_back(Rational(c) / Rational(s.k));
      res.push_back(std::move(r));
    }
  }
  std::sort(res.begin(), res.end());
  return res;
}

ClosestVectors closest_vectors(const LatticeSpec& spec, const RVec& x) {
  auto pts = lattice_points_near(spec, x, spec.covering_radius_sq);
  if (pts.empty()) raise(ErrorKind::kInternal, "no lattice point within the covering radius");
  ClosestVectors cv;
  cv.dist_sq = squared_distance(x, pts[0]);
  for (const auto& p : pts) {
    Rational d = squared_distance(x, p);
    if (d < cv.dist_sq) {
      cv.dist_sq = d;
      cv.points.clear();
    }
    if (d == cv.dist_sq) cv.points.push_back(p);
  }
  return cv;
}

RVec reduce_mod_lattice(const LatticeSpec& spec, const RVec& x) {
  auto cv = closest_vectors(spec, x);
  RVec best = x - cv.points[0];
  for (const auto& p : cv.points) best = std::min(best, x - p);
  return best;
}

CosetKey coset_key(const LatticeSpec& spec, const RVec& x) {
  validate_point(spec, x);
  std::size_t n = spec.key_columns.size();
  CosetKey key(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational c;
    for (std::size_t i = 0; i < n; ++i) c += x[spec.key_columns[i]] * spec.key_inverse[i][j];
    key[j] = c.frac();
  }
  return key;
}

Rational torus_distance_sq(const LatticeSpec& spec, const RVec& x, const RVec& y) {
  return closest_vectors(spec, x - y).dist_sq;
}

bool is_deep_hole(const LatticeSpec& spec, const RVec& x) {
  return closest_vectors(spec, x).dist_sq == spec.covering_radius_sq;
}

LatticeSpec build_lattice(LatticeName name) {
  LatticeSpec s;
  s.name = name;
  switch (name) {
    case LatticeName::kA1:
      s.ambient_dim = s.dim = 1;
      s.basis = {ivec({1})};
      s.min_norm_sq = 1;
      s.n_l = 2;
      break;
    case LatticeName::kA2:
      s.ambient_dim = 3;
      s.dim = 2;
      s.basis = {ivec({1, -1, 0}), ivec({0, 1, -1})};
      s.min_norm_sq = 2;
      s.zero_sum = true;
      s.n_l = 3;
      break;
    case LatticeName::kD4:
      s.ambient_dim = s.dim = 4;
      s.basis = {ivec({1, 1, 0, 0}), ivec({1, -1, 0, 0}), ivec({0, 1, -1, 0}), ivec({0, 0, 1, -1})};
      s.min_norm_sq = 2;
      s.even_sum = true;
      s.n_l = 4;
      break;
    case LatticeName::kE8: {
      s.ambient_dim = s.dim = 8;
      s.basis.push_back(ivec({2, 0, 0, 0, 0, 0, 0, 0}));
      for (std::size_t i = 0; i < 6; ++i) {
        RVec r(8);
        r[i] = -1;
        r[i + 1] = 1;
        s.basis.push_back(r);
      }
      s.basis.push_back(RVec(8, Rational(1, 2)));
      s.min_norm_sq = 2;
      s.even_sum = true;
      s.half_glue = true;
      s.n_l = 16;
      break;
    }
    case LatticeName::kLeech:
      raise(ErrorKind::kUnsupported,
            "the Leech lattice is available only as a size-set predicate; its deep holes are "
            "out of scope");
  }
  // R^2 = l^2 / r where r^m = n_L^2.
  long target = static_cast<long>(s.n_l * s.n_l), root = 1;
  while (true) {
    long p = 1;
    for (std::size_t i = 0; i < s.dim; ++i) p *= root;
    if (p == target) break;
    if (p > target) raise(ErrorKind::kInternal, "n_L^2 is not an m-th power");
    ++root;
  }
  s.covering_radius_sq = s.min_norm_sq / Rational(root);
  if (s.zero_sum) s.key_columns = {0, 2};
  else {
    s.key_columns.resize(s.ambient_dim);
    std::iota(s.key_columns.begin(), s.key_columns.end(), 0);
  }
  RMatrix sub(s.dim, RVec(s.dim));
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) sub[i][j] = s.basis[i][s.key_columns[j]];
  s.key_inverse = inverse(sub);
  for (const auto& v : lattice_points_near(s, RVec(s.ambient_dim), s.min_norm_sq))
    if (dot(v, v) == s.min_norm_sq) s.minimal_vectors.push_back(v);
  return s;
}

std::vector<RVec> sweep_deep_holes(const LatticeSpec& spec, const Rational& step) {
  if (step.sign() <= 0) raise(ErrorKind::kDomain, "sweep step must be positive");
  // Grid points y = step * t with |y|^2 = R^2.
  Rational target = spec.covering_radius_sq / (step * step);
  if (!target.is_integer()) return {};
  long t2 = checked_long(target.num(), "sweep radius");
  long r = isqrt(t2);
  std::size_t n = spec.ambient_dim;
  std::vector<long> cur(n);
  std::vector<RVec> out;
  auto rec = [&](auto&& self, std::size_t i, long rem, long sum) -> void {
    if (i == n) {
      if (rem != 0 || (spec.zero_sum && sum != 0)) return;
      RVec y;
      for (long c : cur) y.push_back(step * Rational(c));
      if (is_deep_hole(spec, y)) out.push_back(y);
      return;
    }
    long lim = std::min(r, isqrt(rem));
    for (long c = -lim; c <= lim; ++c) {
      cur[i] = c;
      self(self, i + 1, rem - c * c, sum + c);
    }
  };
  rec(rec, 0, t2, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RVec> deep_holes_min_norm(const LatticeSpec& spec) {
  std::vector<RVec> out;
  switch (spec.name) {
    case LatticeName::kA1:
    case LatticeName::kA2:
      return sweep_deep_holes(spec, Rational(1, 6));
    case LatticeName::kD4: {
      for (std::size_t i = 0; i < 4; ++i)
        for (int sg : {1, -1}) {
          RVec v(4);
          v[i] = sg;
          out.push_back(v);
        }
      for (unsigned m = 0; m < 16; ++m) {
        RVec v;
        for (unsigned i = 0; i < 4; ++i) v.push_back(Rational((m >> i) & 1 ? -1 : 1, 2));
        out.push_back(v);
      }
      break;
    }
    case LatticeName::kE8: {
      for (std::size_t i = 0; i < 8; ++i)
        for (int sg : {1, -1}) {
          RVec v(8);
          v[i] = sg;
          out.push_back(v);
        }
      for (unsigned supp = 0; supp < 256; ++supp) {
        if (__builtin_popcount(supp) != 4) continue;
        for (unsigned m = 0; m < 16; ++m) {
          RVec v(8);
          unsigned k = 0;
          for (unsigned i = 0; i < 8; ++i)
            if (supp >> i & 1) v[i] = Rational((m >> k++) & 1 ? -1 : 1, 2);
          out.push_back(v);
        }
      }
      for (std::size_t big = 0; big < 8; ++big)
        for (unsigned m = 0; m < 256; ++m) {
          if (__builtin_popcount(m) % 2 == 0) continue;
          RVec v(8);
          for (unsigned i = 0; i < 8; ++i)
            v[i] = Rational(((m >> i) & 1 ? -1 : 1) * (i == big ? 3 : 1), 4);
          out.push_back(v);
        }
      break;
    }
    case LatticeName::kLeech:
      raise(ErrorKind::kUnsupported, "Leech deep holes are out of scope");
  }
  for (const auto& h : out) {
    if (dot(h, h) != spec.covering_radius_sq || !is_deep_hole(spec, h))
      raise(ErrorKind::kInternal, "listed deep hole failed certification");
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt theta_count_e8(const BigInt& k) {
  if (k < 1) raise(ErrorKind::kDomain, "theta count needs k >= 1");
  if (k > BigInt(1L << 40)) raise(ErrorKind::kDomain, "k too large for divisor enumeration");
  BigInt sigma = 0;
  long kk = k.get_si();
  for (long d = 1; d * d <= kk; ++d) {
    if (kk % d) continue;
    BigInt a = d, b = kk / d;
    sigma += a * a * a;
    if (a != b) sigma += b * b * b;
  }
  return 240 * sigma;
}

BigInt theta_count_e8_enumerated(long k) {
  if (k < 1 || k > 6) raise(ErrorKind::kDomain, "enumeration supports 1 <= k <= 6");
  auto spec = build_lattice(LatticeName::kE8);
  Rational n(2 * k);
  BigInt c = 0;
  for (const auto& v : lattice_points_near(spec, RVec(8), n))
    if (dot(v, v) == n) ++c;
  return c;
}

namespace {

std::vector<std::pair<BigInt, unsigned>> factor(const BigInt& n) {
  if (n < 1) raise(ErrorKind::kDomain, "factorization needs a positive integer");
  if (n > BigInt("1000000000000000000"))
    raise(ErrorKind::kDomain, "integer too large for trial division");
  std::vector<std::pair<BigInt, unsigned>> f;
  BigInt m = n;
  for (BigInt p = 2; p * p <= m; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (m > 1) f.emplace_back(m, 1);
  return f;
}

bool perfect_power(const BigInt& n, unsigned k) {
  BigInt r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), k);
  return p == n;
}

}  // namespace

bool loeschian(const BigInt& n) {
  if (n < 0) return false;
  if (n == 0) return true;
  for (const auto& [p, e] : factor(n))
    if (p % 3 == 2 && e % 2) return false;
  return true;
}

bool nprime_member(const BigInt& n) {
  if (n < 1) raise(ErrorKind::kDomain, "n must be positive");
  for (const auto& [p, e] : factor(n)) {
    if (p % 3 == 1) return false;
    if (p % 3 == 2 && e % 2) return false;
  }
  return true;
}

bool size_set_member(LatticeName name, const BigInt& n) {
  if (n < 1) raise(ErrorKind::kDomain, "n must be positive");
  switch (name) {
    case LatticeName::kA1: return true;
    case LatticeName::kA2: return loeschian(n);
    case LatticeName::kD4: return perfect_power(n, 2);
    case LatticeName::kE8: return perfect_power(n, 4);
    case LatticeName::kLeech: return perfect_power(n, 12);
  }
  return false;
}

A2NormOrbits a2_norm_orbit(const BigInt& n) {
  if (n < 1 || !loeschian(n)) raise(ErrorKind::kDomain, "n is not a Loeschian number");
  if (n > BigInt(1L << 40)) raise(ErrorKind::kDomain, "n too large to enumerate");
  long nn = n.get_si();
  long lim = isqrt(4 * nn / 3) + 1;
  std::vector<std::pair<long, long>> elems;
  for (long a = -lim; a <= lim; ++a)
    for (long b = -lim; b <= lim; ++b)
      if (a * a - a * b + b * b == nn) elems.emplace_back(a, b);
  std::set<std::pair<long, long>> seen;
  A2NormOrbits res;
  res.elements = elems.size();
  for (const auto& e : elems) {
    if (seen.count(e)) continue;
    ++res.orbits;
    res.representatives.push_back(e);
    std::vector<std::pair<long, long>> stack = {e};
    seen.insert(e);
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      for (auto nb : {std::make_pair(a - b, a), std::make_pair(a - b, -b)})
        if (seen.insert(nb).second) stack.push_back(nb);
    }
  }
  return res;
}

RVec reflect(const RVec& x, const RVec& r) {
  Rational c = Rational(2) * dot(x, r) / dot(r, r);
  return x - c * r;
}

}  // namespace unicorn::torus
