#include "unicorn/seq/seq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

namespace unicorn::seq {

namespace {

Rational inv_pow(unsigned long k, unsigned long p) {
  return Rational(BigInt(1), big_pow(BigInt(static_cast<unsigned long>(k)), p));
}

Rational inv_sq(const BigInt& a) { return Rational(BigInt(1), BigInt(a * a)); }

}  // namespace

void LpSpaceSpec::validate() const {
  if (p < 1) raise(ErrorKind::kValidation, "exponent must be at least 1");
  for (auto k : listed)
    if (k == 0 || k > cutoff) raise(ErrorKind::kValidation, "listed indices must lie in 1..cutoff");
  if (listed.empty() && !tail_in_n) raise(ErrorKind::kValidation, "N must be nonempty");
}

void validate_point(const LpSpaceSpec& s, const LpPoint& x) {
  if (x.sign != 1 && x.sign != -1) raise(ErrorKind::kValidation, "sign must be +1 or -1");
  if (x.k == 0 && x.sign != 1) raise(ErrorKind::kValidation, "the origin has no sign");
  if (x.k > 0 && x.sign == -1 && !s.in_n(x.k)) raise(ErrorKind::kValidation, "negative copy exists only for indices in N");
}

Rational lp_norm_p(const LpSpaceSpec& s, const LpPoint& x) {
  validate_point(s, x);
  return x.k == 0 ? Rational(0) : inv_pow(x.k, s.p);
}

Rational lp_distance_p(const LpSpaceSpec& s, const LpPoint& a, const LpPoint& b) {
  if (a == b) return Rational(0);
  return lp_norm_p(s, a) + lp_norm_p(s, b);
}

Rational lp_min_distance_p(const LpSpaceSpec& s, const std::vector<LpPoint>& code) {
  if (code.size() < 2) raise(ErrorKind::kDomain, "minimum distance needs two points");
  Rational m = lp_distance_p(s, code[0], code[1]);
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      if (code[i] == code[j]) raise(ErrorKind::kValidation, "code repeats a point");
      m = unicorn::min(m, lp_distance_p(s, code[i], code[j]));
    }
  return m;
}

LpCode lp_optimal_code(const LpSpaceSpec& s, std::size_t n) {
  s.validate();
  if (n < 2) raise(ErrorKind::kDomain, "code size must be at least 2");
  LpCode c;
  for (unsigned long k = 1; c.points.size() < n; ++k) {
    c.points.push_back({k, 1});
    if (c.points.size() < n && s.in_n(k)) c.points.push_back({k, -1});
  }
  c.delta_p = lp_min_distance_p(s, c.points);
  return c;
}

Exchange lp_exchange_suboptimality(const LpSpaceSpec& s, const std::vector<LpPoint>& code) {
  s.validate();
  Exchange ex;
  ex.before_p = lp_min_distance_p(s, code);
  std::set<LpPoint> used(code.begin(), code.end());
  // A least-norm point: the origin if present, else the largest index.
  LpPoint x = *std::max_element(code.begin(), code.end(), [&](const LpPoint& a, const LpPoint& b) {
    return lp_norm_p(s, a) > lp_norm_p(s, b);
  });
  std::optional<LpPoint> y;
  for (unsigned long k = 1; !y && (x.k == 0 || k < x.k); ++k) {
    for (int sign : {1, -1}) {
      LpPoint cand{k, sign};
      if (sign == -1 && !s.in_n(k)) continue;
      if (!used.count(cand)) {
        y = cand;
        break;
      }
    }
  }
  if (!y) {
    ex.optimal = true;
    ex.after_p = ex.before_p;
    return ex;
  }
  ex.removed = x;
  ex.added = *y;
  for (const auto& p : code)
    if (p != x) ex.improved.push_back(p);
  ex.improved.push_back(*y);
  ex.after_p = lp_min_distance_p(s, ex.improved);
  if (ex.after_p <= ex.before_p) raise(ErrorKind::kInternal, "exchange failed to improve the code");
  return ex;
}

LpPoint lp_flip(const LpSpaceSpec& s, const std::set<unsigned long>& S, const LpPoint& x) {
  validate_point(s, x);
  for (auto k : S)
    if (!s.in_n(k)) raise(ErrorKind::kValidation, "flip set must lie inside N");
  if (x.k != 0 && S.count(x.k)) return {x.k, -x.sign};
  return x;
}

// ---- Hilbert cube ------------------------------------------------------------

PiPoly hilbert_alpha() { return PiPoly(QSqrt2(), QSqrt2(Rational(0), Rational(1) / Rational(3)), QSqrt2()); }

namespace {

PiPoly zeta2() { return PiPoly::pi_squared() / QSqrt2(6); }

}  // namespace

GreedyResult salzer_greedy(const PiPoly& x, std::size_t count, unsigned long max_bits) {
  if (compare(x, PiPoly(0), max_bits) <= 0 || compare(x, PiPoly(Rational(1) / Rational(9)), max_bits) >= 0)
    raise(ErrorKind::kDomain, "target must lie strictly between 0 and 1/9");
  GreedyResult out;
  BigInt prev = 1;
  for (std::size_t i = 0; i < count; ++i) {
    PiPoly r = x - PiPoly(out.partial);
    unsigned long bits = 64 + 4 * mpz_sizeinbase(prev.get_mpz_t(), 2);
    BigInt a;
    for (;;) {
      if (bits > max_bits) raise(ErrorKind::kPrecision, "precision ceiling reached in the greedy iteration");
      CertInterval e = r.enclose(bits);
      if (e.lo().sign() > 0) {
        BigInt lo_a, hi_a;
        BigInt inv_hi = (Rational(1) / e.hi()).floor(), inv_lo = (Rational(1) / e.lo()).floor();
        mpz_sqrt(lo_a.get_mpz_t(), inv_hi.get_mpz_t());
        mpz_sqrt(hi_a.get_mpz_t(), inv_lo.get_mpz_t());
        if (hi_a - lo_a <= 2) {
          a = lo_a;
          break;
        }
      }
      bits *= 2;
    }
    out.bits_used = std::max(out.bits_used, bits);
    if (a < 2) a = 2;
    auto below = [&](const BigInt& c) { return compare(PiPoly(inv_sq(c)), r, max_bits) < 0; };
    while (!below(a)) ++a;
    while (a > 2 && below(a - 1)) --a;
    GreedyStep st;
    st.a = a;
    st.sandwich = below(a) && compare(PiPoly(inv_sq(BigInt(a - 1))), r, max_bits) >= 0;
    out.steps.push_back(st);
    out.partial += inv_sq(a);
    prev = a;
  }
  out.residual = (x - PiPoly(out.partial)).enclose(std::max<unsigned long>(64, out.bits_used));
  return out;
}

NamedSet::NamedSet(std::vector<unsigned long> base, std::size_t terms, unsigned long max_bits)
    : base_(std::move(base)), max_bits_(max_bits) {
  std::sort(base_.begin(), base_.end());
  if (std::adjacent_find(base_.begin(), base_.end()) != base_.end())
    raise(ErrorKind::kValidation, "base indices must be distinct");
  if (!base_.empty() && base_.front() < 2) raise(ErrorKind::kValidation, "base indices must be at least 2");
  sum_ = hilbert_alpha() - PiPoly(1);
  target_ = sum_;
  for (auto k : base_) target_ -= PiPoly(inv_pow(k, 2));
  if (compare(target_, PiPoly(0), max_bits) <= 0)
    raise(ErrorKind::kValidation, "base already reaches alpha - 1");
  if (compare(target_, PiPoly(Rational(1) / Rational(9)), max_bits) >= 0)
    raise(ErrorKind::kValidation, "remainder after the base is not below 1/9");
  auto g = salzer_greedy(target_, std::max<std::size_t>(terms, 1), max_bits);
  for (const auto& s : g.steps) {
    if (!s.sandwich) raise(ErrorKind::kInternal, "greedy step failed its certificate");
    terms_.push_back(s.a);
  }
  if (!base_.empty() && terms_.front() <= base_.back())
    raise(ErrorKind::kValidation, "first greedy term does not exceed the base");
  residual_ = g.residual;
}

bool NamedSet::contains(unsigned long k) const {
  if (std::binary_search(base_.begin(), base_.end(), k)) return true;
  BigInt bk(k);
  while (terms_.back() < bk) {
    auto g = salzer_greedy(target_, terms_.size() + 1, max_bits_);
    terms_.push_back(g.steps.back().a);
  }
  return std::find(terms_.begin(), terms_.end(), bk) != terms_.end();
}

namespace {

bool follows(Rule r, unsigned long k, const NamedSet* n) {
  switch (r) {
    case Rule::kZero:
      return false;
    case Rule::kFull:
      return true;
    case Rule::kInSet:
    case Rule::kOutSet:
      if (!n) raise(ErrorKind::kValidation, "set-based coordinates need a named set");
      return n->contains(k) == (r == Rule::kInSet);
  }
  return false;
}

PiPoly default_value(Rule r, unsigned long k, const NamedSet* n) {
  return follows(r, k, n) ? PiPoly(Rational(1) / Rational(static_cast<long>(k))) : PiPoly(0);
}

PiPoly value_at(const HilbertPoint& x, unsigned long k, const NamedSet* n) {
  auto it = x.exceptional.find(k);
  return it != x.exceptional.end() ? it->second : default_value(x.rule, k, n);
}

/// Sum of 1/k^2 over the indices where the two rules differ.
PiPoly rule_difference_sum(Rule a, Rule b, const NamedSet* n) {
  if (a == b) return PiPoly(0);
  auto set_based = [](Rule r) { return r == Rule::kInSet || r == Rule::kOutSet; };
  bool all = (a == Rule::kZero && b == Rule::kFull) || (a == Rule::kFull && b == Rule::kZero) ||
             (set_based(a) && set_based(b));
  if (all) return zeta2();
  if (!n) raise(ErrorKind::kValidation, "set-based coordinates need a named set");
  // Remaining pairs differ exactly on N or exactly off N.
  bool on_n = (a == Rule::kZero && b == Rule::kInSet) || (b == Rule::kZero && a == Rule::kInSet) ||
              (a == Rule::kFull && b == Rule::kOutSet) || (b == Rule::kFull && a == Rule::kOutSet);
  return on_n ? n->sum() : zeta2() - n->sum();
}

HilbertPoint normalized(const HilbertPoint& x, const NamedSet* n) {
  HilbertPoint y{{}, x.rule};
  for (const auto& [k, v] : x.exceptional)
    if (v != default_value(x.rule, k, n)) y.exceptional.emplace(k, v);
  return y;
}

}  // namespace

void validate_hilbert_point(const HilbertPoint& x, const NamedSet* n) {
  for (const auto& [k, v] : x.exceptional) {
    if (k == 0) raise(ErrorKind::kValidation, "coordinates are indexed from 1");
    if (compare(v, PiPoly(0)) < 0 || compare(v, PiPoly(Rational(1) / Rational(static_cast<long>(k)))) > 0)
      raise(ErrorKind::kValidation, "coordinate " + std::to_string(k) + " leaves [0, 1/k]");
  }
  if ((x.rule == Rule::kInSet || x.rule == Rule::kOutSet) && !n)
    raise(ErrorKind::kValidation, "set-based coordinates need a named set");
}

PiPoly hilbert_squared_distance(const HilbertPoint& a, const HilbertPoint& b, const NamedSet* n) {
  validate_hilbert_point(a, n);
  validate_hilbert_point(b, n);
  PiPoly total = rule_difference_sum(a.rule, b.rule, n);
  std::set<unsigned long> keys;
  for (const auto& [k, v] : a.exceptional) keys.insert(k);
  for (const auto& [k, v] : b.exceptional) keys.insert(k);
  for (auto k : keys) {
    if (follows(a.rule, k, n) != follows(b.rule, k, n)) total -= PiPoly(inv_pow(k, 2));
    PiPoly d = value_at(a, k, n) - value_at(b, k, n);
    total += d * d;
  }
  return total;
}

HilbertPoint apply(const HilbertIsometry& g, const HilbertPoint& x, const NamedSet* n) {
  auto in_s = [&](unsigned long k) {
    if (g.finite.count(k)) return true;
    if (g.tail == HilbertIsometry::Tail::kAll) return true;
    if (g.tail == HilbertIsometry::Tail::kNamed) {
      if (!n) raise(ErrorKind::kValidation, "named isometry needs a named set");
      return n->contains(k);
    }
    return false;
  };
  Rule r = x.rule;
  if (g.tail == HilbertIsometry::Tail::kAll) {
    r = r == Rule::kZero ? Rule::kFull : r == Rule::kFull ? Rule::kZero : r == Rule::kInSet ? Rule::kOutSet : Rule::kInSet;
  } else if (g.tail == HilbertIsometry::Tail::kNamed) {
    r = r == Rule::kZero ? Rule::kInSet : r == Rule::kFull ? Rule::kOutSet : r == Rule::kInSet ? Rule::kZero : Rule::kFull;
  }
  HilbertPoint y{{}, r};
  std::set<unsigned long> keys(g.finite.begin(), g.finite.end());
  for (const auto& [k, v] : x.exceptional) keys.insert(k);
  for (auto k : keys) {
    PiPoly v = value_at(x, k, n);
    y.exceptional.emplace(k, in_s(k) ? PiPoly(Rational(1) / Rational(static_cast<long>(k))) - v : v);
  }
  return normalized(y, n);
}

bool same_point(const HilbertPoint& a, const HilbertPoint& b, const NamedSet* n) {
  auto x = normalized(a, n), y = normalized(b, n);
  return x.rule == y.rule && x.exceptional == y.exceptional;
}

bool same_code(const std::vector<HilbertPoint>& a, const std::vector<HilbertPoint>& b, const NamedSet* n) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && same_point(p, b[j], n)) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

namespace {

HilbertCode finish(std::vector<HilbertPoint> pts, const NamedSet* n) {
  HilbertCode c{std::move(pts), {}, false};
  for (std::size_t i = 0; i < c.points.size(); ++i)
    for (std::size_t j = i + 1; j < c.points.size(); ++j)
      c.squared_edges.push_back(hilbert_squared_distance(c.points[i], c.points[j], n));
  return c;
}

}  // namespace

HilbertCode hilbert_pair() { return finish({{{}, Rule::kZero}, {{}, Rule::kFull}}, nullptr); }

HilbertCode hilbert_triple() {
  HilbertPoint x{{}, Rule::kZero};
  HilbertPoint y{{{1, PiPoly(Rational(1) / Rational(2))}}, Rule::kFull};
  HilbertPoint z{{{1, PiPoly(1)}}, Rule::kZero};
  return finish({x, y, z}, nullptr);
}

HilbertCode hilbert_quad(const NamedSet& n) {
  if (n.contains(1)) raise(ErrorKind::kValidation, "index 1 must not belong to N");
  PiPoly half_alpha = hilbert_alpha() / QSqrt2(2);
  HilbertPoint p0{{}, Rule::kZero};
  HilbertPoint p1{{{1, PiPoly(1) - half_alpha}}, Rule::kFull};
  HilbertPoint p2{{{1, PiPoly(1)}}, Rule::kInSet};
  HilbertPoint p3{{{1, half_alpha}}, Rule::kOutSet};
  auto c = finish({p0, p1, p2, p3}, &n);
  c.conjectural = true;
  return c;
}

// ---- Truncated search ---------------------------------------------------------

TruncatedSearch truncated_hilbert_search(std::size_t dims, std::size_t n, std::size_t restarts, std::uint64_t seed) {
  if (dims < 1 || dims > 8) raise(ErrorKind::kDomain, "dimension must lie in 1..8");
  if (n < 2 || n > 6) raise(ErrorKind::kDomain, "code size must lie in 2..6");
  if (restarts < 1) raise(ErrorKind::kDomain, "need at least one restart");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  using Config = std::vector<std::vector<double>>;
  auto score = [&](const Config& c) {
    double m = std::numeric_limits<double>::infinity();
    std::size_t ties = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double s = 0;
        for (std::size_t k = 0; k < dims; ++k) s += (c[i][k] - c[j][k]) * (c[i][k] - c[j][k]);
        if (s < m - 1e-13) {
          m = s;
          ties = 1;
        } else if (s < m + 1e-13) {
          ++ties;
        }
      }
    return std::pair<double, std::size_t>{m, ties};
  };
  auto better = [](const std::pair<double, std::size_t>& a, const std::pair<double, std::size_t>& b) {
    return a.first > b.first + 1e-13 || (a.first > b.first - 1e-13 && a.second < b.second);
  };
  TruncatedSearch best;
  best.delta_sq = -1;
  for (std::size_t r = 0; r < restarts; ++r) {
    Config c(n, std::vector<double>(dims));
    for (auto& p : c)
      for (std::size_t k = 0; k < dims; ++k) p[k] = unit(rng) / static_cast<double>(k + 1);
    auto cur = score(c);
    double step = 0.5;
    for (int iter = 0; iter < 2000 && step > 1e-10; ++iter) {
      bool improved = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < dims; ++k) {
          double hi = 1.0 / static_cast<double>(k + 1);
          double old = c[i][k];
          double cands[] = {0.0, hi, old + step * hi, old - step * hi, unit(rng) * hi};
          double keep = old;
          for (double v : cands) {
            c[i][k] = std::clamp(v, 0.0, hi);
            auto s = score(c);
            if (better(s, cur)) {
              cur = s;
              keep = c[i][k];
              improved = true;
            }
          }
          c[i][k] = keep;
        }
      if (!improved) step /= 2;
    }
    if (cur.first > best.delta_sq) {
      best.delta_sq = cur.first;
      best.points = c;
    }
  }
  return best;
}

}  // namespace unicorn::seq
