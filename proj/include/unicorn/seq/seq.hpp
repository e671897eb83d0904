#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "unicorn/core/error.hpp"
#include "unicorn/core/interval.hpp"
#include "unicorn/core/pipoly.hpp"
#include "unicorn/core/rational.hpp"

namespace unicorn::seq {

// ---- The l^p example ------------------------------------------------------

/// Index set N: explicit members up to `cutoff`, then all or none beyond it.
/// Distances are reported as p-th powers, exact for integer p.
struct LpSpaceSpec {
  std::set<unsigned long> listed;
  unsigned long cutoff = 0;
  bool tail_in_n = false;
  unsigned long p = 2;

  bool in_n(unsigned long k) const { return k <= cutoff ? listed.count(k) > 0 : tail_in_n; }
  void validate() const;
};

/// 0 when k == 0, otherwise (1/k) e_(k, sign).
struct LpPoint {
  unsigned long k = 0;
  int sign = 1;
  friend auto operator<=>(const LpPoint&, const LpPoint&) = default;
};

void validate_point(const LpSpaceSpec& s, const LpPoint& x);
Rational lp_norm_p(const LpSpaceSpec& s, const LpPoint& x);
Rational lp_distance_p(const LpSpaceSpec& s, const LpPoint& a, const LpPoint& b);
Rational lp_min_distance_p(const LpSpaceSpec& s, const std::vector<LpPoint>& code);

struct LpCode {
  std::vector<LpPoint> points;
  Rational delta_p;
};

/// The n points of largest norm (the + sign first when a pair is split).
LpCode lp_optimal_code(const LpSpaceSpec& s, std::size_t n);

struct Exchange {
  bool optimal = false;           // code already has largest-norm form
  LpPoint removed, added;
  std::vector<LpPoint> improved;
  Rational before_p, after_p;     // min distances (p-th powers)
};

/// Swaps a least-norm point for an unused point of larger norm, or certifies
/// that none exists.
Exchange lp_exchange_suboptimality(const LpSpaceSpec& s, const std::vector<LpPoint>& code);

/// g_S: flips the sign of every point whose index lies in S (S inside N).
LpPoint lp_flip(const LpSpaceSpec& s, const std::set<unsigned long>& S, const LpPoint& x);

// ---- The Hilbert cube -------------------------------------------------------

/// Index set N with sum of 1/k^2 equal to alpha - 1: a finite base followed by
/// the greedy unit-fraction continuation.
class NamedSet {
 public:
  NamedSet(std::vector<unsigned long> base, std::size_t terms, unsigned long max_bits = kDefaultMaxBits);
  const std::vector<unsigned long>& base() const { return base_; }
  const std::vector<BigInt>& greedy_terms() const { return terms_; }
  /// The exact value of the full series.
  const PiPoly& sum() const { return sum_; }
  /// Certified enclosure of sum() minus the partial sum over the known members.
  const CertInterval& residual() const { return residual_; }
  /// Membership; extends the greedy sequence when k lies beyond the known terms.
  bool contains(unsigned long k) const;

 private:
  std::vector<unsigned long> base_;
  mutable std::vector<BigInt> terms_;
  PiPoly sum_;
  PiPoly target_;
  CertInterval residual_;
  unsigned long max_bits_;
};

/// alpha = sqrt(2) pi / 3.
PiPoly hilbert_alpha();

enum class Rule { kZero, kFull, kInSet, kOutSet };

/// A point whose coordinates follow `rule` (1/k or 0 per index, the set rules
/// refer to a NamedSet) except at finitely many listed indices.
struct HilbertPoint {
  std::map<unsigned long, PiPoly> exceptional;
  Rule rule = Rule::kZero;
};

PiPoly hilbert_squared_distance(const HilbertPoint& a, const HilbertPoint& b, const NamedSet* n = nullptr);
void validate_hilbert_point(const HilbertPoint& x, const NamedSet* n = nullptr);

/// g_S for S = finite ∪ (N, all of the naturals, or nothing).
struct HilbertIsometry {
  std::set<unsigned long> finite;
  enum class Tail { kNone, kNamed, kAll } tail = Tail::kNone;
};
HilbertPoint apply(const HilbertIsometry& g, const HilbertPoint& x, const NamedSet* n = nullptr);
/// Equality of the represented sequences.
bool same_point(const HilbertPoint& a, const HilbertPoint& b, const NamedSet* n = nullptr);
bool same_code(const std::vector<HilbertPoint>& a, const std::vector<HilbertPoint>& b, const NamedSet* n = nullptr);

struct HilbertCode {
  std::vector<HilbertPoint> points;
  std::vector<PiPoly> squared_edges;  // pairs in order (0,1), (0,2), ...
  bool conjectural = false;
};

HilbertCode hilbert_pair();
HilbertCode hilbert_triple();
/// The size-4 construction built from N. Labelled conjectural.
HilbertCode hilbert_quad(const NamedSet& n);

struct GreedyStep {
  BigInt a;
  bool sandwich = false;  // 1/a^2 < x - x_prev <= 1/(a-1)^2, certified
};

struct GreedyResult {
  std::vector<GreedyStep> steps;
  Rational partial;
  CertInterval residual;  // encloses x - partial
  unsigned long bits_used = 0;
};

/// Unit-fraction greedy for x in (0, 1/9): a_k is the least integer with
/// x_{k-1} + 1/a_k^2 < x.
GreedyResult salzer_greedy(const PiPoly& x, std::size_t count, unsigned long max_bits = kDefaultMaxBits);

// ---- Numerical search on truncations -----------------------------------------

struct TruncatedSearch {
  std::vector<std::vector<double>> points;
  double delta_sq = 0;
};

/// Multistart coordinate-wise maximin ascent over prod [0, 1/k], k = 1..dims.
TruncatedSearch truncated_hilbert_search(std::size_t dims, std::size_t n, std::size_t restarts, std::uint64_t seed);

}  // namespace unicorn::seq
