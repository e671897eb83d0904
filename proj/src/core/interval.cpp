#include "unicorn/core/interval.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "unicorn/core/error.hpp"

namespace unicorn {

CertInterval::CertInterval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (hi_ < lo_) raise(ErrorKind::kInternal, "interval with lo > hi");
}

bool CertInterval::contains(double x) const {
  if (!std::isfinite(x)) return false;
  Rational r = Rational::from_mpq(mpq_class(x));
  return contains(r);
}

CertInterval CertInterval::round_out(unsigned long bits) const {
  BigInt scale = big_pow(BigInt(2), bits);
  Rational lo(BigInt((lo_ * Rational(scale)).floor()), scale);
  Rational hi(BigInt((hi_ * Rational(scale)).ceil()), scale);
  return CertInterval(lo, hi);
}

CertInterval operator*(const CertInterval& a, const CertInterval& b) {
  Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
  return CertInterval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

CertInterval operator*(const Rational& s, const CertInterval& a) {
  if (s.sign() >= 0) return CertInterval(s * a.lo_, s * a.hi_);
  return CertInterval(s * a.hi_, s * a.lo_);
}

namespace {

// floor(2^p * atan(1/x)) up to an additive error bounded by the returned slack.
struct FixedAtan {
  BigInt value;
  BigInt slack;
};

FixedAtan atan_inverse_fixed(unsigned long x, unsigned long p) {
  BigInt one = big_pow(BigInt(2), p);
  BigInt x2 = BigInt(x) * BigInt(x);
  BigInt power = one / BigInt(x);  // floor(2^p / x^(2k+1)), error < 2 per step
  BigInt sum = 0;
  unsigned long k = 0;
  while (power != 0) {
    BigInt term = power / BigInt(2 * k + 1);
    if (k % 2 == 0) sum += term; else sum -= term;
    power /= x2;
    ++k;
  }
  // Each term carries truncation error below 3 units; the series tail is below
  // the first omitted term, which is < 1 unit once power reaches zero.
  return {sum, BigInt(3 * (k + 1) + 1)};
}

struct PiCache {
  std::mutex mutex;
  std::map<unsigned long, CertInterval> entries;
};

PiCache& pi_cache() {
  static PiCache cache;
  return cache;
}

}  // namespace

CertInterval pi_enclosure(unsigned long bits) {
  PiCache& cache = pi_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.entries.find(bits);
    if (it != cache.entries.end()) return it->second;
  }
  unsigned long guard = 32;
  for (;;) {
    unsigned long p = bits + guard;
    FixedAtan a5 = atan_inverse_fixed(5, p);
    FixedAtan a239 = atan_inverse_fixed(239, p);
    BigInt centre = BigInt(16 * a5.value) - BigInt(4 * a239.value);
    BigInt slack = BigInt(16 * a5.slack) + BigInt(4 * a239.slack);
    BigInt scale = big_pow(BigInt(2), p);
    CertInterval raw(Rational(BigInt(centre - slack), scale), Rational(BigInt(centre + slack), scale));
    CertInterval out = raw.round_out(bits + 2);
    if (out.width() <= Rational(BigInt(1), big_pow(BigInt(2), bits))) {
      std::lock_guard<std::mutex> lock(cache.mutex);
      cache.entries.emplace(bits, out);
      return out;
    }
    guard *= 2;
  }
}

CertInterval sqrt_enclosure(const Rational& x, unsigned long bits) {
  if (x.sign() < 0) raise(ErrorKind::kDomain, "square root of a negative rational");
  // floor(sqrt(x * 4^b)) / 2^b <= sqrt(x) < (floor(...) + 1) / 2^b.
  BigInt scale = big_pow(BigInt(2), bits);
  Rational scaled = x * Rational(BigInt(scale * scale));
  BigInt f = scaled.floor();
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), f.get_mpz_t());
  return CertInterval(Rational(root, scale), Rational(BigInt(root + 1), scale));
}

CertInterval sqrt2_enclosure(unsigned long bits) { return sqrt_enclosure(Rational(2), bits); }

}  // namespace unicorn
