#pragma once

#include <string>

#include "unicorn/core/rational.hpp"

namespace unicorn {

/// Closed interval [lo, hi] with rational endpoints that is known to contain
/// some real number.
class CertInterval {
 public:
  CertInterval() = default;
  explicit CertInterval(const Rational& point) : lo_(point), hi_(point) {}
  CertInterval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(double x) const;
  /// True iff the interval lies strictly above / below zero.
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }

  /// Outward rounding of both endpoints to multiples of 2^-bits.
  CertInterval round_out(unsigned long bits) const;

  CertInterval operator-() const { return CertInterval(-hi_, -lo_); }
  friend CertInterval operator+(const CertInterval& a, const CertInterval& b) {
    return CertInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend CertInterval operator-(const CertInterval& a, const CertInterval& b) {
    return CertInterval(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend CertInterval operator*(const CertInterval& a, const CertInterval& b);
  friend CertInterval operator*(const Rational& s, const CertInterval& a);

  std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

 private:
  Rational lo_;
  Rational hi_;
};

/// Enclosure of pi of width at most 2^-bits (Machin formula with a tail bound).
/// Results are memoized per precision.
CertInterval pi_enclosure(unsigned long bits);

/// Enclosure of sqrt(2) of width at most 2^-bits.
CertInterval sqrt2_enclosure(unsigned long bits);

/// Enclosure of sqrt(x) for rational x >= 0, width at most 2^-bits.
CertInterval sqrt_enclosure(const Rational& x, unsigned long bits);

}  // namespace unicorn
