#pragma once

#include <array>
#include <compare>
#include <string>

#include "unicorn/core/interval.hpp"
#include "unicorn/core/qsqrt2.hpp"

namespace unicorn {

/// Default starting precision, in bits, for certified comparisons.
inline constexpr unsigned long kDefaultStartBits = 64;
/// Default ceiling, in bits, before a comparison gives up with a precision error.
inline constexpr unsigned long kDefaultMaxBits = 1UL << 20;

/// Exact real number c0 + c1*pi + c2*pi^2 with coefficients in Q(sqrt 2).
/// Equality is coefficient-wise; this is sound because pi is transcendental.
class PiPoly {
 public:
  PiPoly() = default;
  PiPoly(const Rational& c) : c_{QSqrt2(c), QSqrt2(), QSqrt2()} {}  // NOLINT
  PiPoly(int c) : PiPoly(Rational(c)) {}                            // NOLINT
  PiPoly(const QSqrt2& c) : c_{c, QSqrt2(), QSqrt2()} {}            // NOLINT
  PiPoly(const QSqrt2& c0, const QSqrt2& c1, const QSqrt2& c2) : c_{c0, c1, c2} {}

  static PiPoly pi() { return PiPoly(QSqrt2(), QSqrt2(1), QSqrt2()); }
  static PiPoly pi_squared() { return PiPoly(QSqrt2(), QSqrt2(), QSqrt2(1)); }

  const QSqrt2& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  bool is_rational() const;

  /// Certified enclosure of width at most 2^-bits.
  CertInterval enclose(unsigned long bits) const;
  double approx() const;
  std::string str() const;

  PiPoly operator-() const { return PiPoly(-c_[0], -c_[1], -c_[2]); }
  PiPoly& operator+=(const PiPoly& o);
  PiPoly& operator-=(const PiPoly& o);
  /// Product; raises a domain error if the degree would exceed 2.
  PiPoly& operator*=(const PiPoly& o);
  PiPoly& operator/=(const QSqrt2& s);
  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(PiPoly a, const PiPoly& b) { return a *= b; }
  friend PiPoly operator/(PiPoly a, const QSqrt2& s) { return a /= s; }
  friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const PiPoly& a, const PiPoly& b);

 private:
  std::array<QSqrt2, 3> c_;
};

/// Exact three-way comparison: -1, 0 or 1. Refines the enclosure of a - b from
/// start_bits, doubling until the sign is certified; raises a precision error
/// once max_bits is exceeded.
int compare(const PiPoly& a, const PiPoly& b, unsigned long max_bits = kDefaultMaxBits,
            unsigned long start_bits = kDefaultStartBits);

/// Enclosure of an element of Q(sqrt 2) of width at most 2^-bits.
CertInterval enclose(const QSqrt2& x, unsigned long bits);

/// arccos of selected rational inner products as an exact multiple of pi:
/// 1, 1/2, 0, -1/2, -1. Other values raise an unsupported error.
PiPoly exact_arccos(const Rational& inner_product);

}  // namespace unicorn
