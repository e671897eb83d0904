#pragma once

#include <string>

#include "unicorn/core/rational.hpp"

namespace unicorn {

/// Element a + b*sqrt(2) of the quadratic field Q(sqrt 2). Ordering is exact.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(int a) : a_(a) {}              // NOLINT(google-explicit-constructor)
  QSqrt2(const Rational& a, const Rational& b) : a_(a), b_(b) {}

  static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  int sign() const;
  QSqrt2 conjugate() const { return QSqrt2(a_, -b_); }
  /// a^2 - 2 b^2.
  Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }
  QSqrt2 inverse() const;
  std::string str() const;

  QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }
  QSqrt2& operator+=(const QSqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QSqrt2& operator-=(const QSqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }
  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational a_;
  Rational b_;
};

}  // namespace unicorn
