#include "unicorn/core/qsqrt2.hpp"

#include "unicorn/core/error.hpp"

namespace unicorn {

int QSqrt2::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2 (never equal since sqrt 2 is irrational).
  Rational lhs = a_ * a_;
  Rational rhs = Rational(2) * b_ * b_;
  return lhs > rhs ? sa : sb;
}

QSqrt2 QSqrt2::inverse() const {
  if (is_zero()) raise(ErrorKind::kDomain, "inverse of zero in Q(sqrt 2)");
  Rational n = norm();
  return QSqrt2(a_ / n, -b_ / n);
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

std::string QSqrt2::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
  return s + b_.str() + "*sqrt2";
}

}  // namespace unicorn
