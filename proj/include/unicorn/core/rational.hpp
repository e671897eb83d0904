#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace unicorn {

using BigInt = mpz_class;

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : q_(n) {}                       // NOLINT(google-explicit-constructor)
  Rational(long n) : q_(n) {}                      // NOLINT(google-explicit-constructor)
  Rational(long long n) : q_(static_cast<long>(n)) {}     // NOLINT
  Rational(unsigned long n) : q_(n) {}             // NOLINT
  Rational(const BigInt& n) : q_(n) {}             // NOLINT
  Rational(long long n, long long d);
  Rational(const BigInt& n, const BigInt& d);
  static Rational from_mpq(const mpq_class& q) {
    Rational r;
    r.q_ = q;
    r.q_.canonicalize();
    return r;
  }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  /// "p" for integers, otherwise "p/q".
  std::string str() const;

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rational abs() const { return from_mpq(mpq_class(::abs(q_))); }
  BigInt floor() const;
  BigInt ceil() const;
  /// x - floor(x), in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }
  Rational inverse() const;
  double to_double() const { return q_.get_d(); }
  /// Integer power (negative exponents allowed for nonzero values).
  Rational pow(long e) const;

  Rational operator-() const { return from_mpq(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class q_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Greatest common divisor of rationals: the largest g with a/g, b/g integers.
Rational gcd(const Rational& a, const Rational& b);

/// True iff y / x is an integer (x nonzero).
bool divides(const Rational& x, const Rational& y);

BigInt big_gcd(const BigInt& a, const BigInt& b);
BigInt big_pow(const BigInt& base, unsigned long e);

}  // namespace unicorn

template <>
struct std::hash<unicorn::Rational> {
  std::size_t operator()(const unicorn::Rational& r) const { return r.hash(); }
};
