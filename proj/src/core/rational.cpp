#include "unicorn/core/rational.hpp"

#include <cctype>

#include "unicorn/core/error.hpp"

namespace unicorn {

Rational::Rational(long long n, long long d)
    : Rational(BigInt(static_cast<long>(n)), BigInt(static_cast<long>(d))) {}

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) raise(ErrorKind::kDomain, "rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  trim(s);
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string n = slash == std::string::npos ? s : s.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(n);
  trim(d);
  if (!n.empty() && n[0] == '+') n.erase(n.begin());
  if (!d.empty() && d[0] == '+') d.erase(d.begin());
  if (!valid_int(n, true) || !valid_int(d, true))
    raise(ErrorKind::kValidation, "malformed rational '" + std::string(text) + "'");
  BigInt den(d);
  if (den == 0) raise(ErrorKind::kValidation, "zero denominator in '" + std::string(text) + "'");
  return Rational(BigInt(n), den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigInt Rational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigInt Rational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) raise(ErrorKind::kDomain, "inverse of zero");
  return from_mpq(mpq_class(1 / q_));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) raise(ErrorKind::kDomain, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  std::size_t h1 = std::hash<std::string>{}(q_.get_num().get_str(16));
  std::size_t h2 = mpz_get_ui(q_.get_den_mpz_t());
  return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt big_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational gcd(const Rational& a, const Rational& b) {
  // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s), normalized by the constructor.
  BigInt num = big_gcd(a.num() * b.den(), b.num() * a.den());
  return Rational(num, a.den() * b.den());
}

bool divides(const Rational& x, const Rational& y) {
  if (x.is_zero()) return false;
  return (y / x).is_integer();
}

}  // namespace unicorn
