#include "unicorn/core/pipoly.hpp"

#include "unicorn/core/error.hpp"

namespace unicorn {

int PiPoly::degree() const {
  for (int i = 2; i >= 0; --i)
    if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

bool PiPoly::is_rational() const { return degree() <= 0 && c_[0].is_rational(); }

PiPoly& PiPoly::operator+=(const PiPoly& o) {
  for (std::size_t i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
  for (std::size_t i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

PiPoly& PiPoly::operator*=(const PiPoly& o) {
  std::array<QSqrt2, 5> r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!c_[i].is_zero() && !o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
  if (!r[3].is_zero() || !r[4].is_zero())
    raise(ErrorKind::kDomain, "product exceeds degree 2 in pi");
  c_ = {r[0], r[1], r[2]};
  return *this;
}

PiPoly& PiPoly::operator/=(const QSqrt2& s) {
  QSqrt2 inv = s.inverse();
  for (auto& c : c_) c *= inv;
  return *this;
}

std::strong_ordering operator<=>(const PiPoly& a, const PiPoly& b) {
  int c = compare(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

CertInterval enclose(const QSqrt2& x, unsigned long bits) {
  if (x.is_rational()) return CertInterval(x.rational_part());
  unsigned long q = bits + 4;
  for (;;) {
    CertInterval r = CertInterval(x.rational_part()) + x.sqrt2_part() * sqrt2_enclosure(q);
    if (r.width() <= Rational(BigInt(1), big_pow(BigInt(2), bits))) return r;
    q *= 2;
  }
}

CertInterval PiPoly::enclose(unsigned long bits) const {
  if (degree() <= 0) return unicorn::enclose(c_[0], bits);
  Rational target(BigInt(1), big_pow(BigInt(2), bits));
  unsigned long q = bits + 8;
  for (;;) {
    CertInterval pi = pi_enclosure(q);
    CertInterval pi2 = pi * pi;
    CertInterval r = unicorn::enclose(c_[0], q) + unicorn::enclose(c_[1], q) * pi +
                     unicorn::enclose(c_[2], q) * pi2;
    r = r.round_out(bits + 4);
    if (r.width() <= target) return r;
    q += q / 2 + 16;
  }
}

double PiPoly::approx() const { return enclose(64).midpoint().to_double(); }

std::string PiPoly::str() const {
  std::string out;
  const char* names[3] = {"", "*pi", "*pi^2"};
  for (std::size_t i = 0; i < 3; ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].str() + ")" + names[i];
  }
  return out.empty() ? "0" : out;
}

int compare(const PiPoly& a, const PiPoly& b, unsigned long max_bits, unsigned long start_bits) {
  PiPoly d = a - b;
  if (d.is_zero()) return 0;
  if (d.degree() == 0) return d.coeff(0).sign();
  for (unsigned long bits = start_bits; bits <= max_bits; bits *= 2) {
    CertInterval e = d.enclose(bits);
    if (e.positive()) return 1;
    if (e.negative()) return -1;
  }
  raise(ErrorKind::kPrecision,
        "comparison undecided at " + std::to_string(max_bits) + " bits; raise the precision budget");
}

PiPoly exact_arccos(const Rational& ip) {
  if (ip == Rational(1)) return PiPoly(0);
  if (ip == Rational(1, 2)) return PiPoly::pi() / QSqrt2(3);
  if (ip == Rational(0)) return PiPoly::pi() / QSqrt2(2);
  if (ip == Rational(-1, 2)) return PiPoly(QSqrt2(), QSqrt2(Rational(2, 3)), QSqrt2());
  if (ip == Rational(-1)) return PiPoly::pi();
  raise(ErrorKind::kUnsupported, "arccos(" + ip.str() + ") is not a rational multiple of pi here");
}

}  // namespace unicorn
