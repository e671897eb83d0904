#include "unicorn/core/linalg.hpp"

#include "unicorn/core/error.hpp"

namespace unicorn {

Rational dot(const RVec& a, const RVec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec operator+(const RVec& a, const RVec& b) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVec operator-(const RVec& a, const RVec& b) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVec operator*(const Rational& s, const RVec& a) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

RVec mat_vec(const RMatrix& m, const RVec& v) {
  RVec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

RMatrix mat_mul(const RMatrix& a, const RMatrix& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  RMatrix r(n, RVec(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

RMatrix transpose(const RMatrix& m) {
  if (m.empty()) return {};
  RMatrix t(m[0].size(), RVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RMatrix identity(std::size_t n) {
  RMatrix m(n, RVec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Echelon fraction_free_echelon(const RMatrix& m) {
  std::vector<std::vector<BigInt>> a;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (const auto& row : m) {
    BigInt l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    std::vector<BigInt> r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = row[j].num() * (l / row[j].den());
    a.push_back(std::move(r));
  }
  Echelon out;
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RMatrix& m) { return fraction_free_echelon(m).pivot_cols.size(); }

RMatrix null_space(const RMatrix& m, std::size_t cols) {
  Echelon e = fraction_free_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  RMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RVec x(cols);
    x[free] = 1;
    // Back substitution over the echelon rows.
    for (std::size_t k = e.rows.size(); k-- > 0;) {
      std::size_t pc = e.pivot_cols[k];
      Rational s;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (!x[j].is_zero() && e.rows[k][j] != 0) s += Rational(e.rows[k][j]) * x[j];
      x[pc] = -s / Rational(e.rows[k][pc]);
    }
    // Scale to a primitive integer vector with positive leading entry.
    BigInt l = 1, g = 0;
    for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    for (auto& v : x) {
      v *= Rational(l);
      g = big_gcd(g, v.num());
    }
    int lead = 0;
    for (const auto& v : x)
      if (!v.is_zero()) { lead = v.sign(); break; }
    Rational scale = Rational(BigInt(lead), g);
    for (auto& v : x) v *= scale;
    basis.push_back(std::move(x));
  }
  return basis;
}

bool is_psd(const RMatrix& m0) {
  RMatrix m = m0;
  std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    int s = m[k][k].sign();
    if (s < 0) return false;
    if (s == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (!m[k][j].is_zero()) return false;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

RMatrix inverse(const RMatrix& m0) {
  std::size_t n = m0.size();
  RMatrix a = m0;
  RMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) raise(ErrorKind::kDomain, "singular matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rational p = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

RMatrix principal(const RMatrix& m, const std::vector<std::size_t>& idx) {
  RMatrix r(idx.size(), RVec(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r[i][j] = m[idx[i]][idx[j]];
  return r;
}

}  // namespace unicorn
