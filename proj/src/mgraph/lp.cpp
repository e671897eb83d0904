#include "unicorn/mgraph/lp.hpp"

namespace unicorn::lp {

namespace {

struct Tableau {
  std::vector<RVec> t;  // m rows, cols columns
  RVec rhs;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;
  unsigned long pivots = 0;

  void pivot(std::size_t r, std::size_t c) {
    ++pivots;
    Rational inv = t[r][c].inverse();
    for (auto& x : t[r])
      if (!x.is_zero()) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c].is_zero()) continue;
      Rational f = t[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (!t[r][j].is_zero()) t[i][j] -= f * t[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Returns false if unbounded.
  bool optimize(const RVec& cost, const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols && enter == cols; ++j) {
        if (!allowed[j]) continue;
        Rational r = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i)
          if (!t[i][j].is_zero()) r -= cost[basis[i]] * t[i][j];
        if (r.sign() > 0) enter = j;
      }
      if (enter == cols) return true;
      std::size_t leave = t.size();
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter].sign() <= 0) continue;
        Rational ratio = rhs[i] / t[i][enter];
        if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Rational slack(const Constraint& c, const RVec& x) {
  Rational ax = dot(c.a, x);
  switch (c.sense) {
    case Sense::kLe: return c.b - ax;
    case Sense::kGe: return ax - c.b;
    case Sense::kEq: return Rational(0);
  }
  return Rational(0);
}

Solution maximize(const Program& p) {
  if (p.objective.size() != p.vars) raise(ErrorKind::kInternal, "objective size mismatch");
  std::size_t m = p.rows.size(), n = p.vars;
  // Normalize to nonnegative right-hand sides.
  std::vector<Constraint> rows = p.rows;
  for (auto& r : rows) {
    if (r.a.size() != n) raise(ErrorKind::kInternal, "constraint size mismatch");
    if (r.b.sign() < 0) {
      for (auto& x : r.a) x = -x;
      r.b = -r.b;
      if (r.sense == Sense::kLe) r.sense = Sense::kGe;
      else if (r.sense == Sense::kGe) r.sense = Sense::kLe;
    }
  }
  std::size_t slacks = 0, arts = 0;
  for (const auto& r : rows) {
    if (r.sense != Sense::kEq) ++slacks;
    if (r.sense != Sense::kLe) ++arts;
  }
  Tableau tab;
  tab.cols = n + slacks + arts;
  tab.t.assign(m, RVec(tab.cols));
  tab.rhs.resize(m);
  tab.basis.resize(m);
  std::size_t s = n, a = n + slacks;
  std::vector<bool> is_art(tab.cols, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = rows[i].a[j];
    tab.rhs[i] = rows[i].b;
    if (rows[i].sense == Sense::kLe) {
      tab.t[i][s] = 1;
      tab.basis[i] = s++;
    } else {
      if (rows[i].sense == Sense::kGe) tab.t[i][s++] = -1;
      tab.t[i][a] = 1;
      is_art[a] = true;
      tab.basis[i] = a++;
    }
  }
  Solution sol;
  if (arts) {
    RVec cost(tab.cols);
    for (std::size_t j = 0; j < tab.cols; ++j)
      if (is_art[j]) cost[j] = -1;
    std::vector<bool> all(tab.cols, true);
    tab.optimize(cost, all);
    Rational infeas;
    for (std::size_t i = 0; i < m; ++i)
      if (is_art[tab.basis[i]]) infeas += tab.rhs[i];
    if (infeas.sign() > 0) {
      sol.status = Status::kInfeasible;
      sol.pivots = tab.pivots;
      return sol;
    }
    // Drive remaining artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.t.size();) {
      if (!is_art[tab.basis[i]]) {
        ++i;
        continue;
      }
      std::size_t col = tab.cols;
      for (std::size_t j = 0; j < n + slacks && col == tab.cols; ++j)
        if (!tab.t[i][j].is_zero()) col = j;
      if (col != tab.cols) {
        tab.pivot(i, col);
        ++i;
      } else {
        tab.t.erase(tab.t.begin() + static_cast<long>(i));
        tab.rhs.erase(tab.rhs.begin() + static_cast<long>(i));
        tab.basis.erase(tab.basis.begin() + static_cast<long>(i));
      }
    }
  }
  RVec cost(tab.cols);
  for (std::size_t j = 0; j < n; ++j) cost[j] = p.objective[j];
  std::vector<bool> allowed(tab.cols, true);
  for (std::size_t j = 0; j < tab.cols; ++j)
    if (is_art[j]) allowed[j] = false;
  bool bounded = tab.optimize(cost, allowed);
  sol.pivots = tab.pivots;
  if (!bounded) {
    sol.status = Status::kUnbounded;
    return sol;
  }
  sol.status = Status::kOptimal;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.rhs[i];
  sol.value = dot(p.objective, sol.x);
  return sol;
}

}  // namespace unicorn::lp
