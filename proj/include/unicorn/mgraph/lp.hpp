#pragma once

#include <cstddef>
#include <vector>

#include "unicorn/core/error.hpp"
#include "unicorn/core/linalg.hpp"

namespace unicorn::lp {

enum class Sense { kLe, kEq, kGe };

struct Constraint {
  RVec a;
  Sense sense = Sense::kLe;
  Rational b;
};

/// maximize objective . x subject to the rows and x >= 0.
struct Program {
  std::size_t vars = 0;
  RVec objective;
  std::vector<Constraint> rows;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  Rational value;
  RVec x;
  unsigned long pivots = 0;
};

/// Exact two-phase simplex with Bland's rule.
Solution maximize(const Program& p);

/// Slack b - a.x for a row (or a.x - b for >= rows); zero for equalities.
Rational slack(const Constraint& c, const RVec& x);

}  // namespace unicorn::lp
