#pragma once

#include <cstddef>
#include <vector>

#include "unicorn/core/rational.hpp"

namespace unicorn {

using RVec = std::vector<Rational>;
using RMatrix = std::vector<RVec>;

Rational dot(const RVec& a, const RVec& b);
RVec operator+(const RVec& a, const RVec& b);
RVec operator-(const RVec& a, const RVec& b);
RVec operator*(const Rational& s, const RVec& a);
RVec mat_vec(const RMatrix& m, const RVec& v);
RMatrix mat_mul(const RMatrix& a, const RMatrix& b);
RMatrix transpose(const RMatrix& m);
RMatrix identity(std::size_t n);

/// Row echelon form computed by fraction-free (Bareiss) elimination after
/// clearing denominators row by row.
struct Echelon {
  std::vector<std::vector<BigInt>> rows;  // echelon rows, zero rows dropped
  std::vector<std::size_t> pivot_cols;
};
Echelon fraction_free_echelon(const RMatrix& m);

std::size_t rank(const RMatrix& m);

/// Basis of the right null space {x : m x = 0}. Each basis vector is scaled to a
/// primitive integer vector whose first nonzero entry is positive.
RMatrix null_space(const RMatrix& m, std::size_t cols);

/// Exact positive-semidefiniteness test for a symmetric matrix.
bool is_psd(const RMatrix& m);

/// Inverse of a square nonsingular matrix; raises a domain error if singular.
RMatrix inverse(const RMatrix& m);

/// Principal submatrix on the given index list.
RMatrix principal(const RMatrix& m, const std::vector<std::size_t>& idx);

}  // namespace unicorn
