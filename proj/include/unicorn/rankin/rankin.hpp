#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "unicorn/core/linalg.hpp"

namespace unicorn::rankin {

/// Gram matrix of unit vectors: symmetric, unit diagonal, positive semidefinite.
class GramMatrix {
 public:
  /// Validates symmetry, unit diagonal, PSD and (when given) rank <= d.
  static GramMatrix from_matrix(RMatrix m, std::optional<std::size_t> d = std::nullopt);
  /// Exact inner products of rational unit vectors.
  static GramMatrix from_coordinates(const std::vector<RVec>& points);

  std::size_t size() const { return m_.size(); }
  const RMatrix& matrix() const { return m_; }
  const Rational& at(std::size_t i, std::size_t j) const { return m_[i][j]; }
  std::size_t rank() const { return rank_; }
  /// Largest off-diagonal entry (n >= 2).
  Rational max_offdiag() const;

 private:
  RMatrix m_;
  std::size_t rank_ = 0;
};

struct RankinReport {
  std::size_t n = 0;
  std::size_t d = 0;
  Rational max_offdiag;
  Rational simplex_bound;  // -1/(n-1)
  bool simplex_ok = false;
  bool simplex_equality = false;
  bool orthoplex_applies = false;  // n >= d + 2
  bool orthoplex_ok = false;
  bool orthoplex_equality = false;
};

RankinReport check_rankin(const GramMatrix& gram, std::size_t d);

struct OrthoplexDecomposition {
  std::vector<std::size_t> x0;
  std::vector<std::vector<std::size_t>> parts;  // sorted by (size, smallest index)
  std::size_t rank = 0;
  std::size_t l() const { return parts.size(); }
};

/// Splits a configuration at orthoplex equality into an orthonormal-type
/// leftover X0 and simplex-like parts X1..Xl, then verifies the structural
/// conclusions. Raises a precondition error if the largest off-diagonal entry
/// is not exactly 0, and an internal error if a block's kernel does not have
/// the expected shape.
OrthoplexDecomposition orthoplex_decompose(const GramMatrix& gram);

/// Randomized orthogonal direct sum of simplices plus an orthonormal leftover
/// set, with indices shuffled. Used to exercise decomposition round trips.
struct DirectSumInstance {
  GramMatrix gram;
  std::vector<std::size_t> x0;
  std::vector<std::vector<std::size_t>> parts;
  std::size_t dimension = 0;
};
DirectSumInstance random_direct_sum(std::size_t max_dim, std::uint64_t seed);

/// Standard configurations in R^d.
std::vector<RVec> orthoplex_vertices(std::size_t d);
GramMatrix regular_simplex_gram(std::size_t n);

}  // namespace unicorn::rankin
