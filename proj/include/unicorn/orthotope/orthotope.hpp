#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unicorn/core/error.hpp"
#include "unicorn/core/linalg.hpp"

namespace unicorn::orthotope {

/// A code in the box {0 <= x <= u} under the infinity norm.
using BoxCode = std::vector<RVec>;

/// Validates u >= 0 entrywise and, when required, integrality.
void validate_box(const RVec& u, bool require_integer);

/// Integer points of the box, in lexicographic order.
BoxCode grid_code(const RVec& u);

/// Integer points of the box scaled by delta: {delta * z} inside the box.
BoxCode scaled_grid_code(const RVec& u, const Rational& delta);

/// Minimum infinity-norm distance of a code.
Rational min_distance(const BoxCode& code);

struct UnicornSize {
  bool yes = false;
  std::vector<Rational> deltas;  // every valid delta, decreasing
  std::string reason;
};

/// n = prod(u_i / delta + 1) for some divisor delta of gcd(u)?
UnicornSize is_unicorn_size(const RVec& u, const BigInt& n);

/// prod(u_i / delta + 1), exact.
Rational volume_bound(const RVec& u, const Rational& delta);

struct BigCodeVerdict {
  Rational delta;
  bool applicable = false;   // delta > 1
  bool within_bound = true;  // |code| <= prod u_i whenever applicable
  BigInt bound;
  std::size_t size = 0;
};

BigCodeVerdict big_code_bound(const RVec& u, const BoxCode& code);

struct MinusOneDecomposition {
  bool found = false;
  std::size_t axis = 0;
  RVec anchor;  // integer point with anchor[axis] = 0
  BoxCode a;
  BoxCode b;
  bool a_reflection_invariant = false;
  std::string reason;
};

/// Decomposes a code of size prod(u_i + 1) - 1 and minimum distance 1 into a
/// grid part A and a collinear part B along some axis. Raises a precondition
/// error for inputs of the wrong size or minimum distance; returns found =
/// false with a reason when no decomposition exists.
MinusOneDecomposition verify_minus_one_structure(const RVec& u, const BoxCode& code);

/// Images of a code under every symmetry of the box (coordinate reflections
/// and permutations of coordinates with equal side length).
std::vector<BoxCode> box_symmetry_images(const RVec& u, const BoxCode& code);

/// Canonical representative of a code's class under the box symmetries.
BoxCode canonical_class(const RVec& u, const BoxCode& code);

struct OracleResult {
  Rational best_delta;
  std::vector<BoxCode> configurations;  // every attaining configuration, sorted
  std::vector<BoxCode> classes;         // one representative per symmetry class
  unsigned long long nodes = 0;
};

/// Exhaustive search over codes whose coordinates are multiples of the
/// resolution. Requires m <= 2 and n <= 16.
OracleResult brute_force_optimal(const RVec& u, std::size_t n, const Rational& resolution,
                                 Budget& budget);

}  // namespace unicorn::orthotope
