#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unicorn/core/error.hpp"
#include "unicorn/core/linalg.hpp"
#include "unicorn/graph/cliques.hpp"

namespace unicorn::torus {

enum class LatticeName { kA1, kA2, kD4, kE8, kLeech };

/// Accepts "a1", "A2", "d4", "E8", "leech" and "L24" (case-insensitive).
LatticeName parse_lattice_name(const std::string& s);
std::string lattice_name_str(LatticeName name);

/// A root lattice in concrete integer coordinates.
///   A1 = Z, A2 = {x in Z^3 : sum x = 0}, D4 = {x in Z^4 : sum x even},
///   E8 = {x in Z^8 or (Z + 1/2)^8 : sum x even}.
struct LatticeSpec {
  LatticeName name = LatticeName::kA1;
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;
  RMatrix basis;                 // dim rows of length ambient_dim
  Rational min_norm_sq;          // l(L)^2
  Rational covering_radius_sq;   // R^2 = l^2 * n_L^(-2/m)
  std::size_t n_l = 0;           // smallest nontrivial lattice-code size
  std::vector<RVec> minimal_vectors;

  bool half_glue = false;  // admits the all-halves coset
  bool even_sum = false;   // coordinate sum must be even
  bool zero_sum = false;   // coordinate sum must vanish
  std::vector<std::size_t> key_columns;
  RMatrix key_inverse;     // inverse of the basis restricted to key_columns
};

LatticeSpec build_lattice(LatticeName name);

/// x lies in the linear span of the lattice (the sum-zero plane for A2).
bool in_span(const LatticeSpec& spec, const RVec& x);
bool in_lattice(const LatticeSpec& spec, const RVec& x);

/// Every lattice vector v with |x - v|^2 <= bound_sq, lexicographic order.
std::vector<RVec> lattice_points_near(const LatticeSpec& spec, const RVec& x,
                                      const Rational& bound_sq);

struct ClosestVectors {
  Rational dist_sq;
  std::vector<RVec> points;  // all closest lattice vectors, lexicographic
};

ClosestVectors closest_vectors(const LatticeSpec& spec, const RVec& x);

/// Canonical coset representative: the lexicographically smallest x - v over
/// all closest lattice vectors v.
RVec reduce_mod_lattice(const LatticeSpec& spec, const RVec& x);

/// Cheap canonical coset label: fractional parts of the basis coordinates.
using CosetKey = std::vector<Rational>;
CosetKey coset_key(const LatticeSpec& spec, const RVec& x);

/// Squared distance between x + L and y + L in the flat torus.
Rational torus_distance_sq(const LatticeSpec& spec, const RVec& x, const RVec& y);

bool is_deep_hole(const LatticeSpec& spec, const RVec& x);

/// Deep holes h with |h| = R. D4 and E8 use the explicit lists; A1 and A2 are
/// found by sweeping the (1/6)-grid in the ball of radius R.
std::vector<RVec> deep_holes_min_norm(const LatticeSpec& spec);

/// Deep holes of norm R found by sweeping a rational grid with the given step.
std::vector<RVec> sweep_deep_holes(const LatticeSpec& spec, const Rational& step);

/// 240 * sigma_3(k): vectors of squared norm k in the normalized E8.
BigInt theta_count_e8(const BigInt& k);
/// The same count by direct enumeration.
BigInt theta_count_e8_enumerated(long k);

/// Membership in N(L) = {|z|^m : z in the normalized lattice, z != 0}.
bool size_set_member(LatticeName name, const BigInt& n);
/// Loeschian numbers a^2 + ab + b^2.
bool loeschian(const BigInt& n);
/// No prime factor 1 mod 3 and every prime factor 2 mod 3 with even multiplicity.
bool nprime_member(const BigInt& n);

struct A2NormOrbits {
  std::size_t elements = 0;  // Eisenstein integers a + b w of norm n
  std::size_t orbits = 0;    // under rotation by pi/3 and conjugation
  std::vector<std::pair<long, long>> representatives;
};
A2NormOrbits a2_norm_orbit(const BigInt& n);

struct LatticeCode {
  RMatrix multiplier;      // M with M L inside L and M^T M = c^2 on the span
  Rational scale_sq;       // c^2 = |z|^2
  std::vector<RVec> points;  // canonical coset representatives of M^{-1} L / L
  Rational min_distance_sq;  // l^2 / c^2
};

/// Lattice code from a nonzero lattice vector v; z = v / l(L) is its point
/// in the normalized lattice. A1, A2 and D4 multiply by z in the integers,
/// Eisenstein integers and Hurwitz quaternions. E8 accepts any v whose
/// squared normalized norm has the form 2^a j^2.
LatticeCode lattice_code(const LatticeSpec& spec, const RVec& v);

/// Reflection x -> x - 2<x,r>/<r,r> r.
RVec reflect(const RVec& x, const RVec& r);

struct HolyGraph {
  std::vector<RVec> reps;      // vertex 0 is the zero coset
  std::vector<CosetKey> keys;
  graph::Graph graph;
  std::size_t deep_holes = 0;  // minimum-norm deep holes before reduction
};

HolyGraph holy_graph(const LatticeSpec& spec);

struct CliqueList {
  std::size_t clique_number = 0;
  std::vector<std::vector<std::size_t>> cliques;
};

CliqueList max_cliques(const HolyGraph& g, Budget& budget);
bool minus_one_extension(const HolyGraph& g, Budget& budget);

struct OrbitPartition {
  std::vector<std::vector<std::size_t>> orbits;  // indices into the clique list
  std::size_t reflections = 0;
  std::size_t visited = 0;
};

/// Orbits of the cliques under the reflections in the minimal vectors and
/// translation by clique members, found by breadth-first search.
OrbitPartition clique_orbit(const LatticeSpec& spec, const HolyGraph& g,
                            const std::vector<std::vector<std::size_t>>& cliques);

struct RandomWalk {
  std::size_t steps = 0;
  std::size_t distinct_visited = 0;
  std::size_t first_full_cover = 0;  // step at which every clique was seen, or 0
};

/// Random walk that applies a uniformly chosen reflection at each step.
RandomWalk random_walk_orbit(const LatticeSpec& spec, const HolyGraph& g,
                             const std::vector<std::vector<std::size_t>>& cliques,
                             std::uint64_t seed, std::size_t steps);

/// The code {rep_v + L : v in clique} has all pairwise distances equal to R.
bool clique_is_equidistant(const LatticeSpec& spec, const HolyGraph& g,
                           const std::vector<std::size_t>& clique);

}  // namespace unicorn::torus
