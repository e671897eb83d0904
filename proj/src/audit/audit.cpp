#include "unicorn/audit/audit.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "unicorn/core/code.hpp"

namespace unicorn::audit {

namespace {

using MapKey = std::pair<RMatrix, RVec>;

Rational mod_period(const Rational& x, const Rational& len) {
  return x - len * Rational((x / len).floor());
}

RMatrix negative_identity(std::size_t n) {
  RMatrix m = identity(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(-1);
  return m;
}

RVec zeros(std::size_t n) { return RVec(n, Rational(0)); }

std::string vec_str(const RVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

MapKey map_key(const Space& space, const AffineIsometry& g) { return {g.a, point_key(space, g.s)}; }

/// Representative of x in ambient coordinates, reduced modulo the period.
RVec reduce(const Space& space, const RVec& x) {
  switch (space.kind) {
    case SpaceKind::kCircle: return {mod_period(x[0], space.length)};
    case SpaceKind::kTorus: return torus::reduce_mod_lattice(*space.lattice, x);
    default: return x;
  }
}

AffineIsometry compose(const AffineIsometry& f, const AffineIsometry& g) {
  return {mat_mul(f.a, g.a), mat_vec(f.a, g.s) + f.s};
}

std::set<RVec> key_set(const Space& space, const std::vector<RVec>& code) {
  std::set<RVec> out;
  for (const auto& x : code) out.insert(point_key(space, x));
  return out;
}

std::size_t overlap_of(const Space& space, const AffineIsometry& g, const std::vector<RVec>& code,
                       const std::set<RVec>& keys) {
  std::size_t n = 0;
  for (const auto& x : code) n += keys.count(point_key(space, g.apply(space, x)));
  return n;
}

RVec cross(const RVec& a, const RVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

RMatrix columns(const RVec& a, const RVec& b, const RVec& c) {
  RMatrix m(3, RVec(3));
  for (std::size_t i = 0; i < 3; ++i) {
    m[i][0] = a[i];
    m[i][1] = b[i];
    m[i][2] = c[i];
  }
  return m;
}

bool independent(const RVec& a, const RVec& b) {
  auto c = cross(a, b);
  return std::any_of(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); });
}

/// Plane isometries sending p0 -> q0 and p1 -> q1 (both orientations).
void plane_maps(const RVec& p0, const RVec& p1, const RVec& q0, const RVec& q1,
                std::vector<AffineIsometry>& out) {
  RVec v = p1 - p0, w = q1 - q0;
  Rational n = dot(v, v);
  if (n.is_zero() || n != dot(w, w)) return;
  Rational c = dot(v, w) / n, s = (v[0] * w[1] - v[1] * w[0]) / n;
  Rational a = (v[0] * w[0] - v[1] * w[1]) / n, b = (v[1] * w[0] + v[0] * w[1]) / n;
  for (const RMatrix& m : {RMatrix{{c, -s}, {s, c}}, RMatrix{{a, b}, {b, -a}}})
    out.push_back({m, q0 - mat_vec(m, p0)});
}

/// Sphere isometries sending the independent pair (a, b) to (a2, b2).
void sphere_maps(const RVec& a, const RVec& b, const RVec& a2, const RVec& b2,
                 std::vector<AffineIsometry>& out) {
  if (dot(a, b) != dot(a2, b2)) return;
  RMatrix inv = inverse(columns(a, b, cross(a, b)));
  RVec c2 = cross(a2, b2);
  for (int sign : {1, -1})
    out.push_back({mat_mul(columns(a2, b2, Rational(sign) * c2), inv), zeros(3)});
}

RMatrix reflection_matrix(const RVec& r) {
  std::size_t n = r.size();
  Rational rr = dot(r, r);
  RMatrix m = identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] -= Rational(2) * r[i] * r[j] / rr;
  return m;
}

/// Linear parts for the torus: the closure of the reflections in the minimal
/// vectors together with -I.
std::vector<RMatrix> torus_linear_group(const Space& space, Budget& budget) {
  const auto& L = *space.lattice;
  std::vector<RMatrix> gens = {negative_identity(L.ambient_dim)};
  for (const auto& v : L.minimal_vectors) gens.push_back(reflection_matrix(v));
  std::set<RMatrix> seen = {identity(L.ambient_dim)};
  std::vector<RMatrix> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    RMatrix x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      budget.charge();
      RMatrix y = mat_mul(g, x);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

/// Candidates that send code[i] to code[j]; when `anchor_first` only i = 0.
std::vector<AffineIsometry> anchored_candidates(const Space& space, const std::vector<RVec>& code,
                                                bool anchor_first, Budget& budget, bool& restricted,
                                                bool& infinite) {
  std::vector<AffineIsometry> out;
  const std::size_t n = code.size();
  const std::size_t imax = anchor_first ? 1 : n;
  restricted = false;
  infinite = false;
  switch (space.kind) {
    case SpaceKind::kInterval:
    case SpaceKind::kOrthotope:
      return finite_group(space, budget);
    case SpaceKind::kCircle:
    case SpaceKind::kTorus: {
      std::vector<RMatrix> lin = space.kind == SpaceKind::kCircle
                                     ? std::vector<RMatrix>{identity(1), negative_identity(1)}
                                     : torus_linear_group(space, budget);
      for (const auto& a : lin)
        for (std::size_t i = 0; i < imax; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            budget.charge();
            out.push_back({a, code[j] - mat_vec(a, code[i])});
          }
      return out;
    }
    case SpaceKind::kPlane: {
      if (n >= 2) {
        for (std::size_t i = 0; i < imax; ++i)
          for (std::size_t i2 = 0; i2 < n; ++i2) {
            if (anchor_first && i2 != 1) continue;
            if (i2 == i) continue;
            for (std::size_t j = 0; j < n; ++j)
              for (std::size_t j2 = 0; j2 < n; ++j2) {
                if (j == j2) continue;
                budget.charge();
                plane_maps(code[i], code[i2], code[j], code[j2], out);
              }
          }
      }
      if (n < 2) infinite = true;
      if (!anchor_first || n < 2) {
        // Half turns about code points, which fix at least one point.
        for (const auto& c : code) out.push_back({negative_identity(2), Rational(2) * c});
        if (n == 1) out.push_back({RMatrix{{1, 0}, {0, -1}}, RVec{0, Rational(2) * code[0][1]}});
        restricted = !anchor_first;
      }
      return out;
    }
    case SpaceKind::kSphere: {
      std::optional<std::pair<std::size_t, std::size_t>> base;
      for (std::size_t i = 0; i < n && !base; ++i)
        for (std::size_t j = i + 1; j < n && !base; ++j)
          if (independent(code[i], code[j])) base = {i, j};
      if (!base) {
        infinite = true;
        for (const auto& c : code) {
          out.push_back({reflection_matrix(c), zeros(3)});
          for (std::size_t k = 0; k < 3; ++k) {
            RVec e = zeros(3);
            e[k] = 1;
            RVec m = cross(c, e);
            if (std::any_of(m.begin(), m.end(), [](const Rational& x) { return !x.is_zero(); }))
              out.push_back({reflection_matrix(m), zeros(3)});
          }
        }
        return out;
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t i2 = 0; i2 < n; ++i2) {
          if (anchor_first && (i != base->first || i2 != base->second)) continue;
          if (!independent(code[i], code[i2])) continue;
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t j2 = 0; j2 < n; ++j2) {
              if (!independent(code[j], code[j2])) continue;
              budget.charge();
              sphere_maps(code[i], code[i2], code[j], code[j2], out);
            }
        }
      if (!anchor_first) {
        for (const auto& c : code) out.push_back({reflection_matrix(c), zeros(3)});
        restricted = true;
      }
      return out;
    }
    case SpaceKind::kMetricTree:
      raise(ErrorKind::kPrecondition, "metric-tree codes are audited through the graph overload");
  }
  return out;
}

void validate_code(const Space& space, const std::vector<RVec>& code) {
  if (code.empty()) raise(ErrorKind::kDomain, "the code is empty");
  for (const auto& x : code) space.validate_point(x);
  if (key_set(space, code).size() != code.size()) raise(ErrorKind::kValidation, "code points must be distinct");
}

std::vector<std::string> generator_labels(const Space& space, const std::vector<AffineIsometry>& elements) {
  std::vector<std::string> labels;
  std::vector<AffineIsometry> gens;
  AffineIsometry id{identity(space.dim()), zeros(space.dim())};
  std::set<MapKey> closure = {map_key(space, id)};
  std::vector<AffineIsometry> members = {id};
  for (const auto& e : elements) {
    if (closure.count(map_key(space, e))) continue;
    gens.push_back(e);
    labels.push_back(e.describe());
    members.push_back(e);
    std::vector<AffineIsometry> frontier = members;
    while (!frontier.empty()) {
      AffineIsometry x = frontier.back();
      frontier.pop_back();
      for (const auto& g : gens) {
        AffineIsometry y = compose(g, x);
        y.s = reduce(space, y.s);
        if (closure.insert(map_key(space, y)).second) {
          members.push_back(y);
          frontier.push_back(y);
        }
      }
    }
  }
  return labels;
}

std::string describe_graph_isometry(const mgraph::Isometry& iso) {
  std::string out = "vertices";
  for (std::size_t v = 0; v < iso.vertex.size(); ++v)
    if (iso.vertex[v] != v) out += " " + std::to_string(v) + "->" + std::to_string(iso.vertex[v]);
  bool flips = false;
  for (std::size_t e = 0; e < iso.edge.size(); ++e)
    if (iso.edge[e].edge != e || iso.edge[e].reversed) {
      if (!flips) out += "; edges";
      flips = true;
      out += " " + std::to_string(e) + "->" + std::to_string(iso.edge[e].edge) + (iso.edge[e].reversed ? "r" : "");
    }
  return out;
}

struct TreeStrength {
  long t = 0;
  std::vector<std::size_t> edges;  // smoothed edges of a minimal rigid choice
};

TreeStrength tree_strength(const mgraph::IsometryGroup& grp, Budget& budget) {
  const auto& s = grp.smoothed.graph;
  std::vector<std::vector<bool>> fixes;  // per nontrivial element, edges fixed pointwise
  for (const auto& el : grp.elements) {
    if (el.identity()) continue;
    std::vector<bool> f(s.edge_count());
    for (std::size_t e = 0; e < s.edge_count(); ++e) f[e] = el.edge[e].edge == e && !el.edge[e].reversed;
    fixes.push_back(std::move(f));
  }
  if (fixes.empty()) raise(ErrorKind::kPrecondition, "the isometry group is trivial, so the strength is undefined");
  const std::size_t m = s.edge_count();
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      budget.charge();
      bool rigid = std::none_of(fixes.begin(), fixes.end(), [&](const std::vector<bool>& f) {
        return std::all_of(pick.begin(), pick.end(), [&](std::size_t e) { return f[e]; });
      });
      if (rigid) return {static_cast<long>(size) - 1, pick};
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  raise(ErrorKind::kInternal, "no point set with a trivial stabilizer was found");
}

Rational random_fraction(std::mt19937_64& rng, const Rational& scale) {
  std::uniform_int_distribution<long> den(7, 97);
  long q = den(rng);
  std::uniform_int_distribution<long> num(0, q);
  return scale * Rational(num(rng), q);
}

bool same_set(const Space& space, const std::vector<RVec>& a, const std::vector<RVec>& b) {
  return key_set(space, a) == key_set(space, b);
}

}  // namespace

SpaceKind parse_space_kind(const std::string& s) {
  static const std::map<std::string, SpaceKind> names = {
      {"interval", SpaceKind::kInterval},   {"circle", SpaceKind::kCircle},
      {"plane", SpaceKind::kPlane},         {"euclidean-plane", SpaceKind::kPlane},
      {"sphere", SpaceKind::kSphere},       {"torus", SpaceKind::kTorus},
      {"orthotope", SpaceKind::kOrthotope}, {"metric-tree", SpaceKind::kMetricTree}};
  auto it = names.find(s);
  if (it == names.end()) raise(ErrorKind::kUnsupported, "unknown space kind '" + s + "'");
  return it->second;
}

std::string space_kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::kInterval: return "interval";
    case SpaceKind::kCircle: return "circle";
    case SpaceKind::kPlane: return "euclidean-plane";
    case SpaceKind::kSphere: return "sphere";
    case SpaceKind::kTorus: return "torus";
    case SpaceKind::kOrthotope: return "orthotope";
    case SpaceKind::kMetricTree: return "metric-tree";
  }
  return "?";
}

Space Space::interval(const Rational& length) {
  if (length.sign() <= 0) raise(ErrorKind::kDomain, "interval length must be positive");
  Space s;
  s.kind = SpaceKind::kInterval;
  s.length = length;
  return s;
}

Space Space::circle(const Rational& length) {
  Space s = interval(length);
  s.kind = SpaceKind::kCircle;
  return s;
}

Space Space::plane() {
  Space s;
  s.kind = SpaceKind::kPlane;
  return s;
}

Space Space::sphere() {
  Space s;
  s.kind = SpaceKind::kSphere;
  return s;
}

Space Space::torus_of(torus::LatticeName name) {
  if (name != torus::LatticeName::kA1 && name != torus::LatticeName::kA2)
    raise(ErrorKind::kUnsupported, "torus audits support A1 and A2");
  Space s;
  s.kind = SpaceKind::kTorus;
  s.lattice = torus::build_lattice(name);
  return s;
}

Space Space::orthotope(const RVec& u) {
  if (u.empty()) raise(ErrorKind::kDomain, "the box needs at least one side");
  for (const auto& x : u)
    if (x.sign() <= 0) raise(ErrorKind::kDomain, "box sides must be positive");
  if (u.size() > 6) raise(ErrorKind::kUnsupported, "box audits support at most 6 dimensions");
  Space s;
  s.kind = SpaceKind::kOrthotope;
  s.box = u;
  return s;
}

Space Space::metric_tree(const mgraph::MetricGraph& g) {
  g.validate();
  Space s;
  s.kind = SpaceKind::kMetricTree;
  s.graph = g;
  return s;
}

std::size_t Space::dim() const {
  switch (kind) {
    case SpaceKind::kInterval:
    case SpaceKind::kCircle: return 1;
    case SpaceKind::kPlane: return 2;
    case SpaceKind::kSphere: return 3;
    case SpaceKind::kTorus: return lattice->ambient_dim;
    case SpaceKind::kOrthotope: return box.size();
    case SpaceKind::kMetricTree: return 0;
  }
  return 0;
}

void Space::validate_point(const RVec& x) const {
  if (kind == SpaceKind::kMetricTree) raise(ErrorKind::kPrecondition, "metric-tree points are graph points");
  if (x.size() != dim()) raise(ErrorKind::kValidation, "point has the wrong dimension");
  switch (kind) {
    case SpaceKind::kInterval:
      if (x[0].sign() < 0 || x[0] > length) raise(ErrorKind::kValidation, "point lies outside the interval");
      break;
    case SpaceKind::kSphere:
      if (dot(x, x) != Rational(1)) raise(ErrorKind::kValidation, "sphere points must be unit vectors");
      break;
    case SpaceKind::kTorus:
      if (!torus::in_span(*lattice, x)) raise(ErrorKind::kValidation, "point lies outside the lattice span");
      break;
    case SpaceKind::kOrthotope:
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].sign() < 0 || x[i] > box[i]) raise(ErrorKind::kValidation, "point lies outside the box");
      break;
    default:
      break;
  }
}

RVec AffineIsometry::apply(const Space&, const RVec& x) const { return mat_vec(a, x) + s; }

bool AffineIsometry::is_identity(const Space& space) const {
  return a == identity(a.size()) && point_key(space, s) == point_key(space, zeros(s.size()));
}

std::string AffineIsometry::describe() const {
  std::ostringstream os;
  os << "x -> [";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "; " : "") << vec_str(a[i]);
  os << "] x + " << vec_str(s);
  return os.str();
}

RVec point_key(const Space& space, const RVec& x) {
  switch (space.kind) {
    case SpaceKind::kCircle: return {mod_period(x[0], space.length)};
    case SpaceKind::kTorus: return torus::coset_key(*space.lattice, x);
    default: return x;
  }
}

Rational metric_value(const Space& space, const RVec& x, const RVec& y) {
  switch (space.kind) {
    case SpaceKind::kInterval: return (x[0] - y[0]).abs();
    case SpaceKind::kCircle: {
      Rational d = mod_period(x[0] - y[0], space.length);
      return unicorn::min(d, space.length - d);
    }
    case SpaceKind::kPlane: return squared_distance(x, y);
    case SpaceKind::kSphere: return Rational(2) - Rational(2) * dot(x, y);
    case SpaceKind::kTorus: return torus::torus_distance_sq(*space.lattice, x, y);
    case SpaceKind::kOrthotope: return chebyshev_distance(x, y);
    case SpaceKind::kMetricTree: break;
  }
  raise(ErrorKind::kPrecondition, "metric-tree distances use graph points");
}

std::vector<AffineIsometry> finite_group(const Space& space, Budget& budget) {
  switch (space.kind) {
    case SpaceKind::kInterval:
      return {{RMatrix{{-1}}, RVec{space.length}}};
    case SpaceKind::kOrthotope: {
      const std::size_t m = space.box.size();
      std::vector<AffineIsometry> out;
      std::vector<std::size_t> perm(m);
      for (std::size_t i = 0; i < m; ++i) perm[i] = i;
      do {
        bool ok = true;
        for (std::size_t i = 0; i < m; ++i) ok = ok && space.box[perm[i]] == space.box[i];
        if (!ok) continue;
        for (unsigned mask = 0; mask < (1U << m); ++mask) {
          budget.charge();
          AffineIsometry g{RMatrix(m, RVec(m, Rational(0))), zeros(m)};
          for (std::size_t i = 0; i < m; ++i) {
            bool flip = (mask >> i) & 1U;
            g.a[i][perm[i]] = flip ? Rational(-1) : Rational(1);
            if (flip) g.s[i] = space.box[i];
          }
          if (!g.is_identity(space)) out.push_back(std::move(g));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return out;
    }
    case SpaceKind::kTorus: {
      std::vector<AffineIsometry> out;
      for (auto& a : torus_linear_group(space, budget))
        if (a != identity(a.size())) out.push_back({std::move(a), zeros(space.dim())});
      return out;
    }
    default:
      raise(ErrorKind::kUnsupported, space_kind_name(space.kind) + " has a continuous isometry group");
  }
}

Stabilizer stabilizer(const Space& space, const std::vector<RVec>& code, Budget& budget) {
  validate_code(space, code);
  bool restricted = false, infinite = false;
  auto cands = anchored_candidates(space, code, true, budget, restricted, infinite);
  auto keys = key_set(space, code);
  Stabilizer out;
  out.infinite = infinite;
  std::set<MapKey> seen;
  for (auto& g : cands) {
    if (g.is_identity(space)) continue;
    if (overlap_of(space, g, code, keys) != code.size()) continue;
    g.s = reduce(space, g.s);
    if (seen.insert(map_key(space, g)).second) out.elements.push_back(std::move(g));
  }
  return out;
}

Overlap partial_symmetry_max(const Space& space, const std::vector<RVec>& code, Budget& budget) {
  validate_code(space, code);
  bool restricted = false, infinite = false;
  auto cands = anchored_candidates(space, code, false, budget, restricted, infinite);
  auto keys = key_set(space, code);
  Overlap out;
  out.restricted = restricted;
  for (auto& g : cands) {
    if (g.is_identity(space)) continue;
    budget.charge(code.size());
    std::size_t ov = overlap_of(space, g, code, keys);
    if (ov > out.overlap || !out.best) {
      out.overlap = ov;
      g.s = reduce(space, g.s);
      out.best = g;
    }
  }
  return out;
}

long symmetry_strength(const Space& space, Budget& budget) {
  switch (space.kind) {
    case SpaceKind::kInterval:
    case SpaceKind::kOrthotope: return 0;
    case SpaceKind::kCircle:
    case SpaceKind::kPlane:
    case SpaceKind::kTorus: return 2;
    case SpaceKind::kSphere: raise(ErrorKind::kUnsupported, "no strength value is recorded for the sphere");
    case SpaceKind::kMetricTree: {
      auto grp = mgraph::isometry_group(*space.graph, budget);
      if (grp.cycle) return 2;
      return tree_strength(grp, budget).t;
    }
  }
  return 0;
}

AuditReport audit_code(const Space& space, const std::vector<RVec>& code, Budget& budget) {
  AuditReport r;
  r.space = space_kind_name(space.kind);
  r.code_size = code.size();
  auto st = stabilizer(space, code, budget);
  r.stabilizer_order = st.order();
  r.generators = st.infinite ? std::vector<std::string>{"continuous family"} : generator_labels(space, st.elements);
  auto ov = partial_symmetry_max(space, code, budget);
  r.max_overlap = ov.overlap;
  r.overlap_restricted = ov.restricted;
  r.strength = space.kind == SpaceKind::kSphere ? 0 : symmetry_strength(space, budget);
  r.conjecture1_holds = st.infinite || !st.elements.empty();
  r.conjecture2_margin = static_cast<long>(r.max_overlap) - r.strength;
  return r;
}

AuditReport audit_code(const Space& space, const mgraph::Code& code, Budget& budget) {
  if (space.kind != SpaceKind::kMetricTree) raise(ErrorKind::kPrecondition, "graph codes need a metric-tree space");
  const auto& g = *space.graph;
  auto grp = mgraph::isometry_group(g, budget);
  auto a = mgraph::audit_symmetry(g, grp, code);
  AuditReport r;
  r.space = space_kind_name(space.kind);
  r.code_size = code.size();
  r.stabilizer_order = a.fixing_count + 1;
  for (auto i : a.fixing) r.generators.push_back(describe_graph_isometry(grp.elements[i]));
  if (grp.cycle && a.fixing_count > 0) r.generators.push_back(std::to_string(a.fixing_count) + " rotations or reflections");
  r.max_overlap = a.max_overlap;
  r.strength = grp.cycle ? 2 : tree_strength(grp, budget).t;
  r.conjecture1_holds = a.fixing_count > 0;
  r.conjecture2_margin = static_cast<long>(r.max_overlap) - r.strength;
  return r;
}

StrengthWitness symmetry_strength_witness(const Space& space, std::size_t samples, std::uint64_t seed,
                                          Budget& budget) {
  StrengthWitness w;
  w.kind = space.kind;
  std::mt19937_64 rng(seed);
  auto check_lower = [&](LowerCase& c, const AffineIsometry& g) {
    std::vector<RVec> img;
    for (const auto& x : c.set) img.push_back(g.apply(space, x));
    c.symmetry = g.describe();
    c.verified = !g.is_identity(space) && same_set(space, img, c.set);
    w.lower.push_back(c);
  };
  auto random_point = [&]() -> RVec {
    switch (space.kind) {
      case SpaceKind::kCircle: return {random_fraction(rng, space.length)};
      case SpaceKind::kPlane: return {random_fraction(rng, Rational(4)), random_fraction(rng, Rational(4))};
      case SpaceKind::kTorus: {
        RVec x = zeros(space.dim());
        for (const auto& b : space.lattice->basis) x = x + random_fraction(rng, Rational(1)) * b;
        return x;
      }
      default: return {};
    }
  };

  switch (space.kind) {
    case SpaceKind::kInterval:
      w.t = 0;
      w.upper = {{space.length / Rational(3)}};
      break;
    case SpaceKind::kOrthotope: {
      w.t = 0;
      RVec x;
      for (std::size_t i = 0; i < space.box.size(); ++i)
        x.push_back(space.box[i] / Rational(static_cast<long>(i + 3)));
      w.upper = {x};
      break;
    }
    case SpaceKind::kCircle:
    case SpaceKind::kPlane:
    case SpaceKind::kTorus: {
      w.t = 2;
      const std::size_t d = space.dim();
      for (std::size_t k = 0; k < samples; ++k) {
        RVec x = random_point(), y = random_point();
        LowerCase one{{x}, {}, "", false};
        // Half turn about x: rotation by pi, in the linear group of each space.
        check_lower(one, {negative_identity(d), Rational(2) * x});
        if (point_key(space, x) == point_key(space, y)) continue;
        LowerCase two{{x, y}, {}, "", false};
        if (space.kind == SpaceKind::kPlane) {
          // Reflection in the line through x and y.
          RVec dir = y - x;
          Rational nn = dot(dir, dir);
          RMatrix r{{(dir[0] * dir[0] - dir[1] * dir[1]) / nn, Rational(2) * dir[0] * dir[1] / nn},
                    {Rational(2) * dir[0] * dir[1] / nn, (dir[1] * dir[1] - dir[0] * dir[0]) / nn}};
          check_lower(two, {r, x - mat_vec(r, x)});
        } else {
          check_lower(two, {negative_identity(d), x + y});  // g(x) = s + t - x
        }
      }
      if (space.kind == SpaceKind::kPlane) {
        w.upper = {{0, 0}, {1, 0}, {0, 2}};
      } else if (space.kind == SpaceKind::kCircle) {
        w.upper = {{0}, {space.length / Rational(7)}, {Rational(3) * space.length / Rational(7)}};
      } else {
        // A scalene triangle {0, s, t} with generic s and t.
        const auto& b = space.lattice->basis;
        for (long k = 0; k < 50 && w.upper.empty(); ++k) {
          RVec s = zeros(d), t = zeros(d);
          for (std::size_t i = 0; i < b.size(); ++i) {
            s = s + Rational(static_cast<long>(i + 1), 5 + k) * b[i];
            t = t + Rational(static_cast<long>(2 * i + 3), 11 + 2 * k) * b[i];
          }
          std::vector<RVec> cand = {zeros(d), s, t};
          if (key_set(space, cand).size() == 3 && stabilizer(space, cand, budget).elements.empty()) w.upper = cand;
        }
      }
      break;
    }
    case SpaceKind::kSphere:
      raise(ErrorKind::kUnsupported, "no strength witness is recorded for the sphere");
    case SpaceKind::kMetricTree: {
      const auto& g = *space.graph;
      auto grp = mgraph::isometry_group(g, budget);
      if (grp.cycle) raise(ErrorKind::kPrecondition, "a cycle is a circle; use the circle witness");
      auto ts = tree_strength(grp, budget);
      w.t = ts.t;
      const auto& sm = grp.smoothed;
      for (long attempt = 0; attempt < 20; ++attempt) {
        mgraph::Code cand;
        for (std::size_t i = 0; i < ts.edges.size(); ++i) {
          for (std::size_t oe = 0; oe < g.edge_count(); ++oe)
            if (sm.image[oe].edge == ts.edges[i]) {
              Rational r = Rational(1, static_cast<long long>(i + 3)) + Rational(attempt, 997);
              cand.push_back({oe, g.edge(oe).w * r});
              break;
            }
        }
        if (mgraph::audit_symmetry(g, grp, cand).fixing_count == 0) {
          w.graph_upper = cand;
          break;
        }
      }
      std::uniform_int_distribution<std::size_t> edge_pick(0, g.edge_count() - 1);
      for (std::size_t k = 0; k < samples; ++k)
        for (long size = 1; size <= w.t; ++size) {
          mgraph::Code set;
          std::set<mgraph::Address> used;
          while (static_cast<long>(set.size()) < size) {
            std::size_t e = edge_pick(rng);
            mgraph::GraphPoint p{e, random_fraction(rng, g.edge(e).w)};
            if (used.insert(mgraph::address(g, p)).second) set.push_back(p);
          }
          auto a = mgraph::audit_symmetry(g, grp, set);
          LowerCase c{{}, set, "", a.fixing_count > 0};
          if (c.verified) c.symmetry = describe_graph_isometry(grp.elements[a.fixing.front()]);
          w.lower.push_back(std::move(c));
        }
      w.upper_rigid = !w.graph_upper.empty();
      w.lower_verified = std::all_of(w.lower.begin(), w.lower.end(), [](const LowerCase& c) { return c.verified; });
      return w;
    }
  }
  w.lower_verified = std::all_of(w.lower.begin(), w.lower.end(), [](const LowerCase& c) { return c.verified; });
  w.upper_rigid = !w.upper.empty() && static_cast<long>(w.upper.size()) == w.t + 1 &&
                  stabilizer(space, w.upper, budget).elements.empty() && !stabilizer(space, w.upper, budget).infinite;
  return w;
}

}  // namespace unicorn::audit
