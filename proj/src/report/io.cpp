#include "io.hpp"

#include <cctype>
#include <limits>

#include "unicorn/core/error.hpp"

namespace unicorn::report::io {

void invalid(const std::string& ptr, const std::string& message) {
  raise(ErrorKind::kValidation, (ptr.empty() ? std::string("/") : ptr) + ": " + message);
}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

const Json& require(const Json& obj, const std::string& ptr, const char* key) {
  if (!obj.is_object()) invalid(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) invalid(child(ptr, key), "missing required field");
  return *it;
}

const Json* optional(const Json& obj, const char* key) {
  if (!obj.is_object()) return nullptr;
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

Rational to_rational(const Json& v, const std::string& ptr) {
  if (v.is_number_unsigned()) return Rational(BigInt(std::to_string(v.get<unsigned long long>())));
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) invalid(ptr, "expected an exact rational such as \"3/4\", found a floating point number");
  if (!v.is_string()) invalid(ptr, "expected a rational string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    invalid(ptr, e.what());
  }
}

RVec to_vec(const Json& v, const std::string& ptr) {
  if (!v.is_array()) invalid(ptr, "expected an array of rationals");
  RVec out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_rational(v[i], child(ptr, i)));
  return out;
}

RMatrix to_matrix(const Json& v, const std::string& ptr) {
  if (!v.is_array()) invalid(ptr, "expected an array of rows");
  RMatrix out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_vec(v[i], child(ptr, i)));
  return out;
}

std::size_t to_size(const Json& v, const std::string& ptr, std::size_t lo, std::size_t hi) {
  if (!v.is_number_integer()) invalid(ptr, "expected an integer");
  if (!v.is_number_unsigned() && v.get<long long>() < 0) invalid(ptr, "expected a nonnegative integer");
  auto x = v.get<unsigned long long>();
  if (x < lo || x > hi)
    invalid(ptr, "value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<std::size_t>(x);
}

long to_long(const Json& v, const std::string& ptr) {
  if (!v.is_number_integer()) invalid(ptr, "expected an integer");
  if (v.is_number_unsigned() && v.get<unsigned long long>() > static_cast<unsigned long long>(std::numeric_limits<long>::max()))
    invalid(ptr, "integer too large");
  return static_cast<long>(v.get<long long>());
}

BigInt to_bigint(const Json& v, const std::string& ptr) {
  Rational r = to_rational(v, ptr);
  if (!r.is_integer()) invalid(ptr, "expected an integer");
  return r.num();
}

bool to_bool(const Json& v, const std::string& ptr) {
  if (!v.is_boolean()) invalid(ptr, "expected true or false");
  return v.get<bool>();
}

std::string to_string(const Json& v, const std::string& ptr) {
  if (!v.is_string()) invalid(ptr, "expected a string");
  return v.get<std::string>();
}

std::size_t size_or(const Json& req, const char* key, std::size_t fallback, std::size_t lo, std::size_t hi) {
  const Json* v = optional(req, key);
  return v ? to_size(*v, child("", key), lo, hi) : fallback;
}

Rational rational_or(const Json& req, const char* key, const Rational& fallback) {
  const Json* v = optional(req, key);
  return v ? to_rational(*v, child("", key)) : fallback;
}

mgraph::MetricGraph to_graph(const Json& v, const std::string& ptr) {
  const Json& vs = require(v, ptr, "vertices");
  std::size_t n = 0;
  if (vs.is_array()) n = vs.size();
  else n = to_size(vs, child(ptr, "vertices"), 1, 100000);
  if (n == 0) invalid(child(ptr, "vertices"), "a graph needs at least one vertex");
  mgraph::MetricGraph g(n);
  const Json& es = require(v, ptr, "edges");
  std::string eptr = child(ptr, "edges");
  if (!es.is_array()) invalid(eptr, "expected an array of edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string p = child(eptr, i);
    const Json& e = es[i];
    std::size_t a = 0, b = 0;
    Rational w;
    if (e.is_array()) {
      if (e.size() != 3) invalid(p, "an edge array needs [u, v, w]");
      a = to_size(e[0], child(p, 0), 0, n - 1);
      b = to_size(e[1], child(p, 1), 0, n - 1);
      w = to_rational(e[2], child(p, 2));
    } else {
      a = to_size(require(e, p, "u"), child(p, "u"), 0, n - 1);
      b = to_size(require(e, p, "v"), child(p, "v"), 0, n - 1);
      w = to_rational(require(e, p, "w"), child(p, "w"));
    }
    if (w.sign() <= 0) invalid(child(p, "w"), "edge lengths must be positive");
    g.add_edge(a, b, w);
  }
  try {
    g.validate();
  } catch (const Error& e) {
    invalid(ptr, e.what());
  }
  return g;
}

mgraph::Code to_graph_code(const Json& v, const std::string& ptr) {
  if (!v.is_array()) invalid(ptr, "expected an array of {edge, offset} points");
  mgraph::Code code;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::string p = child(ptr, i);
    mgraph::GraphPoint gp;
    if (v[i].is_array()) {
      if (v[i].size() != 2) invalid(p, "a point array needs [edge, offset]");
      gp.edge = to_size(v[i][0], child(p, 0), 0, 1000000);
      gp.offset = to_rational(v[i][1], child(p, 1));
    } else {
      gp.edge = to_size(require(v[i], p, "edge"), child(p, "edge"), 0, 1000000);
      gp.offset = to_rational(require(v[i], p, "offset"), child(p, "offset"));
    }
    code.push_back(gp);
  }
  return code;
}

namespace {

void add_children(ultra::BallTree& t, std::size_t parent, const Json& node, const std::string& ptr) {
  const Json& kids = require(node, ptr, "children");
  std::string kptr = child(ptr, "children");
  if (!kids.is_array() || kids.empty()) invalid(kptr, "a ball needs a nonempty array of children");
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const Json& k = kids[i];
    std::string p = child(kptr, i);
    if (!k.is_object()) invalid(p, "expected a node object");
    std::string label = optional(k, "label") ? to_string(k["label"], child(p, "label")) : std::string();
    const Json* ch = optional(k, "children");
    if (!ch || (ch->is_array() && ch->empty())) {
      if (const Json* d = optional(k, "diam"); d && !to_rational(*d, child(p, "diam")).is_zero())
        invalid(child(p, "diam"), "a point has diameter 0");
      t.add_point(parent, label);
      continue;
    }
    Rational diam = to_rational(require(k, p, "diam"), child(p, "diam"));
    if (diam.sign() <= 0) invalid(child(p, "diam"), "ball diameters must be positive");
    std::size_t id = t.add_ball(parent, diam, label);
    add_children(t, id, k, p);
  }
}

}  // namespace

ultra::BallTree to_ball_tree(const Json& v, const std::string& ptr) {
  if (!v.is_object()) invalid(ptr, "expected a node object");
  Rational diam = to_rational(require(v, ptr, "diam"), child(ptr, "diam"));
  if (diam.sign() <= 0) invalid(child(ptr, "diam"), "the root diameter must be positive");
  ultra::BallTree t(diam);
  add_children(t, t.root(), v, ptr);
  try {
    t.validate();
  } catch (const Error& e) {
    invalid(ptr, e.what());
  }
  return t;
}

audit::Space to_space(const Json& v, const std::string& ptr) {
  std::string kind_s = to_string(require(v, ptr, "kind"), child(ptr, "kind"));
  audit::SpaceKind kind;
  try {
    kind = audit::parse_space_kind(kind_s);
  } catch (const Error& e) {
    invalid(child(ptr, "kind"), e.what());
  }
  switch (kind) {
    case audit::SpaceKind::kInterval:
    case audit::SpaceKind::kCircle: {
      Rational len = to_rational(require(v, ptr, "length"), child(ptr, "length"));
      if (len.sign() <= 0) invalid(child(ptr, "length"), "length must be positive");
      return kind == audit::SpaceKind::kInterval ? audit::Space::interval(len) : audit::Space::circle(len);
    }
    case audit::SpaceKind::kPlane: return audit::Space::plane();
    case audit::SpaceKind::kSphere: return audit::Space::sphere();
    case audit::SpaceKind::kTorus: {
      std::string l = to_string(require(v, ptr, "lattice"), child(ptr, "lattice"));
      try {
        return audit::Space::torus_of(torus::parse_lattice_name(l));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kUnsupported) throw;
        invalid(child(ptr, "lattice"), e.what());
      }
    }
    case audit::SpaceKind::kOrthotope: {
      RVec u = to_vec(require(v, ptr, "box"), child(ptr, "box"));
      try {
        return audit::Space::orthotope(u);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kUnsupported) throw;
        invalid(child(ptr, "box"), e.what());
      }
    }
    case audit::SpaceKind::kMetricTree:
      return audit::Space::metric_tree(to_graph(require(v, ptr, "graph"), child(ptr, "graph")));
  }
  invalid(ptr, "unknown space");
}

// ---- target expressions -----------------------------------------------------

namespace {

PiPoly atom_value(const std::string& name, const std::string& text) {
  if (name == "alpha") return seq::hilbert_alpha();
  if (name == "alpha^2") return seq::hilbert_alpha() * seq::hilbert_alpha();
  if (name == "pi") return PiPoly::pi();
  if (name == "pi^2") return PiPoly::pi_squared();
  if (name == "sqrt2") return PiPoly(QSqrt2::sqrt2());
  raise(ErrorKind::kValidation, "target \"" + text + "\": unknown symbol \"" + name + "\"");
}

}  // namespace

PiPoly parse_target(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s.empty()) raise(ErrorKind::kValidation, "target expression is empty");
  auto fail = [&](const std::string& why) {
    raise(ErrorKind::kValidation, "target \"" + text + "\": " + why);
  };
  PiPoly total;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected + or - at position " + std::to_string(i));
    }
    first = false;
    Rational coef(1);
    bool has_number = false;
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    if (j > i) {
      try {
        coef = Rational::parse(s.substr(i, j - i));
      } catch (const Error&) {
        fail("bad number \"" + s.substr(i, j - i) + "\"");
      }
      has_number = true;
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    PiPoly term(coef);
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      std::size_t k = i;
      while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '^')) ++k;
      term = PiPoly(coef) * atom_value(s.substr(i, k - i), text);
      i = k;
      if (i < s.size() && s[i] == '/') {
        std::size_t m = i + 1;
        while (m < s.size() && std::isdigit(static_cast<unsigned char>(s[m]))) ++m;
        if (m == i + 1) fail("expected a divisor after '/'");
        term = term / QSqrt2(Rational::parse(s.substr(i + 1, m - i - 1)));
        i = m;
      }
    } else if (!has_number) {
      fail("expected a number or symbol at position " + std::to_string(i));
    }
    total = sign > 0 ? total + term : total - term;
  }
  return total;
}

// ---- serialization ----------------------------------------------------------

Json big_json(const BigInt& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json vec_json(const RVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json code_json(const std::vector<RVec>& code) {
  Json a = Json::array();
  for (const auto& x : code) a.push_back(vec_json(x));
  return a;
}

Json graph_json(const mgraph::MetricGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"w", e.w.str()}});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Json graph_code_json(const mgraph::Code& code) {
  Json a = Json::array();
  for (const auto& p : code) a.push_back({{"edge", p.edge}, {"offset", p.offset.str()}});
  return a;
}

Json interval_json(const CertInterval& iv) {
  return {{"lo", iv.lo().str()}, {"hi", iv.hi().str()}, {"width", iv.width().str()}};
}

Json hilbert_point_json(const seq::HilbertPoint& p) {
  static const char* names[] = {"zero", "full", "in-set", "out-of-set"};
  Json ex = Json::object();
  for (const auto& [k, v] : p.exceptional) ex[std::to_string(k)] = pipoly_json(v);
  return {{"rule", names[static_cast<int>(p.rule)]}, {"exceptional", ex}};
}

Json index_lists(const std::vector<std::vector<std::size_t>>& lists) {
  Json a = Json::array();
  for (const auto& l : lists) a.push_back(l);
  return a;
}

}  // namespace unicorn::report::io

namespace unicorn::report {

Json rational_json(const Rational& r) { return r.str(); }

Json pipoly_json(const PiPoly& p) {
  static const char* keys[] = {"c0", "c1", "c2"};
  Json out = Json::object();
  Json roots = Json::object();
  for (int i = 0; i < 3; ++i) {
    out[keys[i]] = p.coeff(i).rational_part().str();
    roots[keys[i]] = p.coeff(i).sqrt2_part().str();
  }
  out["sqrt2_parts"] = roots;
  out["enclosure"] = io::interval_json(p.enclose(66).round_out(66));
  out["approx"] = p.approx();
  return out;
}

}  // namespace unicorn::report
