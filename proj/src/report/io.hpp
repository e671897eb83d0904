#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unicorn/audit/audit.hpp"
#include "unicorn/core/interval.hpp"
#include "unicorn/mgraph/mgraph.hpp"
#include "unicorn/report/report.hpp"
#include "unicorn/seq/seq.hpp"
#include "unicorn/ultra/ultra.hpp"

namespace unicorn::report::io {

[[noreturn]] void invalid(const std::string& ptr, const std::string& message);

std::string child(const std::string& ptr, const std::string& key);
std::string child(const std::string& ptr, std::size_t index);

const Json& require(const Json& obj, const std::string& ptr, const char* key);
const Json* optional(const Json& obj, const char* key);

Rational to_rational(const Json& v, const std::string& ptr);
RVec to_vec(const Json& v, const std::string& ptr);
RMatrix to_matrix(const Json& v, const std::string& ptr);
std::size_t to_size(const Json& v, const std::string& ptr, std::size_t lo, std::size_t hi);
long to_long(const Json& v, const std::string& ptr);
BigInt to_bigint(const Json& v, const std::string& ptr);
bool to_bool(const Json& v, const std::string& ptr);
std::string to_string(const Json& v, const std::string& ptr);

std::size_t size_or(const Json& req, const char* key, std::size_t fallback, std::size_t lo, std::size_t hi);
Rational rational_or(const Json& req, const char* key, const Rational& fallback);

mgraph::MetricGraph to_graph(const Json& v, const std::string& ptr);
mgraph::Code to_graph_code(const Json& v, const std::string& ptr);
ultra::BallTree to_ball_tree(const Json& v, const std::string& ptr);
audit::Space to_space(const Json& v, const std::string& ptr);

/// Parses a real target such as "alpha-1-1/4-1/9" or "pi^2/6 - 1". Terms are
/// optional rational coefficients times alpha, alpha^2, pi, pi^2 or sqrt2.
PiPoly parse_target(const std::string& text);

Json big_json(const BigInt& n);
Json vec_json(const RVec& v);
Json code_json(const std::vector<RVec>& code);
Json graph_json(const mgraph::MetricGraph& g);
Json graph_code_json(const mgraph::Code& code);
Json interval_json(const CertInterval& iv);
Json hilbert_point_json(const seq::HilbertPoint& p);
Json index_lists(const std::vector<std::vector<std::size_t>>& lists);

}  // namespace unicorn::report::io
