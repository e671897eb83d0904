// unicorn-cli: builds a JSON request from flags and input files, runs it
// through the C library and writes the report.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unicorn/unicorn.h"

using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;

struct InputFile {
  std::string path;
  std::string text;
  std::string key;  // request field that holds the file's content
};

struct UsageError {
  std::string message;
};

// Line of the value addressed by a JSON pointer inside already valid JSON text.
class Locator {
 public:
  explicit Locator(const std::string& text) : s_(text) {}

  std::optional<std::size_t> line_of(const std::vector<std::string>& tokens) {
    i_ = 0;
    for (const auto& tok : tokens) {
      ws();
      if (i_ >= s_.size()) return std::nullopt;
      if (s_[i_] == '{') {
        ++i_;
        bool found = false;
        while (true) {
          ws();
          if (i_ >= s_.size() || s_[i_] == '}') return std::nullopt;
          std::string key = str();
          ws();
          ++i_;  // ':'
          if (key == tok) {
            found = true;
            break;
          }
          skip_value();
          ws();
          if (i_ < s_.size() && s_[i_] == ',') ++i_;
        }
        if (!found) return std::nullopt;
      } else if (s_[i_] == '[') {
        ++i_;
        std::size_t want = 0;
        try {
          want = std::stoul(tok);
        } catch (...) {
          return std::nullopt;
        }
        for (std::size_t k = 0; k < want; ++k) {
          ws();
          if (i_ >= s_.size() || s_[i_] == ']') return std::nullopt;
          skip_value();
          ws();
          if (i_ < s_.size() && s_[i_] == ',') ++i_;
        }
      } else {
        return std::nullopt;
      }
    }
    ws();
    return line_at(i_);
  }

  std::size_t line_at(std::size_t pos) const {
    std::size_t line = 1;
    for (std::size_t k = 0; k < pos && k < s_.size(); ++k) line += s_[k] == '\n';
    return line;
  }

 private:
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::string str() {
    std::string out;
    ++i_;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\') ++i_;
      if (i_ < s_.size()) out.push_back(s_[i_++]);
    }
    ++i_;
    return out;
  }
  void skip_value() {
    ws();
    if (i_ >= s_.size()) return;
    char c = s_[i_];
    if (c == '"') {
      str();
    } else if (c == '{' || c == '[') {
      int depth = 0;
      while (i_ < s_.size()) {
        char d = s_[i_];
        if (d == '"') {
          str();
          continue;
        }
        if (d == '{' || d == '[') ++depth;
        if (d == '}' || d == ']') --depth;
        ++i_;
        if (depth == 0) break;
      }
    } else {
      while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != '}' && s_[i_] != ']' &&
             !std::isspace(static_cast<unsigned char>(s_[i_])))
        ++i_;
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

std::vector<std::string> split_pointer(const std::string& ptr) {
  std::vector<std::string> out;
  std::size_t pos = 1;
  while (pos <= ptr.size() && ptr.size() > 1) {
    std::size_t next = ptr.find('/', pos);
    out.push_back(ptr.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

Json load_file(const std::string& path, const std::string& key, std::vector<InputFile>& files) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{path + ": cannot open file"};
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  try {
    Json j = Json::parse(text);
    files.push_back({path, text, key});
    return j;
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    auto p = msg.find("parse error");
    if (p != std::string::npos) msg = msg.substr(p);
    throw UsageError{path + ":" + std::to_string(Locator(text).line_at(e.byte > 0 ? e.byte - 1 : 0)) + ": " + msg};
  }
}

// Maps a library error "/graph/edges/2/w: ..." back to the file it came from.
std::string locate_error(const std::string& message, const std::vector<InputFile>& files) {
  if (message.empty() || message[0] != '/') return message;
  auto colon = message.find(": ");
  if (colon == std::string::npos) return message;
  std::string ptr = message.substr(0, colon);
  for (const auto& f : files) {
    std::string prefix = "/" + f.key;
    if (ptr != prefix && ptr.rfind(prefix + "/", 0) != 0) continue;
    std::string rest = ptr.substr(prefix.size());
    Locator loc(f.text);
    auto tokens = split_pointer(rest);
    std::optional<std::size_t> line;
    while (!(line = loc.line_of(tokens)) && !tokens.empty()) tokens.pop_back();
    return f.path + ":" + std::to_string(line.value_or(1)) + ": " + (rest.empty() ? "/" : rest) +
           message.substr(colon);
  }
  return message;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.erase(item.begin());
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
    if (item.empty()) throw UsageError{"empty entry in list \"" + s + "\""};
    out.push_back(item);
  }
  if (out.empty()) throw UsageError{"empty list"};
  return out;
}

Json rational_list(const std::string& s) {
  Json a = Json::array();
  for (const auto& x : split_list(s)) a.push_back(x);
  return a;
}

Json integer_list(const std::string& s) {
  Json a = Json::array();
  for (const auto& x : split_list(s)) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(x, &used);
    } catch (...) {
      used = 0;
    }
    if (used != x.size() || x[0] == '-') throw UsageError{"expected a nonnegative integer, got \"" + x + "\""};
    a.push_back(v);
  }
  return a;
}

int exit_code(uc_status s) {
  switch (s) {
    case UC_OK: return kExitOk;
    case UC_ERR_RESOURCE:
    case UC_ERR_PRECISION: return kExitResource;
    case UC_ERR_INTERNAL: return kExitInternal;
    default: return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal codes in compact metric spaces: construction, verification and symmetry audits."};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t precision_bits = 1ULL << 20;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;
  app.add_option("--precision-bits", precision_bits, "Precision ceiling for certified comparisons")
      ->check(CLI::Range(64ULL, 1ULL << 26));
  app.add_option("--budget", budget, "Work-unit cap (default 2e9, or UNICORN_BUDGET)");
  app.add_option("--seed", seed, "Seed for randomized searches and walks");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");

  std::string command;
  Json request = Json::object();
  std::vector<InputFile> files;
  std::vector<std::function<void()>> builders;

  // rankin
  auto* rankin = app.add_subcommand("rankin", "Rankin bounds and orthoplex decompositions");
  std::string rankin_action = "check", gram_file, points_file;
  std::optional<std::size_t> rankin_d;
  rankin->add_option("action", rankin_action, "check or decompose")->check(CLI::IsMember({"check", "decompose"}));
  rankin->add_option("--gram", gram_file, "JSON file with a Gram matrix of rational strings");
  rankin->add_option("--points", points_file, "JSON file with unit vectors");
  rankin->add_option("--d", rankin_d, "Ambient dimension");
  builders.push_back([&] {
    if (!rankin->parsed()) return;
    command = "rankin." + rankin_action;
    if (!gram_file.empty()) request["gram"] = load_file(gram_file, "gram", files);
    else if (!points_file.empty()) request["points"] = load_file(points_file, "points", files);
    else throw UsageError{"rankin needs --gram or --points"};
    if (rankin_d) request["d"] = *rankin_d;
  });

  // orthotope
  auto* ortho = app.add_subcommand("orthotope", "Codes in boxes under the sup norm");
  std::string ortho_action = "grid", box, ortho_delta, ortho_code, resolution;
  std::optional<std::size_t> ortho_n;
  ortho->add_option("action", ortho_action, "grid, size, minus-one or oracle")
      ->check(CLI::IsMember({"grid", "size", "minus-one", "oracle"}));
  ortho->add_option("--u", box, "Side lengths, comma separated")->required();
  ortho->add_option("--delta", ortho_delta, "Grid spacing");
  ortho->add_option("--n", ortho_n, "Code size");
  ortho->add_option("--code", ortho_code, "JSON file with a code");
  ortho->add_option("--resolution", resolution, "Oracle grid resolution (default 1/4)");
  builders.push_back([&] {
    if (!ortho->parsed()) return;
    command = "orthotope." + ortho_action;
    request["u"] = rational_list(box);
    if (!ortho_delta.empty()) request["delta"] = ortho_delta;
    if (ortho_n) request["n"] = *ortho_n;
    if (!ortho_code.empty()) request["code"] = load_file(ortho_code, "code", files);
    if (!resolution.empty()) request["resolution"] = resolution;
  });

  // torus
  auto* tor = app.add_subcommand("torus", "Flat tori: lattice codes, deep holes and holy codes");
  std::string lattice = "e8", torus_report = "holy", torus_v;
  std::optional<std::size_t> torus_count, torus_steps, torus_max_k;
  bool no_cliques = false;
  tor->add_option("--lattice", lattice, "a1, a2, d4 or e8");
  tor->add_option("--report", torus_report, "holy, code, sizes, theta or orbits")
      ->check(CLI::IsMember({"holy", "code", "sizes", "theta", "orbits"}));
  tor->add_option("--v", torus_v, "Lattice vector for --report code, comma separated");
  tor->add_option("--count", torus_count, "Number of size-set members");
  tor->add_option("--steps", torus_steps, "Random-walk steps");
  tor->add_option("--max-k", torus_max_k, "Largest norm for the theta check");
  tor->add_flag("--no-cliques", no_cliques, "Omit the clique list from holy reports");
  builders.push_back([&] {
    if (!tor->parsed()) return;
    command = "torus." + torus_report;
    if (torus_report != "theta") request["lattice"] = lattice;
    if (!torus_v.empty()) request["v"] = rational_list(torus_v);
    if (torus_count) request["count"] = *torus_count;
    if (torus_steps) request["steps"] = *torus_steps;
    if (torus_max_k) request["max_k"] = *torus_max_k;
    if (no_cliques) request["cliques"] = false;
  });

  // metric graphs
  auto* mg = app.add_subcommand("mgraph", "Optimal codes on metric graphs");
  std::string mg_action = "solve", graph_file, mg_code;
  std::optional<std::size_t> mg_n, mg_k;
  mg->add_option("action", mg_action, "solve, canonical or group")
      ->check(CLI::IsMember({"solve", "canonical", "group"}));
  mg->add_option("--graph", graph_file, "JSON graph file")->required();
  mg->add_option("--n", mg_n, "Code size");
  mg->add_option("--k", mg_k, "Points per edge for canonical codes");
  mg->add_option("--code", mg_code, "JSON code to audit against the group");
  builders.push_back([&] {
    if (!mg->parsed()) return;
    command = "mgraph." + mg_action;
    request["graph"] = load_file(graph_file, "graph", files);
    if (mg_n) request["n"] = *mg_n;
    if (mg_k) request["k"] = *mg_k;
    if (!mg_code.empty()) request["code"] = load_file(mg_code, "code", files);
  });

  // metric trees
  auto* tu = app.add_subcommand("tree-unicorn", "Admissible distances and unique codes on metric trees");
  std::string tree_file, tree_delta;
  std::optional<std::size_t> tree_max_k;
  tu->add_option("--tree", tree_file, "JSON tree file")->required();
  tu->add_option("--max-k", tree_max_k, "Largest denominator scanned");
  tu->add_option("--delta", tree_delta, "Build the unique code for this distance");
  builders.push_back([&] {
    if (!tu->parsed()) return;
    command = tree_delta.empty() ? "tree.scan" : "tree.code";
    request["tree"] = load_file(tree_file, "tree", files);
    if (tree_max_k) request["max_k"] = *tree_max_k;
    if (!tree_delta.empty()) request["delta"] = tree_delta;
  });

  // ultrametric
  auto* ul = app.add_subcommand("ultra", "Optimal codes in finite ultrametric spaces");
  std::string ultra_action = "optimal", ultra_tree;
  std::optional<std::size_t> ultra_n, dyadic;
  bool ultra_verify = false;
  ul->add_option("action", ultra_action, "optimal")->check(CLI::IsMember({"optimal"}));
  ul->add_option("--tree", ultra_tree, "JSON ball tree");
  ul->add_option("--dyadic-depth", dyadic, "Use the truncated 2-adic integers instead of a file");
  ul->add_option("--n", ultra_n, "Code size")->required();
  ul->add_flag("--verify", ultra_verify, "Cross-check with exhaustive search");
  builders.push_back([&] {
    if (!ul->parsed()) return;
    command = "ultra.optimal";
    if (dyadic) request["dyadic_depth"] = *dyadic;
    else if (!ultra_tree.empty()) request["tree"] = load_file(ultra_tree, "tree", files);
    else throw UsageError{"ultra needs --tree or --dyadic-depth"};
    request["n"] = *ultra_n;
    if (ultra_verify) request["verify"] = true;
  });

  // Hilbert cube and l^p
  auto* hb = app.add_subcommand("hilbert", "Hilbert-cube codes, the l^p example and truncated searches");
  std::string hb_action = "pair", base, listed;
  std::optional<std::size_t> terms, p_exp, hb_n, dims, restarts, cutoff;
  bool tail = false;
  hb->add_option("action", hb_action, "pair, triple, quad, lp or search")
      ->check(CLI::IsMember({"pair", "triple", "quad", "lp", "search"}));
  hb->add_option("--base", base, "Finite part of the index set (quad)");
  hb->add_option("--terms", terms, "Greedy terms (quad)");
  hb->add_option("--p", p_exp, "Exponent (lp)");
  hb->add_option("--listed", listed, "Indices k <= cutoff whose pair of points is kept (lp)");
  hb->add_option("--cutoff", cutoff, "Largest explicitly listed index (lp)");
  hb->add_flag("--tail-in-n", tail, "Indices beyond the cutoff belong to N (lp)");
  hb->add_option("--n", hb_n, "Code size (lp, search)");
  hb->add_option("--dims", dims, "Truncation dimension (search)");
  hb->add_option("--restarts", restarts, "Multistart count (search)");
  builders.push_back([&] {
    if (!hb->parsed()) return;
    command = "hilbert." + hb_action;
    if (!base.empty()) request["base"] = integer_list(base);
    if (terms) request["terms"] = *terms;
    if (p_exp) request["p"] = *p_exp;
    if (!listed.empty()) request["listed"] = integer_list(listed);
    if (cutoff) request["cutoff"] = *cutoff;
    if (tail) request["tail_in_n"] = true;
    if (hb_n) request["n"] = *hb_n;
    if (dims) request["dims"] = *dims;
    if (restarts) request["restarts"] = *restarts;
  });

  // greedy unit fractions
  auto* sz = app.add_subcommand("salzer", "Greedy unit-fraction expansion of a target in (0, 1/9)");
  std::string target;
  std::optional<std::size_t> sz_terms;
  sz->add_option("--target", target, "Expression such as \"alpha-1-1/4-1/9-1/16\"")->required();
  sz->add_option("--terms", sz_terms, "Number of terms");
  builders.push_back([&] {
    if (!sz->parsed()) return;
    command = "salzer";
    request["target"] = target;
    if (sz_terms) request["terms"] = *sz_terms;
  });

  // audit
  auto* au = app.add_subcommand("audit", "Symmetry audits of codes and symmetry-strength witnesses");
  std::string audit_action = "code", space_file, audit_code_file;
  std::optional<std::size_t> samples;
  au->add_option("action", audit_action, "code or strength")->check(CLI::IsMember({"code", "strength"}));
  au->add_option("--space", space_file, "JSON space description")->required();
  au->add_option("--code", audit_code_file, "JSON code (for the code audit)");
  au->add_option("--samples", samples, "Lower-witness samples (strength)");
  builders.push_back([&] {
    if (!au->parsed()) return;
    command = "audit." + audit_action;
    request["space"] = load_file(space_file, "space", files);
    if (audit_action == "code") {
      if (audit_code_file.empty()) throw UsageError{"audit code needs --code"};
      request["code"] = load_file(audit_code_file, "code", files);
    }
    if (samples) request["samples"] = *samples;
  });

  // repro
  auto* rp = app.add_subcommand("repro", "Reproduction suites with expected versus actual values");
  std::string suite;
  rp->add_option("name", suite, "e8-holy, d4-holy, fig3, loeschian, hilbert or orthoplex")->required();
  builders.push_back([&] {
    if (!rp->parsed()) return;
    command = "repro";
    request["name"] = suite;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  try {
    for (auto& b : builders) b();
  } catch (const UsageError& e) {
    std::cerr << "error (validation): " << e.message << "\n";
    return kExitValidation;
  }

  if (!budget) {
    if (const char* env = std::getenv("UNICORN_BUDGET")) {
      try {
        std::size_t used = 0;
        budget = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        std::cerr << "error (validation): UNICORN_BUDGET must be a positive integer\n";
        return kExitValidation;
      }
    }
  }

  uc_context* ctx = uc_context_new();
  if (!ctx) {
    std::cerr << "error (resource): cannot allocate a context\n";
    return kExitResource;
  }
  uc_status s = UC_OK;
  if (budget) s = uc_context_set_budget(ctx, *budget);
  if (s == UC_OK) s = uc_context_set_precision_bits(ctx, precision_bits);
  if (s == UC_OK) s = uc_context_set_seed(ctx, seed);
  uc_report* report = nullptr;
  if (s == UC_OK) s = uc_run(ctx, command.c_str(), request.dump().c_str(), &report);
  if (s != UC_OK) {
    std::cerr << "error (" << uc_status_name(s) << "): " << locate_error(uc_context_last_error(ctx), files) << "\n";
    uc_context_free(ctx);
    return exit_code(s);
  }
  std::string body = format == "csv" ? uc_report_csv(report) : uc_report_json(report);
  uc_report_free(report);
  uc_context_free(ctx);

  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << body;
    if (!out) {
      std::cerr << "error (resource): cannot write " << out_path << "\n";
      return kExitResource;
    }
  }
  return kExitOk;
}
