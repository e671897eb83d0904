#pragma once

#include <string>

#include "unicorn/core/error.hpp"
#include "unicorn/rankin/rankin.hpp"
#include "unicorn/report/report.hpp"
#include "unicorn/torus/torus.hpp"

namespace unicorn::report {

struct Context {
  const Options& options;
  Budget budget;
};

/// Deep holes, cosets, holy graph, maximum cliques, extension and orbits.
Json holy_report(const torus::LatticeSpec& spec, Context& ctx, bool include_cliques);

std::string decomposition_type(const rankin::OrthoplexDecomposition& dec);

Json run_repro(const std::string& name, Context& ctx);

}  // namespace unicorn::report
