#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "unicorn/core/pipoly.hpp"
#include "unicorn/core/rational.hpp"

namespace unicorn::report {

using Json = nlohmann::ordered_json;

struct Options {
  unsigned long precision_bits = kDefaultMaxBits;
  unsigned long long budget = 2'000'000'000ULL;
  std::uint64_t seed = 1;
};

/// Runs one command on a JSON request and returns the JSON report. Malformed
/// requests raise validation errors whose message starts with the JSON
/// pointer of the offending value.
Json run(const std::string& command, const Json& request, const Options& options);

/// Names accepted by run().
std::vector<std::string> commands();

/// Names accepted by the repro command.
std::vector<std::string> repro_names();

/// Code coordinates as CSV rows (header first). Reports without a code give
/// one key,value row per scalar field.
std::string to_csv(const Json& report);

Json rational_json(const Rational& r);
Json pipoly_json(const PiPoly& p);

}  // namespace unicorn::report
