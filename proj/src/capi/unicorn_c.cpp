#include "unicorn/unicorn.h"

#include <new>
#include <string>

#include "unicorn/core/error.hpp"
#include "unicorn/report/report.hpp"

struct uc_context {
  unicorn::report::Options options;
  std::string last_error;
};

struct uc_report {
  std::string json;
  std::string csv;
};

namespace {

uc_status status_of(unicorn::ErrorKind k) {
  using unicorn::ErrorKind;
  switch (k) {
    case ErrorKind::kValidation: return UC_ERR_VALIDATION;
    case ErrorKind::kDomain: return UC_ERR_DOMAIN;
    case ErrorKind::kPrecondition: return UC_ERR_PRECONDITION;
    case ErrorKind::kResource: return UC_ERR_RESOURCE;
    case ErrorKind::kPrecision: return UC_ERR_PRECISION;
    case ErrorKind::kUnsupported: return UC_ERR_UNSUPPORTED;
    case ErrorKind::kInternal: return UC_ERR_INTERNAL;
  }
  return UC_ERR_INTERNAL;
}

uc_status fail(uc_context* ctx, uc_status s, const std::string& message) {
  if (ctx) ctx->last_error = message;
  return s;
}

}  // namespace

extern "C" {

const char* uc_version(void) { return "0.1.0"; }

const char* uc_status_name(uc_status status) {
  switch (status) {
    case UC_OK: return "ok";
    case UC_ERR_VALIDATION: return "validation";
    case UC_ERR_DOMAIN: return "domain";
    case UC_ERR_PRECONDITION: return "precondition";
    case UC_ERR_RESOURCE: return "resource";
    case UC_ERR_PRECISION: return "precision";
    case UC_ERR_UNSUPPORTED: return "unsupported";
    case UC_ERR_INTERNAL: return "internal";
    case UC_ERR_ARGUMENT: return "argument";
  }
  return "unknown";
}

uc_context* uc_context_new(void) { return new (std::nothrow) uc_context(); }

void uc_context_free(uc_context* ctx) { delete ctx; }

uc_status uc_context_set_budget(uc_context* ctx, uint64_t cap) {
  if (!ctx) return UC_ERR_ARGUMENT;
  if (cap == 0) return fail(ctx, UC_ERR_ARGUMENT, "budget must be positive");
  ctx->options.budget = cap;
  return UC_OK;
}

uc_status uc_context_set_precision_bits(uc_context* ctx, uint64_t bits) {
  if (!ctx) return UC_ERR_ARGUMENT;
  if (bits < 64 || bits > (1ULL << 26)) return fail(ctx, UC_ERR_ARGUMENT, "precision must lie in [64, 2^26] bits");
  ctx->options.precision_bits = static_cast<unsigned long>(bits);
  return UC_OK;
}

uc_status uc_context_set_seed(uc_context* ctx, uint64_t seed) {
  if (!ctx) return UC_ERR_ARGUMENT;
  ctx->options.seed = seed;
  return UC_OK;
}

const char* uc_context_last_error(const uc_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

uc_status uc_run(uc_context* ctx, const char* command, const char* request_json, uc_report** out) {
  if (!ctx) return UC_ERR_ARGUMENT;
  if (!command || !request_json || !out) return fail(ctx, UC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  ctx->last_error.clear();
  try {
    unicorn::report::Json req;
    try {
      req = unicorn::report::Json::parse(request_json);
    } catch (const unicorn::report::Json::parse_error& e) {
      return fail(ctx, UC_ERR_ARGUMENT, std::string("request is not valid JSON: ") + e.what());
    }
    auto result = unicorn::report::run(command, req, ctx->options);
    auto* r = new uc_report();
    r->json = result.dump(2) + "\n";
    r->csv = unicorn::report::to_csv(result);
    *out = r;
    return UC_OK;
  } catch (const unicorn::Error& e) {
    return fail(ctx, status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, UC_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(ctx, UC_ERR_INTERNAL, e.what());
  }
}

const char* uc_commands(void) {
  static const std::string list = [] {
    std::string s;
    for (const auto& c : unicorn::report::commands()) s += c + "\n";
    return s;
  }();
  return list.c_str();
}

const char* uc_report_json(const uc_report* report) { return report ? report->json.c_str() : ""; }
const char* uc_report_csv(const uc_report* report) { return report ? report->csv.c_str() : ""; }
void uc_report_free(uc_report* report) { delete report; }

}  // extern "C"
