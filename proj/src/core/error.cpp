#include "unicorn/core/error.hpp"

namespace unicorn {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kResource: return "resource";
    case ErrorKind::kPrecision: return "precision";
    case ErrorKind::kInternal: return "internal";
    case ErrorKind::kUnsupported: return "unsupported";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

void Budget::exhausted() const {
  raise(ErrorKind::kResource,
        "work budget exhausted after " + std::to_string(used_) + " units (cap " +
            std::to_string(cap_) + ")");
}

}  // namespace unicorn
