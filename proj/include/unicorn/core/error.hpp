#pragma once

#include <stdexcept>
#include <string>

namespace unicorn {

/// Classification of failures raised by the library. The C API and the CLI map
/// these onto status codes and process exit codes.
enum class ErrorKind {
  kDomain,
  kValidation,
  kPrecondition,
  kResource,
  kPrecision,
  kInternal,
  kUnsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind) noexcept;

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

/// Counts work units against a cap and raises a resource error once exceeded.
class Budget {
 public:
  explicit Budget(unsigned long long cap) : cap_(cap) {}
  void charge(unsigned long long units = 1) {
    used_ += units;
    if (used_ > cap_) exhausted();
  }
  unsigned long long used() const { return used_; }
  unsigned long long cap() const { return cap_; }

 private:
  [[noreturn]] void exhausted() const;
  unsigned long long cap_;
  unsigned long long used_ = 0;
};

}  // namespace unicorn
