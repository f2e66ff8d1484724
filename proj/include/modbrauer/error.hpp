#pragma once

#include <stdexcept>
#include <string>

namespace modbrauer {

/// Failure categories. The numeric values are shared with the C API
/// (`mb_status`) and with the CLI exit codes.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kParse = 2,
  kScope = 3,
  kInsufficientData = 4,
  kConsistency = 5,
  kIo = 6,
  kInternal = 7,
  kInvariant = 8,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace modbrauer
