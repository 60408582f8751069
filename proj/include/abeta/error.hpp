#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abeta {

enum class ErrorCode {
  kDomain,
  kLength,
  kConstraintInfeasible,
  kNoRoot,
  kLimit,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying one of the library's error categories.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain:
      return "DOMAIN";
    case ErrorCode::kLength:
      return "LENGTH";
    case ErrorCode::kConstraintInfeasible:
      return "CONSTRAINT_INFEASIBLE";
    case ErrorCode::kNoRoot:
      return "NO_ROOT";
    case ErrorCode::kLimit:
      return "LIMIT";
  }
  return "UNKNOWN";
}

}  // namespace abeta
