#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tileforge {

enum class ErrorCode {
  EmptyDomain,
  DuplicateCell,
  Disconnected,
  NotSimplyConnected,
  InvalidSize,
  ParseError,
  InconsistentBoundary,
  InvalidTiling,
  InvalidHeight,
  Untileable,
  Infeasible,
  DomainMismatch,
  NotFlippable,
  NonIntegral,
  InvalidWord,
  IndexMismatch,
  InvalidNumbering,
  NotComparable,
  UnknownWord,
  Overflow,
  UnsupportedFormat,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure in the library surfaces as this exception; code() is the
// stable machine-readable part, what() carries the human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tileforge
