#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maxpoint {

enum class ErrorCode {
  DuplicateLabel,
  UnknownLabel,
  CycleDetected,
  NotAPartialOrder,
  ForeignSet,
  EmptySet,
  TooLarge,
  NotAnIdeal,
  InvalidModel,
  NotAProductTopology,
  VerificationFailed,
  NotCoveringMax,
  InvalidSymbolicOpen,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Failures the caller can attribute to a broken theorem precondition or a
// failed proof obligation, as opposed to malformed input.
bool is_verification_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace maxpoint
