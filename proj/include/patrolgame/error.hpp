#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace patrolgame {

enum class ErrorCode {
  InvalidSpec,
  DimensionMismatch,
  NotIrreducible,
  BracketError,
  InfeasibleTau,
  TrivialGame,
  BudgetOutOfRange,
  ParityError,
  InvalidStart,
  SearchSpaceExceeded,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code identifies the contract
/// that was violated.
class PatrolError : public std::runtime_error {
 public:
  PatrolError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace patrolgame
