#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lbi {

enum class ErrorCode {
  MalformedInput,
  RankDeficient,
  OrientationError,
  CapExceeded,
  NotALeftTurn,
  EmptySlice,
  WindowTooLarge,
  NoStabilization,
  NotMonomialPrime,
  NotToral,
  NotAndean,
  NoSolution,
  InvalidA,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// command line front end can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures caused by a search running out of room rather than by
  /// bad input.
  bool is_budget_exhaustion() const noexcept {
    return code_ == ErrorCode::CapExceeded || code_ == ErrorCode::WindowTooLarge ||
           code_ == ErrorCode::NoStabilization;
  }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::OrientationError: return "OrientationError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotALeftTurn: return "NotALeftTurn";
    case ErrorCode::EmptySlice: return "EmptySlice";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::NotMonomialPrime: return "NotMonomialPrime";
    case ErrorCode::NotToral: return "NotToral";
    case ErrorCode::NotAndean: return "NotAndean";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::InvalidA: return "InvalidA";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace lbi
