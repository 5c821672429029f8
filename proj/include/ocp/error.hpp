#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ocp {

// One entry per failure class surfaced by the library. The C API maps these
// one-to-one onto ocp_status values, so keep the order in sync with ocp.h.
enum class ErrorKind {
  kParse = 1,
  kRange,
  kDuplicateEdgeId,
  kUnknownEdge,
  kNotIncident,
  kRepeatedVertex,
  kMixedEndpoints,
  kSameEndpoints,
  kAdjacentEndpoints,
  kBadParameters,
  kPreconditionFailed,
  kInfeasible,
  kLimitExceeded,
  kForbiddenTooLarge,
  kSegmentBlocked,
  kNothingFound,
  kMinimalityBreach,
  kHypothesisViolated,
  kEmptyFamily,
  kNotEdgeDisjoint,
  kBadSegmentFamily,
  kEndpointMismatch,
  kNotATerminal,
  kTerminalExists,
  kNoTerminalAtLevel,
  kLevelExhausted,
  kInternal,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse-time failures carry the 1-based line they were detected on.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace ocp
