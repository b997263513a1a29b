#pragma once

#include <stdexcept>
#include <string>

namespace lpcompact {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgumentError : Error {
  using Error::Error;
};

struct SpaceMismatchError : Error {
  SpaceMismatchError() : Error("operands live on different measure spaces") {}
  explicit SpaceMismatchError(const std::string& what) : Error(what) {}
};

struct MeanOfNullSetError : Error {
  MeanOfNullSetError() : Error("mean over a set of measure zero") {}
};

struct OscOfEmptySetError : Error {
  OscOfEmptySetError() : Error("oscillation over an empty set") {}
};

struct NoFeasibleDeltaError : Error {
  explicit NoFeasibleDeltaError(const std::string& what) : Error(what) {}
};

// Raised when a hypothesis of the inequality-chain audit fails; carries the
// name of the violated hypothesis so the audit doubles as a checker.
struct PreconditionViolatedError : Error {
  std::string hypothesis;
  PreconditionViolatedError(std::string hyp, const std::string& what)
      : Error("precondition '" + hyp + "' violated: " + what),
        hypothesis(std::move(hyp)) {}
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace lpcompact
