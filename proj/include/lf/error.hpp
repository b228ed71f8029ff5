#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lf {

// Every failure the library reports carries one of these codes. The names are
// part of the CLI contract (they are printed verbatim), so do not rename them.
enum class ErrorCode {
  // core syntax
  IllTypedApplication,
  TypeMismatch,
  FuelExhausted,
  // notation
  SyntaxError,
  UnknownNotation,
  AmbiguousTypes,
  NoCompletion,
  GuardViolation,
  ArityMismatch,
  // kernel
  ShapeMismatch,
  ContextMismatch,
  NotBetaEquivalent,
  FreshnessViolation,
  NonEmptyContext,
  TypeRestriction,
  RuleDisabled,
  UndischargedAssumption,
  // extensions / library / scripts
  NoExtension,
  UnknownRule,
  UnknownTheorem,
  UnknownTheory,
  ScriptError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace lf
