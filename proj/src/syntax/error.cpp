#include "lf/error.hpp"

namespace lf {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IllTypedApplication: return "IllTypedApplication";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::FuelExhausted: return "FuelExhausted";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownNotation: return "UnknownNotation";
    case ErrorCode::AmbiguousTypes: return "AmbiguousTypes";
    case ErrorCode::NoCompletion: return "NoCompletion";
    case ErrorCode::GuardViolation: return "GuardViolation";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NotBetaEquivalent: return "NotBetaEquivalent";
    case ErrorCode::FreshnessViolation: return "FreshnessViolation";
    case ErrorCode::NonEmptyContext: return "NonEmptyContext";
    case ErrorCode::TypeRestriction: return "TypeRestriction";
    case ErrorCode::RuleDisabled: return "RuleDisabled";
    case ErrorCode::UndischargedAssumption: return "UndischargedAssumption";
    case ErrorCode::NoExtension: return "NoExtension";
    case ErrorCode::UnknownRule: return "UnknownRule";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::UnknownTheory: return "UnknownTheory";
    case ErrorCode::ScriptError: return "ScriptError";
  }
  return "Unknown";
}

}  // namespace lf
