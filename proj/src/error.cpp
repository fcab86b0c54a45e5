#include "psi/error.hpp"

#include <utility>

namespace psi {

ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::lex:
    case ErrorCode::parse:
    case ErrorCode::arity:
    case ErrorCode::empty_word:
      return ErrorCategory::syntax;
    case ErrorCode::duplicate_type:
    case ErrorCode::unknown_ancestor:
    case ErrorCode::field_shadowing:
    case ErrorCode::unknown_type:
    case ErrorCode::signature_mismatch:
    case ErrorCode::type_mismatch:
      return ErrorCategory::type;
    default:
      return ErrorCategory::runtime;
  }
}

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::lex: return "LexError";
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::arity: return "ArityError";
    case ErrorCode::empty_word: return "EmptyWordError";
    case ErrorCode::duplicate_type: return "DuplicateType";
    case ErrorCode::unknown_ancestor: return "UnknownAncestor";
    case ErrorCode::field_shadowing: return "FieldShadowing";
    case ErrorCode::unknown_type: return "UnknownType";
    case ErrorCode::signature_mismatch: return "SignatureMismatch";
    case ErrorCode::type_mismatch: return "TypeMismatch";
    case ErrorCode::unknown_identifier: return "UnknownIdentifier";
    case ErrorCode::no_such_method: return "NoSuchMethod";
    case ErrorCode::unassigned_return: return "UnassignedReturn";
    case ErrorCode::rebound_par_variable: return "ReboundParVariable";
    case ErrorCode::rewrite_limit_exceeded: return "RewriteLimitExceeded";
    case ErrorCode::invariant_violation: return "InvariantViolation";
    case ErrorCode::overflow: return "OverflowError";
    case ErrorCode::runtime: return "RuntimeError";
  }
  return "Error";
}

Error::Error(ErrorCode code, std::string message)
    : std::runtime_error(std::move(message)), code_(code), has_span_(false) {}

Error::Error(ErrorCode code, std::string message, Span span,
             std::vector<std::string> expected)
    : std::runtime_error(std::move(message)),
      code_(code),
      span_(span),
      has_span_(true),
      expected_(std::move(expected)) {}

Error& Error::with_span(Span span) {
  span_ = span;
  has_span_ = true;
  return *this;
}

Error& Error::mark_at_end() {
  at_end_ = true;
  return *this;
}

}  // namespace psi
