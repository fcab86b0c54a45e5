#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace psi {

// Location of a token or node in its source text. Lines and columns are
// 1-based; offset is a byte index.
struct Span {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

enum class ErrorCode {
  // syntax
  lex,
  parse,
  arity,
  empty_word,
  // registry and typing
  duplicate_type,
  unknown_ancestor,
  field_shadowing,
  unknown_type,
  signature_mismatch,
  type_mismatch,
  // runtime
  unknown_identifier,
  no_such_method,
  unassigned_return,
  rebound_par_variable,
  rewrite_limit_exceeded,
  invariant_violation,
  overflow,
  runtime,
};

enum class ErrorCategory { syntax, type, runtime };

ErrorCategory category_of(ErrorCode code);
const char* code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message);
  Error(ErrorCode code, std::string message, Span span,
        std::vector<std::string> expected = {});

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return category_of(code_); }
  const Span& span() const { return span_; }
  bool has_span() const { return has_span_; }
  // Tokens the parser would have accepted (ParseError only).
  const std::vector<std::string>& expected() const { return expected_; }
  // True when a parse error was caused by running out of input.
  bool at_end() const { return at_end_; }

  Error& with_span(Span span);
  Error& mark_at_end();

 private:
  ErrorCode code_;
  Span span_;
  bool has_span_;
  bool at_end_ = false;
  std::vector<std::string> expected_;
};

}  // namespace psi
