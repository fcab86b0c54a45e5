#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "psi/error.hpp"

namespace psi::syntax {

enum class TokenKind {
  keyword,
  identifier,
  integer_literal,
  operator_symbol,
  punctuation,
  end_of_input,
};

struct Token {
  TokenKind kind = TokenKind::end_of_input;
  // Exact source text. A U+2212 minus keeps its original bytes here;
  // `text` carries the normalized spelling used by the parser.
  std::string lexeme;
  std::string text;
  Span span;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_keyword(std::string_view t) const { return is(TokenKind::keyword, t); }
  bool is_op(std::string_view t) const { return is(TokenKind::operator_symbol, t); }
  bool is_punct(std::string_view t) const { return is(TokenKind::punctuation, t); }
};

bool is_keyword(std::string_view word);
const std::vector<std::string>& keywords();
std::string describe(const Token& token);

}  // namespace psi::syntax
