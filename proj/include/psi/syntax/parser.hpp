#pragma once

#include <string_view>
#include <vector>

#include "psi/syntax/ast.hpp"
#include "psi/syntax/token.hpp"

namespace psi::syntax {

Program parse_program(const std::vector<Token>& tokens);
Program parse_program(std::string_view source);

// Parses a single expression; the token stream may end with one `;`.
ExprPtr parse_expression(const std::vector<Token>& tokens);
ExprPtr parse_expression(std::string_view source);

// Reads a word of single-character identifiers as a right-nested chain of
// calls to op_name: "abc" becomes op_name(a, op_name(b, c)).
ExprPtr parse_juxtaposition(std::string_view word, std::string_view op_name);

}  // namespace psi::syntax
