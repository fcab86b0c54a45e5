#pragma once

#include <string>

#include "psi/syntax/ast.hpp"

namespace psi::syntax {

// Renders source text that parses back to the same tree. Parentheses are
// emitted only where precedence or left associativity requires them.
std::string format_expr(const Expr& expr);
std::string format_stmt(const Stmt& stmt, int indent = 0);
std::string format_program(const Program& program);

}  // namespace psi::syntax
