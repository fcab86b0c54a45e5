#pragma once

#include <string_view>
#include <vector>

#include "psi/syntax/token.hpp"

namespace psi::syntax {

// Splits source text into tokens. Whitespace and `{ ... }` comments are
// skipped. The result always ends with an end_of_input token whose span
// sits at the end of the source.
std::vector<Token> tokenize(std::string_view source);

}  // namespace psi::syntax
