#pragma once

#include <string>

namespace psi {

enum class Fixity { infix, prefix, ordinary };

const char* fixity_name(Fixity f);

// An operation symbol together with how it is applied: `+` infix, `-`
// prefix, or an ordinary named function.
struct Operator {
  std::string symbol;
  Fixity fixity = Fixity::infix;

  friend auto operator<=>(const Operator&, const Operator&) = default;
};

}  // namespace psi
