#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace psi {

// Arbitrary precision integer used for literals and runtime arithmetic.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace psi
