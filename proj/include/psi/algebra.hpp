#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include "psi/interpreter.hpp"
#include "psi/value.hpp"

namespace psi::algebra {

// Source of the Group, Algebra, Complex and Monomial declarations plus the
// constant `i`.
std::string_view prelude_source();

// Executes the prelude in `interp` and binds the native kernels.
void load_prelude(eval::Interpreter& interp);

ComplexValue promote(const Integer& n);
ComplexValue complex_add(const ComplexValue& a, const ComplexValue& b);
ComplexValue complex_sub(const ComplexValue& a, const ComplexValue& b);
ComplexValue complex_neg(const ComplexValue& a);
ComplexValue complex_mul(const ComplexValue& a, const ComplexValue& b);
ComplexValue complex_conjugate(const ComplexValue& a);

// True for the root of a functional object of the form `C + D`.
bool is_sum(const Value& v);
// Integers and complex values commute with every algebra element.
bool is_scalar(const Value& v);

// One layer of distributivity: `(C + D) * b` gives `C*b + D*b`, otherwise
// `a * (E + F)` gives `a*E + a*F`, otherwise fail. Nothing is evaluated.
// With central_scalars a concrete scalar right factor moves in front of a
// non-scalar left factor; two non-scalar factors never change places.
Value distribute(const eval::Interpreter& interp, const Value& a, const Value& b,
                 bool central_scalars = true);

// Complex multiplication with the inherited rule first: distribute, then
// the componentwise product for concrete operands, else a residual.
Value complex_method_mul(eval::Interpreter& interp, const Value& a, const Value& b);

enum class Rule { absorb, fold, distribute, promote };
const char* rule_name(Rule rule);

struct RewriteStep {
  Rule rule;
  Value before;  // the rewritten subterm
  Value after;
  Value tree;    // the whole term after the step
};

struct SimplifyOptions {
  std::size_t max_rewrites = 10'000;
  bool central_scalars = true;
  std::function<void(const RewriteStep&)> on_step;
};

// Rewrites leftmost-innermost, one step at a time, until no rule applies.
// Throws RewriteLimitExceeded when the step budget runs out.
Value simplify(eval::Interpreter& interp, const Value& v, const SimplifyOptions& options = {});

// Host functions `simplify`, `mono`, `conj` and `label`.
void install_builtins(eval::Interpreter& interp, SimplifyOptions options);

}  // namespace psi::algebra
