#include "psi/algebra.hpp"

#include <optional>
#include <ostream>

#include "psi/error.hpp"

namespace psi::algebra {

namespace {

const Operator kPlus{"+", Fixity::infix};
const Operator kTimes{"*", Fixity::infix};

bool is_complex_typed(const eval::Interpreter& interp, const Value& v) {
  if (v.is<ComplexValue>()) return true;
  const auto complex = interp.registry().complex_type();
  if (!complex) return false;
  if (v.is_fail() || v.is<Integer>()) return false;
  return interp.type_of(v) == *complex;
}

// Multiplication distributes for integers and for every Algebra descendant.
bool is_algebraic(const eval::Interpreter& interp, TypeId t) {
  if (t == kIntegerType) return true;
  const auto algebra = interp.registry().algebra_type();
  return algebra && interp.registry().is_descendant(t, *algebra);
}

Value product(const eval::Interpreter& interp, const Value& l, const Value& r,
              bool central_scalars) {
  if (central_scalars && is_scalar(r) && !is_scalar(l)) {
    return interp.build_application(kTimes, {r, l});
  }
  return interp.build_application(kTimes, {l, r});
}

std::optional<ComplexValue> as_complex(const Value& v) {
  if (const auto* c = v.get_if<ComplexValue>()) return *c;
  if (const auto* n = v.get_if<Integer>()) return promote(*n);
  return std::nullopt;
}

class Rewriter {
 public:
  Rewriter(eval::Interpreter& interp, const SimplifyOptions& options)
      : interp_(interp), options_(options) {}

  Value run(Value v) {
    for (;;) {
      auto next = step(v);
      if (!next) return v;
      v = std::move(*next);
      if (options_.on_step) {
        options_.on_step(RewriteStep{pending_.rule, pending_.before, pending_.after, v});
      }
    }
  }

 private:
  // The tree after one rewrite at the leftmost-innermost redex, or nothing
  // at a normal form.
  std::optional<Value> step(const Value& v) {
    const FunctionalObject* node = v.thunk();
    if (!node) return std::nullopt;
    for (std::size_t k = 0; k < node->operands.size(); ++k) {
      if (auto child = step(node->operands[k])) {
        std::vector<Value> operands = node->operands;
        operands[k] = std::move(*child);
        return make_thunk(node->op, std::move(operands), node->result_type);
      }
    }
    auto rewritten = rewrite_here(v, *node);
    if (rewritten) {
      if (++count_ > options_.max_rewrites) {
        throw Error(ErrorCode::rewrite_limit_exceeded,
                    "simplification did not finish within " +
                        std::to_string(options_.max_rewrites) + " rewrites");
      }
    }
    return rewritten;
  }

  std::optional<Value> rewrite_here(const Value& v, const FunctionalObject& node) {
    for (const auto& o : node.operands) {
      if (o.is_fail()) return record(Rule::absorb, v, Value::fail());
    }
    bool concrete = true;
    for (const auto& o : node.operands) concrete = concrete && !o.is_symbolic();
    if (concrete) {
      Value folded = interp_.apply(node.op, node.operands);
      if (!(folded == v)) return record(Rule::fold, v, std::move(folded));
    }
    if (node.op == kTimes && node.operands.size() == 2 &&
        is_algebraic(interp_, interp_.receiver_type(node.op, node.operands)) &&
        (is_sum(node.operands[0]) || is_sum(node.operands[1]))) {
      return record(Rule::distribute, v,
                    distribute(interp_, node.operands[0], node.operands[1],
                               options_.central_scalars));
    }
    if (node.operands.size() == 2 && node.op.fixity == Fixity::infix) {
      for (std::size_t k = 0; k < 2; ++k) {
        const Value& o = node.operands[k];
        if (o.is<Integer>() && is_complex_typed(interp_, node.operands[1 - k])) {
          std::vector<Value> operands = node.operands;
          operands[k] = Value(promote(o.as<Integer>()));
          return record(Rule::promote, v,
                        make_thunk(node.op, std::move(operands), node.result_type));
        }
      }
    }
    return std::nullopt;
  }

  Value record(Rule rule, const Value& before, Value after) {
    pending_ = {rule, before, after, Value()};
    return after;
  }

  eval::Interpreter& interp_;
  const SimplifyOptions& options_;
  std::size_t count_ = 0;
  RewriteStep pending_{Rule::fold, Value(), Value(), Value()};
};

}  // namespace

ComplexValue promote(const Integer& n) { return ComplexValue{n, 0}; }

ComplexValue complex_add(const ComplexValue& a, const ComplexValue& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexValue complex_sub(const ComplexValue& a, const ComplexValue& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexValue complex_neg(const ComplexValue& a) { return {-a.re, -a.im}; }

ComplexValue complex_mul(const ComplexValue& a, const ComplexValue& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexValue complex_conjugate(const ComplexValue& a) { return {a.re, -a.im}; }

bool is_sum(const Value& v) {
  const FunctionalObject* t = v.thunk();
  return t && t->op == kPlus && t->operands.size() == 2;
}

bool is_scalar(const Value& v) { return v.is<Integer>() || v.is<ComplexValue>(); }

Value distribute(const eval::Interpreter& interp, const Value& a, const Value& b,
                 bool central_scalars) {
  if (is_sum(a)) {
    const auto& sum = *a.thunk();
    return interp.build_application(
        kPlus, {product(interp, sum.operands[0], b, central_scalars),
                product(interp, sum.operands[1], b, central_scalars)});
  }
  if (is_sum(b)) {
    const auto& sum = *b.thunk();
    return interp.build_application(
        kPlus, {product(interp, a, sum.operands[0], central_scalars),
                product(interp, a, sum.operands[1], central_scalars)});
  }
  return Value::fail();
}

Value complex_method_mul(eval::Interpreter& interp, const Value& a, const Value& b) {
  if (a.is_fail() || b.is_fail()) return Value::fail();
  Value inherited = distribute(interp, a, b);
  if (!inherited.is_fail()) return inherited;
  const auto ca = as_complex(a);
  const auto cb = as_complex(b);
  if (ca && cb) return Value(complex_mul(*ca, *cb));
  if (a.is_symbolic() || b.is_symbolic()) return interp.build_application(kTimes, {a, b});
  throw Error(ErrorCode::type_mismatch, "cannot multiply " + interp.type_name(a) + " by " +
                                            interp.type_name(b) + " as complex numbers");
}

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::absorb:
      return "absorb";
    case Rule::fold:
      return "fold";
    case Rule::distribute:
      return "distribute";
    case Rule::promote:
      return "promote";
  }
  return "?";
}

Value simplify(eval::Interpreter& interp, const Value& v, const SimplifyOptions& options) {
  return Rewriter(interp, options).run(v);
}

void install_builtins(eval::Interpreter& interp, SimplifyOptions options) {
  auto expect_args = [](const eval::BuiltinCall& c, std::size_t n, const char* name) {
    if (c.values.size() != n) {
      throw Error(ErrorCode::type_mismatch, std::string(name) + " takes " + std::to_string(n) +
                                                " argument" + (n == 1 ? "" : "s") + ", got " +
                                                std::to_string(c.values.size()));
    }
  };

  interp.define_builtin("simplify", [options, expect_args](eval::Interpreter& in,
                                                           eval::BuiltinCall& c) {
    expect_args(c, 1, "simplify");
    return std::optional<Value>(simplify(in, c.values[0], options));
  });

  interp.define_builtin("mono", [expect_args](eval::Interpreter& in, eval::BuiltinCall& c) {
    expect_args(c, 4, "mono");
    const auto t = in.registry().monomial_type();
    if (!t) throw Error(ErrorCode::unknown_type, "mono needs the Monomial type from the prelude");
    return std::optional<Value>(in.construct(*t, c.values, c.span));
  });

  interp.define_builtin("conj", [expect_args](eval::Interpreter& in, eval::BuiltinCall& c) {
    expect_args(c, 1, "conj");
    const Value& v = c.values[0];
    if (const auto* r = v.get_if<lorentz::MonomialRegister>()) {
      return std::optional<Value>(lorentz::register_conjugate(*r));
    }
    if (const auto* z = v.get_if<ComplexValue>()) return std::optional<Value>(complex_conjugate(*z));
    if (v.is<Integer>() || v.is_fail()) return std::optional<Value>(v);
    throw Error(ErrorCode::type_mismatch,
                "conj needs a monomial or a complex value, got " + in.type_name(v));
  });

  interp.define_builtin("label", [expect_args](eval::Interpreter& in, eval::BuiltinCall& c) {
    expect_args(c, 1, "label");
    const auto* r = c.values[0].get_if<lorentz::MonomialRegister>();
    if (!r) {
      throw Error(ErrorCode::type_mismatch,
                  "label needs a monomial, got " + in.type_name(c.values[0]));
    }
    in.output() << lorentz::rep_label(*r).to_string() << '\n';
    return std::optional<Value>();
  });
}

}  // namespace psi::algebra
