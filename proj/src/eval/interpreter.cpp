#include "psi/interpreter.hpp"

#include <iostream>
#include <utility>

#include "psi/syntax/printer.hpp"

namespace psi::eval {

namespace {

using namespace psi::syntax;

class DepthGuard {
 public:
  DepthGuard(std::size_t& depth, const Span& span) : depth_(depth) {
    if (++depth_ > Interpreter::kMaxCallDepth) {
      --depth_;
      throw Error(ErrorCode::runtime, "call depth limit exceeded", span);
    }
  }
  ~DepthGuard() { --depth_; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

 private:
  std::size_t& depth_;
};

Error at(Error e, const Span& span) {
  if (!e.has_span()) e.with_span(span);
  return e;
}

void collect_identifiers(const Expr& e, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Ident>) {
          out.push_back(n.name);
        } else if constexpr (std::is_same_v<T, Binary>) {
          collect_identifiers(*n.lhs, out);
          collect_identifiers(*n.rhs, out);
        } else if constexpr (std::is_same_v<T, Prefix>) {
          collect_identifiers(*n.operand, out);
        } else if constexpr (std::is_same_v<T, Call>) {
          for (const auto& a : n.args) collect_identifiers(*a, out);
        }
      },
      e.node);
}

Integer integer_arg(std::span<const Value> args, std::size_t i) { return args[i].as<Integer>(); }

}  // namespace

Interpreter::Interpreter() : out_(&std::cout) { install_integer_natives(); }

void Interpreter::install_integer_natives() {
  const std::vector<model::Slot> two = {{"A", kIntegerType}, {"B", kIntegerType}};
  const std::vector<model::Slot> one = {{"A", kIntegerType}};
  registry_.add_native(kIntegerType, {"+", Fixity::infix}, two, kIntegerType,
                       [](Interpreter&, std::span<const Value> a) {
                         return Value(integer_arg(a, 0) + integer_arg(a, 1));
                       });
  registry_.add_native(kIntegerType, {"-", Fixity::infix}, two, kIntegerType,
                       [](Interpreter&, std::span<const Value> a) {
                         return Value(integer_arg(a, 0) - integer_arg(a, 1));
                       });
  registry_.add_native(kIntegerType, {"*", Fixity::infix}, two, kIntegerType,
                       [](Interpreter&, std::span<const Value> a) {
                         return Value(integer_arg(a, 0) * integer_arg(a, 1));
                       });
  registry_.add_native(kIntegerType, {"-", Fixity::prefix}, one, kIntegerType,
                       [](Interpreter&, std::span<const Value> a) {
                         return Value(Integer(-integer_arg(a, 0)));
                       });
}

void Interpreter::define_builtin(const std::string& name, Builtin fn) {
  builtins_[name] = std::move(fn);
}

State Interpreter::snapshot() const { return State{registry_, *globals_.root_ptr(), functions_}; }

void Interpreter::restore(const State& state) {
  registry_ = state.registry;
  *globals_.root_ptr() = state.globals;
  functions_ = state.functions;
}

// -- types --------------------------------------------------------------------

TypeId Interpreter::type_of(const Value& v) const {
  if (v.is<Integer>()) return kIntegerType;
  if (v.is<ComplexValue>()) {
    if (auto t = registry_.complex_type()) return *t;
    throw Error(ErrorCode::unknown_type, "complex values need the Complex type");
  }
  if (v.is<lorentz::MonomialRegister>()) {
    if (auto t = registry_.monomial_type()) return *t;
    throw Error(ErrorCode::unknown_type, "monomial registers need the Monomial type");
  }
  if (const auto* i = v.get_if<Instance>()) return i->data->type;
  if (const auto* f = v.get_if<FreeVar>()) return f->type;
  if (const auto* t = v.thunk()) return t->result_type;
  return kFailType;
}

TypeId Interpreter::receiver_type(const Operator& op, std::span<const Value> operands) const {
  if (operands.empty()) {
    throw Error(ErrorCode::runtime, "'" + op.symbol + "' applied to no operands");
  }
  const TypeId first = type_of(operands[0]);
  if (operands.size() == 2 && op.fixity == Fixity::infix && first == kIntegerType) {
    const TypeId second = type_of(operands[1]);
    if (second != kIntegerType && second != kFailType &&
        registry_.accepts_integer_promotion(second)) {
      return second;
    }
  }
  return first;
}

Value Interpreter::coerce(const Value& v, TypeId slot, const Span& span) const {
  if (v.is_fail()) return v;
  const TypeId t = type_of(v);
  const Kind kind = classify_binding(v);
  if (!registry_.kind_compatible(KindedType{slot, Kind::value}, KindedType{t, kind})) {
    throw Error(ErrorCode::type_mismatch,
                "cannot use " + registry_.name(t) + " " + kind_name(kind) + " where " +
                    registry_.name(slot) + " is expected",
                span);
  }
  if (slot != kIntegerType && v.is<Integer>()) return Value(ComplexValue{v.as<Integer>(), 0});
  return v;
}

bool Interpreter::values_equal(const Value& a, const Value& b) const {
  if (a.is<Integer>() && b.is<ComplexValue>()) return ComplexValue{a.as<Integer>(), 0} == b.as<ComplexValue>();
  if (a.is<ComplexValue>() && b.is<Integer>()) return values_equal(b, a);
  return a == b;
}

Value Interpreter::construct(TypeId type, std::vector<Value> args, const Span& span) const {
  const std::string name = registry_.name(type);
  auto mismatch = [&](const std::string& why) {
    return Error(ErrorCode::type_mismatch, "cannot construct " + name + ": " + why, span);
  };
  for (const auto& a : args) {
    if (a.is_fail()) return Value::fail();
  }
  if (type == kIntegerType) {
    if (args.size() != 1 || !args[0].is<Integer>()) throw mismatch("expected one integer");
    return args[0];
  }
  if (type == registry_.complex_type()) {
    if (args.size() == 1 && args[0].is<ComplexValue>()) return args[0];
    if (args.size() == 1 && args[0].is<Integer>()) return Value(ComplexValue{args[0].as<Integer>(), 0});
    if (args.size() == 2 && args[0].is<Integer>() && args[1].is<Integer>()) {
      return Value(ComplexValue{args[0].as<Integer>(), args[1].as<Integer>()});
    }
    throw mismatch("expected concrete integer components");
  }
  if (type == registry_.monomial_type()) {
    if (args.size() != 4) throw mismatch("expected four exponents");
    std::int64_t c[4];
    for (std::size_t i = 0; i < 4; ++i) {
      if (!args[i].is<Integer>()) throw mismatch("exponents must be concrete integers");
      const auto& n = args[i].as<Integer>();
      if (n < 0 || n > lorentz::MonomialRegister::kMaxComponent) {
        throw Error(ErrorCode::invariant_violation, "register component out of range", span);
      }
      c[i] = static_cast<std::int64_t>(n);
    }
    try {
      return Value(lorentz::MonomialRegister(c[0], c[1], c[2], c[3]));
    } catch (Error& e) {
      throw at(e, span);
    }
  }
  const auto fields = registry_.all_fields(type);
  if (args.size() != fields.size()) {
    throw mismatch("expected " + std::to_string(fields.size()) + " components, got " +
                   std::to_string(args.size()));
  }
  auto data = std::make_shared<InstanceData>();
  data->type = type;
  data->type_name = name;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    data->fields.emplace_back(fields[i].name, coerce(args[i], fields[i].type, span));
  }
  return Value(Instance{std::move(data)});
}

Value Interpreter::field_of(const Value& v, const std::string& field, const Span& span) const {
  if (v.is_fail()) return v;
  if (const auto* c = v.get_if<ComplexValue>()) {
    const auto fields = registry_.all_fields(type_of(v));
    if (fields.size() >= 2 && field == fields[0].name) return Value(c->re);
    if (fields.size() >= 2 && field == fields[1].name) return Value(c->im);
  } else if (const auto* i = v.get_if<Instance>()) {
    for (const auto& [name, value] : i->data->fields) {
      if (name == field) return value;
    }
  } else if (v.is_symbolic()) {
    throw Error(ErrorCode::runtime,
                "field '" + field + "' of a " + std::string(kind_name(classify_binding(v))) +
                    " is not available until it has a value",
                span);
  }
  throw Error(ErrorCode::unknown_identifier,
              registry_.name(type_of(v)) + " has no field '" + field + "'", span);
}

// -- declarations and statements -------------------------------------------

void Interpreter::execute(const Program& program) {
  for (const auto& item : program.items) execute_item(item);
}

void Interpreter::execute_item(const Item& item) {
  if (const auto* o = std::get_if<ObjectDecl>(&item)) {
    registry_.define_object(*o);
  } else if (const auto* f = std::get_if<std::shared_ptr<const FunctionDecl>>(&item)) {
    const auto& decl = *f;
    const auto& h = decl->header;
    if (h.owner || h.fixity != Fixity::ordinary) {
      registry_.define_method(decl);
      return;
    }
    if (has_builtin(h.name)) {
      throw Error(ErrorCode::signature_mismatch, "'" + h.name + "' is a builtin", h.span);
    }
    GlobalFunction fn;
    for (const auto& p : h.params) fn.params.push_back({p.name, registry_.require(p.type, p.span)});
    fn.result = registry_.require(h.result_type, h.span);
    fn.decl = decl;
    functions_[h.name] = std::move(fn);
  } else if (const auto* v = std::get_if<VarBlock>(&item)) {
    for (const auto& p : v->vars) {
      globals_.declare(p.name, registry_.require(p.type, p.span), Role::var);
    }
  } else {
    execute_stmt(*std::get<StmtPtr>(item), globals_);
  }
}

void Interpreter::assign(Binding& slot, const std::string& name, const Expr& rhs,
                         Environment& env) {
  Value v;
  if (const auto* tuple = std::get_if<Tuple>(&rhs.node)) {
    std::vector<Value> parts;
    for (const auto& e : tuple->elements) parts.push_back(eval_expr(*e, env));
    v = construct(slot.type, std::move(parts), rhs.span);
  } else {
    v = eval_expr(rhs, env);
  }
  try {
    slot.value = coerce(v, slot.type, rhs.span);
  } catch (Error& e) {
    throw Error(e.code(), std::string(e.what()) + " (assigning to '" + name + "')", e.span());
  }
}

void Interpreter::execute_stmt(const Stmt& stmt, Environment& env) {
  if (const auto* a = std::get_if<Assign>(&stmt.node)) {
    Binding* slot = nullptr;
    if (a->is_return()) {
      slot = env.depth() > 1 ? env.innermost().find("Return") : nullptr;
      if (!slot) throw Error(ErrorCode::runtime, "Return outside of a function body", stmt.span);
    } else {
      slot = env.find(a->target);
      if (!slot) {
        throw Error(ErrorCode::unknown_identifier, "undeclared variable '" + a->target + "'",
                    stmt.span);
      }
    }
    assign(*slot, a->target, *a->value, env);
  } else if (const auto* f = std::get_if<If>(&stmt.node)) {
    if (test(f->condition, env)) {
      execute_stmt(*f->then_branch, env);
    } else if (f->else_branch) {
      execute_stmt(*f->else_branch, env);
    }
  } else if (const auto* b = std::get_if<Block>(&stmt.node)) {
    for (const auto& s : b->body) execute_stmt(*s, env);
  } else {
    const auto& c = std::get<CallStmt>(stmt.node);
    call(c.callee, c.args, env, stmt.span);
  }
}

bool Interpreter::test(const Condition& cond, Environment& env) {
  if (std::holds_alternative<FailLit>(cond.rhs->node)) return eval_expr(*cond.lhs, env).is_fail();
  if (std::holds_alternative<FailLit>(cond.lhs->node)) return eval_expr(*cond.rhs, env).is_fail();

  std::vector<std::string> names;
  collect_identifiers(*cond.rhs, names);
  bool is_pattern = false;
  if (env.depth() > 1) {
    for (const auto& n : names) {
      const Binding* b = env.innermost().find(n);
      if (!b || b->role != Role::par) continue;
      if (b->assigned()) {
        throw Error(ErrorCode::rebound_par_variable,
                    "par variable '" + n + "' is already bound in this activation",
                    cond.rhs->span);
      }
      is_pattern = true;
    }
  }
  const Value subject = eval_expr(*cond.lhs, env);
  if (is_pattern) return match_pattern(subject, *cond.rhs, env);
  return values_equal(subject, eval_expr(*cond.rhs, env));
}

bool Interpreter::match_pattern(const Value& subject, const Expr& pattern, Environment& env) {
  std::map<std::string, Value> bound;
  if (!match_node(subject, pattern, env, bound)) return false;
  for (auto& [name, value] : bound) env.innermost().find(name)->value = std::move(value);
  return true;
}

bool Interpreter::match_node(const Value& v, const Expr& pattern, Environment& env,
                             std::map<std::string, Value>& bound) {
  if (const auto* id = std::get_if<Ident>(&pattern.node)) {
    const Binding* b = env.innermost().find(id->name);
    if (b && b->role == Role::par) {
      if (b->assigned()) {
        throw Error(ErrorCode::rebound_par_variable,
                    "par variable '" + id->name + "' is already bound in this activation",
                    pattern.span);
      }
      if (const auto it = bound.find(id->name); it != bound.end()) {
        return values_equal(it->second, v);
      }
      if (!v.is_fail() &&
          !registry_.kind_compatible(KindedType{b->type, Kind::value},
                                     KindedType{type_of(v), classify_binding(v)})) {
        return false;
      }
      bound.emplace(id->name, v);
      return true;
    }
  }
  const FunctionalObject* t = v.thunk();
  if (const auto* bin = std::get_if<Binary>(&pattern.node)) {
    return t && t->op == Operator{bin->op, Fixity::infix} && t->operands.size() == 2 &&
           match_node(t->operands[0], *bin->lhs, env, bound) &&
           match_node(t->operands[1], *bin->rhs, env, bound);
  }
  if (const auto* pre = std::get_if<Prefix>(&pattern.node)) {
    return t && t->op == Operator{pre->op, Fixity::prefix} && t->operands.size() == 1 &&
           match_node(t->operands[0], *pre->operand, env, bound);
  }
  if (const auto* call = std::get_if<Call>(&pattern.node)) {
    if (t && t->op == Operator{call->callee, Fixity::ordinary} &&
        t->operands.size() == call->args.size()) {
      for (std::size_t i = 0; i < call->args.size(); ++i) {
        if (!match_node(t->operands[i], *call->args[i], env, bound)) return false;
      }
      return true;
    }
  }
  if (std::holds_alternative<FailLit>(pattern.node)) return v.is_fail();
  return values_equal(v, eval_expr(pattern, env));
}

// -- expressions ----------------------------------------------------------

Value Interpreter::eval_expr(const Expr& expr, Environment& env) {
  try {
    return std::visit(
        [&](const auto& n) -> Value {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, IntLit>) {
            return Value(n.value);
          } else if constexpr (std::is_same_v<T, FailLit>) {
            return Value::fail();
          } else if constexpr (std::is_same_v<T, Ident>) {
            if (n.name == "Return") {
              const Binding* b = env.depth() > 1 ? env.innermost().find("Return") : nullptr;
              if (!b) throw Error(ErrorCode::unknown_identifier, "Return outside of a function body");
              if (!b->assigned()) {
                throw Error(ErrorCode::unassigned_return, "Return is read before it is assigned");
              }
              return *b->value;
            }
            const Binding* b = env.find(n.name);
            if (!b) throw Error(ErrorCode::unknown_identifier, "unknown identifier '" + n.name + "'");
            return b->read(n.name);
          } else if constexpr (std::is_same_v<T, Binary>) {
            Value lhs = eval_expr(*n.lhs, env);
            Value rhs = eval_expr(*n.rhs, env);
            return apply(Operator{n.op, Fixity::infix}, {std::move(lhs), std::move(rhs)}, expr.span);
          } else if constexpr (std::is_same_v<T, Prefix>) {
            return apply(Operator{n.op, Fixity::prefix}, {eval_expr(*n.operand, env)}, expr.span);
          } else if constexpr (std::is_same_v<T, Call>) {
            auto result = call(n.callee, n.args, env, expr.span);
            if (!result) {
              throw Error(ErrorCode::type_mismatch, "'" + n.callee + "' does not produce a value");
            }
            return *result;
          } else if constexpr (std::is_same_v<T, FieldAccess>) {
            return field_of(eval_expr(*n.object, env), n.field, expr.span);
          } else if constexpr (std::is_same_v<T, InheritedCall>) {
            const TypeId start = registry_.require(n.ancestor, expr.span);
            std::vector<Value> operands;
            Operator op;
            if (const auto* b = std::get_if<Binary>(&n.application->node)) {
              op = Operator{b->op, Fixity::infix};
              operands.push_back(eval_expr(*b->lhs, env));
              operands.push_back(eval_expr(*b->rhs, env));
            } else {
              const auto& p = std::get<Prefix>(n.application->node);
              op = Operator{p.op, Fixity::prefix};
              operands.push_back(eval_expr(*p.operand, env));
            }
            return invoke_inherited(start, op, std::move(operands), expr.span);
          } else if constexpr (std::is_same_v<T, Tuple>) {
            throw Error(ErrorCode::type_mismatch,
                        "a tuple needs a declared target; assign it to a typed variable");
          } else {
            return force(eval_expr(*n.operand, env), env);
          }
        },
        expr.node);
  } catch (Error& e) {
    throw at(e, expr.span);
  }
}

std::optional<Value> Interpreter::call(const std::string& callee,
                                       std::span<const ExprPtr> args, Environment& env,
                                       const Span& span) {
  std::vector<Value> values;
  values.reserve(args.size());
  for (const auto& a : args) values.push_back(eval_expr(*a, env));

  if (const auto it = builtins_.find(callee); it != builtins_.end()) {
    BuiltinCall bc{args, std::move(values), env, span};
    try {
      return it->second(*this, bc);
    } catch (Error& e) {
      throw at(e, span);
    }
  }
  if (const auto type = registry_.lookup(callee)) return construct(*type, std::move(values), span);
  if (const auto it = functions_.find(callee); it != functions_.end()) {
    const GlobalFunction fn = it->second;
    if (values.size() != fn.params.size()) {
      throw Error(ErrorCode::type_mismatch,
                  "'" + callee + "' takes " + std::to_string(fn.params.size()) +
                      " arguments, got " + std::to_string(values.size()),
                  span);
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = coerce(values[i], fn.params[i].type, args[i]->span);
    }
    return run_body(*fn.decl, fn.params, fn.result, std::move(values), span);
  }
  const Operator op{callee, Fixity::ordinary};
  if (!values.empty() && !values[0].is_fail() &&
      registry_.find_method(type_of(values[0]), op) != nullptr) {
    return apply(op, std::move(values), span);
  }
  throw Error(ErrorCode::unknown_identifier, "unknown function '" + callee + "'", span);
}

Value Interpreter::apply(const Operator& op, std::vector<Value> operands, const Span& span) {
  for (const auto& o : operands) {
    if (o.is_fail()) return Value::fail();
  }
  for (const auto& o : operands) {
    if (o.is_symbolic()) return build_application(op, std::move(operands), span);
  }
  const TypeId receiver = receiver_type(op, operands);
  return invoke(registry_.resolve_method(receiver, op, span), std::move(operands), span);
}

Value Interpreter::build_application(const Operator& op, std::vector<Value> operands,
                                     const Span& span) const {
  const TypeId receiver = receiver_type(op, operands);
  TypeId result = kFailType;
  if (receiver != kFailType) {
    result = registry_.resolve_method(receiver, op, span).result;
    // An inherited operation applied to descendants stays within them.
    if (registry_.is_descendant(receiver, result)) result = receiver;
  }
  return make_thunk(op, std::move(operands), result);
}

Value Interpreter::invoke(const model::Method& method, std::vector<Value> args, const Span& span) {
  if (args.size() != method.params.size()) {
    throw Error(ErrorCode::type_mismatch,
                "'" + method.op.symbol + "' takes " + std::to_string(method.params.size()) +
                    " arguments, got " + std::to_string(args.size()),
                span);
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    args[i] = coerce(args[i], method.params[i].type, span);
  }
  if (method.native) {
    DepthGuard guard(depth_, span);
    return method.native(*this, args);
  }
  if (method.is_formal()) {
    TypeId result = method.result;
    const TypeId receiver = args.empty() ? method.owner : receiver_type(method.op, args);
    if (registry_.is_descendant(receiver, result)) result = receiver;
    return make_thunk(method.op, std::move(args), result);
  }
  return run_body(*method.body, method.params, method.result, std::move(args), span);
}

Value Interpreter::invoke_inherited(TypeId start, const Operator& op,
                                    std::vector<Value> operands, const Span& span) {
  for (const auto& o : operands) {
    if (o.is_fail()) return Value::fail();
  }
  const TypeId receiver = receiver_type(op, operands);
  const bool related = registry_.is_descendant(receiver, start) ||
                       (receiver == kIntegerType && registry_.accepts_integer_promotion(start));
  if (!related) {
    throw Error(ErrorCode::type_mismatch,
                registry_.name(receiver) + " does not descend from " + registry_.name(start),
                span);
  }
  return invoke(registry_.resolve_method(start, op, span), std::move(operands), span);
}

Value Interpreter::run_body(const FunctionDecl& decl, const std::vector<model::Slot>& params,
                            TypeId result, std::vector<Value> args, const Span& span) {
  DepthGuard guard(depth_, span);
  Environment env = globals_.activation();
  for (std::size_t i = 0; i < params.size(); ++i) {
    env.declare(params[i].name, params[i].type, Role::param).value = std::move(args[i]);
  }
  for (const auto& p : decl.par_vars) {
    env.declare(p.name, registry_.require(p.type, p.span), Role::par);
  }
  for (const auto& p : decl.local_vars) {
    env.declare(p.name, registry_.require(p.type, p.span), Role::var);
  }
  Binding& ret = env.declare("Return", result, Role::result);
  execute_stmt(*decl.body, env);
  if (!ret.assigned()) {
    throw Error(ErrorCode::unassigned_return,
                "'" + decl.header.name + "' finished without assigning Return", decl.span);
  }
  return *ret.value;
}

// -- forcing ------------------------------------------------------------------

Value Interpreter::force(const Value& v, const Environment& env) {
  std::set<std::string> expanding;
  return force_impl(v, env, expanding);
}

Value Interpreter::force_impl(const Value& v, const Environment& env,
                              std::set<std::string>& expanding) {
  if (const auto* f = v.get_if<FreeVar>()) {
    const Binding* b = env.find(f->name);
    if (!b || !b->assigned() || expanding.count(f->name) != 0) return v;
    expanding.insert(f->name);
    Value out = force_impl(*b->value, env, expanding);
    expanding.erase(f->name);
    return out;
  }
  if (const auto* t = v.thunk()) {
    std::vector<Value> operands;
    operands.reserve(t->operands.size());
    for (const auto& o : t->operands) operands.push_back(force_impl(o, env, expanding));
    if (operands == t->operands) {
      bool all_concrete = true;
      for (const auto& o : operands) all_concrete = all_concrete && !o.is_symbolic();
      if (!all_concrete) return v;
    }
    return apply(t->op, std::move(operands));
  }
  return v;
}

}  // namespace psi::eval
