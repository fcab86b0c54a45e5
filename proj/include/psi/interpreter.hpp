#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "psi/environment.hpp"
#include "psi/object_model.hpp"
#include "psi/syntax/ast.hpp"
#include "psi/value.hpp"

namespace psi::eval {

class Interpreter;

struct BuiltinCall {
  std::span<const syntax::ExprPtr> args;
  std::vector<Value> values;
  Environment& env;
  Span span;
};

// Host functions such as `print`. A builtin that returns nullopt is a
// procedure and cannot be used inside an expression.
using Builtin = std::function<std::optional<Value>(Interpreter&, BuiltinCall&)>;

struct GlobalFunction {
  std::vector<model::Slot> params;
  TypeId result;
  std::shared_ptr<const syntax::FunctionDecl> decl;
};

// Everything a program can change: types, global bindings, functions.
struct State {
  model::Registry registry;
  Frame globals;
  std::map<std::string, GlobalFunction> functions;
};

class Interpreter {
 public:
  static constexpr std::size_t kMaxCallDepth = 512;

  Interpreter();
  Interpreter(const Interpreter&) = delete;
  Interpreter& operator=(const Interpreter&) = delete;

  model::Registry& registry() { return registry_; }
  const model::Registry& registry() const { return registry_; }
  Environment& globals() { return globals_; }
  const Environment& globals() const { return globals_; }

  std::ostream& output() { return *out_; }
  void set_output(std::ostream& out) { out_ = &out; }

  // Runs declarations and statements in order against the global frame.
  void execute(const syntax::Program& program);
  void execute_item(const syntax::Item& item);
  void execute_stmt(const syntax::Stmt& stmt, Environment& env);

  // Evaluates eagerly where every operand is concrete and builds a
  // functional object as soon as an operand is a free variable or one.
  Value eval_expr(const syntax::Expr& expr, Environment& env);
  Value evaluate(const syntax::Expr& expr) { return eval_expr(expr, globals_); }

  // Calls a builtin, constructor, global function or ordinary method.
  std::optional<Value> call(const std::string& callee, std::span<const syntax::ExprPtr> args,
                            Environment& env, const Span& span);

  // Applies an operator: fail absorbs; symbolic operands give a functional
  // object without running user code; otherwise the resolved method runs.
  Value apply(const Operator& op, std::vector<Value> operands, const Span& span = {});
  // The functional object for op(operands), typed by the resolved method.
  Value build_application(const Operator& op, std::vector<Value> operands,
                          const Span& span = {}) const;
  Value invoke(const model::Method& method, std::vector<Value> args, const Span& span = {});
  // `Ancestor.(a op b)`: resolution starts at `start` and the method runs
  // even for symbolic operands.
  Value invoke_inherited(TypeId start, const Operator& op, std::vector<Value> operands,
                         const Span& span = {});

  // Structural match of subject against a pattern over `par` names. Binds
  // the names in the innermost frame on success only.
  bool match_pattern(const Value& subject, const syntax::Expr& pattern, Environment& env);

  // Re-evaluates a functional object against the current bindings of env.
  // Variables still unassigned leave a residual functional object.
  Value force(const Value& v, const Environment& env);
  Value force(const Value& v) { return force(v, globals_); }

  TypeId type_of(const Value& v) const;
  // Dispatch type: the first operand's type, unless it is an integer that
  // promotes to the second operand's type.
  TypeId receiver_type(const Operator& op, std::span<const Value> operands) const;
  // Checks compatibility with a slot of type `slot` and applies promotion.
  Value coerce(const Value& v, TypeId slot, const Span& span = {}) const;
  Value construct(TypeId type, std::vector<Value> args, const Span& span = {}) const;
  // Structural equality; integers compare equal to their complex promotion.
  bool values_equal(const Value& a, const Value& b) const;
  std::string type_name(const Value& v) const { return registry_.name(type_of(v)); }

  void define_builtin(const std::string& name, Builtin fn);
  bool has_builtin(const std::string& name) const { return builtins_.count(name) != 0; }
  const std::map<std::string, GlobalFunction>& functions() const { return functions_; }

  State snapshot() const;
  void restore(const State& state);

 private:
  Value run_body(const syntax::FunctionDecl& decl, const std::vector<model::Slot>& params,
                 TypeId result, std::vector<Value> args, const Span& span);
  void assign(Binding& slot, const std::string& name, const syntax::Expr& rhs,
              Environment& env);
  bool test(const syntax::Condition& cond, Environment& env);
  bool match_node(const Value& v, const syntax::Expr& pattern, Environment& env,
                  std::map<std::string, Value>& bound);
  Value field_of(const Value& v, const std::string& field, const Span& span) const;
  Value force_impl(const Value& v, const Environment& env, std::set<std::string>& expanding);
  void install_integer_natives();

  model::Registry registry_;
  Environment globals_;
  std::map<std::string, GlobalFunction> functions_;
  std::map<std::string, Builtin> builtins_;
  std::ostream* out_;
  std::size_t depth_ = 0;
};

}  // namespace psi::eval
