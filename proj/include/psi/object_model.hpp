#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psi/error.hpp"
#include "psi/syntax/ast.hpp"
#include "psi/value.hpp"

namespace psi::eval {
class Interpreter;
}

namespace psi::model {

using NativeMethod = std::function<Value(eval::Interpreter&, std::span<const Value>)>;

struct Slot {
  std::string name;
  TypeId type;
};

// A method implementation: a user body, a native kernel, or neither. A
// declared method with neither is formal; applying it yields the
// unevaluated application.
struct Method {
  TypeId owner;
  Operator op;
  std::vector<Slot> params;
  TypeId result;
  std::shared_ptr<const syntax::FunctionDecl> body;
  NativeMethod native;
  Span span;

  bool is_formal() const { return !body && !native; }
};

struct ObjectDescriptor {
  std::string name;
  std::optional<TypeId> ancestor;
  std::vector<Slot> fields;  // declared here, not inherited
  std::map<Operator, Method> methods;
};

class Registry {
 public:
  static constexpr const char* kIntegerName = "integer";
  static constexpr const char* kComplexName = "Complex";
  static constexpr const char* kAlgebraName = "Algebra";
  static constexpr const char* kMonomialName = "Monomial";

  // Starts with the built-in `integer` type.
  Registry();

  // Registers the object, its fields and its method headers. Throws
  // DuplicateType, UnknownAncestor, UnknownType, FieldShadowing or
  // SignatureMismatch.
  TypeId define_object(const syntax::ObjectDecl& decl);

  // Attaches a method definition to its owner: the `Owner.` qualifier, or
  // the first parameter's type for unqualified infix and prefix functions.
  // Returns the owner.
  TypeId define_method(const std::shared_ptr<const syntax::FunctionDecl>& decl);

  // Adds or replaces a native implementation; the method must be declared
  // on `owner` itself unless `params` are supplied.
  void bind_native(TypeId owner, const Operator& op, NativeMethod fn);
  void add_native(TypeId owner, const Operator& op, std::vector<Slot> params, TypeId result,
                  NativeMethod fn);

  std::optional<TypeId> lookup(const std::string& name) const;
  TypeId require(const std::string& name, const Span& span = {}) const;
  bool contains(TypeId t) const { return t.index < types_.size(); }
  const ObjectDescriptor& get(TypeId t) const;
  std::string name(TypeId t) const;
  std::size_t size() const { return types_.size(); }

  std::optional<TypeId> complex_type() const { return lookup(kComplexName); }
  std::optional<TypeId> monomial_type() const { return lookup(kMonomialName); }
  std::optional<TypeId> algebra_type() const { return lookup(kAlgebraName); }

  // Nearest definition walking receiver -> ancestor -> ... -> root.
  const Method* find_method(TypeId receiver, const Operator& op) const;
  const Method& resolve_method(TypeId receiver, const Operator& op, const Span& span = {}) const;

  // True iff b lies on a's ancestor chain, reflexively.
  bool is_descendant(TypeId a, TypeId b) const;
  // True iff an integer converts to Complex and Complex can stand in for t.
  bool accepts_integer_promotion(TypeId t) const;
  // Kinds are tracked, not restricted: only base types are compared.
  bool kind_compatible(const KindedType& slot, const KindedType& datum) const;

  // All fields of t, ancestors first.
  std::vector<Slot> all_fields(TypeId t) const;

 private:
  std::vector<Slot> resolve_params(const std::vector<syntax::Param>& params) const;
  void check_override(TypeId owner, const Method& m) const;

  std::vector<ObjectDescriptor> types_;
  std::map<std::string, TypeId> by_name_;
};

}  // namespace psi::model
