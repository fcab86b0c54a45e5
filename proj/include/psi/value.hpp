#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "psi/integer.hpp"
#include "psi/monomial.hpp"
#include "psi/operator.hpp"

namespace psi {

// Index of an object descriptor in a model::Registry.
struct TypeId {
  std::uint32_t index = 0;
  friend auto operator<=>(const TypeId&, const TypeId&) = default;
};

inline constexpr TypeId kIntegerType{0};
// Pseudo-type carried by `fail`; compatible with every slot.
inline constexpr TypeId kFailType{0xFFFFFFFF};

// The three variants every type has: a concrete datum, an unassigned
// placeholder, or a lazy expression.
enum class Kind { value, variable, functional_object };

const char* kind_name(Kind kind);

struct KindedType {
  TypeId base;
  Kind kind = Kind::value;
};

struct ComplexValue {
  Integer re;
  Integer im;
  friend bool operator==(const ComplexValue&, const ComplexValue&) = default;
};

struct FreeVar {
  std::string name;
  TypeId type;
  friend bool operator==(const FreeVar&, const FreeVar&) = default;
};

struct Fail {
  friend bool operator==(const Fail&, const Fail&) { return true; }
};

class Value;
struct FunctionalObject;
struct InstanceData;

struct Thunk {
  std::shared_ptr<const FunctionalObject> object;
};

struct Instance {
  std::shared_ptr<const InstanceData> data;
};

class Value {
 public:
  using Variant = std::variant<Integer, ComplexValue, lorentz::MonomialRegister, Instance, FreeVar,
                               Thunk, Fail>;

  Value() : data_(Fail{}) {}
  Value(Integer n) : data_(std::move(n)) {}
  Value(int n) : data_(Integer(n)) {}
  Value(ComplexValue c) : data_(std::move(c)) {}
  Value(lorentz::MonomialRegister r) : data_(r) {}
  Value(Instance i) : data_(std::move(i)) {}
  Value(FreeVar v) : data_(std::move(v)) {}
  Value(Thunk t) : data_(std::move(t)) {}
  Value(Fail f) : data_(f) {}

  static Value fail() { return Value(Fail{}); }

  const Variant& data() const { return data_; }

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(data_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(data_);
  }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&data_);
  }

  bool is_fail() const { return is<Fail>(); }
  bool is_thunk() const { return is<Thunk>(); }
  // Integer, complex, register or object instance.
  bool is_concrete() const;
  // A free variable or a functional object.
  bool is_symbolic() const { return is<FreeVar>() || is<Thunk>(); }
  const FunctionalObject* thunk() const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  Variant data_;
};

// An operator application whose evaluation has been deferred. Operands are
// already evaluated as far as possible; free variables appear as FreeVar
// leaves and nested applications as Thunk operands.
struct FunctionalObject {
  Operator op;
  std::vector<Value> operands;
  TypeId result_type;

  friend bool operator==(const FunctionalObject&, const FunctionalObject&) = default;
};

struct InstanceData {
  TypeId type;
  std::string type_name;
  // Every field of the descriptor chain, ancestors first.
  std::vector<std::pair<std::string, Value>> fields;

  friend bool operator==(const InstanceData&, const InstanceData&) = default;
};

Value make_thunk(Operator op, std::vector<Value> operands, TypeId result_type);

Kind classify_binding(const Value& v);

// Free variables occurring anywhere in v, keyed by name.
std::map<std::string, TypeId> free_variables(const Value& v);

// Rebinds every FreeVar named `name` inside t. Throws UnknownIdentifier if
// the name does not occur.
FunctionalObject substitute(const FunctionalObject& t, const std::string& name, const Value& v);

// Infix rendering with minimal parentheses; complex values print as
// `a + b*i`.
std::string format_value(const Value& v);
std::string format_complex(const ComplexValue& c);
// One node per line, children indented by two spaces.
std::string format_tree(const Value& v);

}  // namespace psi
