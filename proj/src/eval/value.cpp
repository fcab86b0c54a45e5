#include "psi/value.hpp"

#include "psi/error.hpp"

namespace psi {

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::value: return "value";
    case Kind::variable: return "variable";
    case Kind::functional_object: return "functional object";
  }
  return "?";
}

bool Value::is_concrete() const {
  return is<Integer>() || is<ComplexValue>() || is<lorentz::MonomialRegister>() || is<Instance>();
}

const FunctionalObject* Value::thunk() const {
  const auto* t = get_if<Thunk>();
  return t ? t->object.get() : nullptr;
}

bool operator==(const Value& a, const Value& b) {
  if (a.data_.index() != b.data_.index()) return false;
  if (const auto* t = a.get_if<Thunk>()) {
    const auto& u = b.as<Thunk>();
    return t->object == u.object || *t->object == *u.object;
  }
  if (const auto* i = a.get_if<Instance>()) {
    const auto& j = b.as<Instance>();
    return i->data == j.data || *i->data == *j.data;
  }
  return a.data_ == b.data_;
}

Value make_thunk(Operator op, std::vector<Value> operands, TypeId result_type) {
  return Value(Thunk{std::make_shared<const FunctionalObject>(
      FunctionalObject{std::move(op), std::move(operands), result_type})});
}

Kind classify_binding(const Value& v) {
  if (v.is<FreeVar>()) return Kind::variable;
  if (v.is<Thunk>()) return Kind::functional_object;
  return Kind::value;
}

namespace {

void collect_free(const Value& v, std::map<std::string, TypeId>& out) {
  if (const auto* f = v.get_if<FreeVar>()) {
    out.emplace(f->name, f->type);
  } else if (const auto* t = v.thunk()) {
    for (const auto& o : t->operands) collect_free(o, out);
  } else if (const auto* i = v.get_if<Instance>()) {
    for (const auto& [name, field] : i->data->fields) collect_free(field, out);
  }
}

Value replace_free(const Value& v, const std::string& name, const Value& with, bool& hit) {
  if (const auto* f = v.get_if<FreeVar>()) {
    if (f->name != name) return v;
    hit = true;
    return with;
  }
  if (const auto* t = v.thunk()) {
    std::vector<Value> operands;
    operands.reserve(t->operands.size());
    for (const auto& o : t->operands) operands.push_back(replace_free(o, name, with, hit));
    return make_thunk(t->op, std::move(operands), t->result_type);
  }
  return v;
}

// Rendering precedence levels; higher binds tighter.
constexpr int kLoose = 0;
constexpr int kSum = 1;
constexpr int kProduct = 2;
constexpr int kPrefix = 3;
constexpr int kAtom = 4;

struct Rendered {
  std::string text;
  int precedence;
};

Rendered render(const Value& v);

std::string operand(const Value& v, bool wrap_if_equal, int parent) {
  auto r = render(v);
  const bool wrap = r.precedence < parent || (wrap_if_equal && r.precedence == parent) ||
                    (wrap_if_equal && !r.text.empty() && r.text[0] == '-');
  return wrap ? "(" + r.text + ")" : r.text;
}

Rendered render_complex(const ComplexValue& c) {
  const auto& re = c.re;
  const auto& im = c.im;
  if (im == 0) return {re.str(), re < 0 ? kPrefix : kAtom};
  std::string imag;
  if (im == 1 || im == -1) {
    imag = "i";
  } else {
    imag = Integer(abs(im)).str() + "*i";
  }
  if (re == 0) {
    if (im < 0) return {"-" + imag, im == -1 ? kPrefix : kProduct};
    return {imag, im == 1 ? kAtom : kProduct};
  }
  return {re.str() + (im < 0 ? " - " : " + ") + imag, kSum};
}

Rendered render(const Value& v) {
  if (const auto* n = v.get_if<Integer>()) return {n->str(), *n < 0 ? kPrefix : kAtom};
  if (const auto* c = v.get_if<ComplexValue>()) return render_complex(*c);
  if (const auto* r = v.get_if<lorentz::MonomialRegister>()) {
    auto text = lorentz::format_monomial(*r);
    return {text, text.find(' ') == std::string::npos ? kAtom : kLoose};
  }
  if (const auto* f = v.get_if<FreeVar>()) return {f->name, kAtom};
  if (v.is_fail()) return {"fail", kAtom};
  if (const auto* i = v.get_if<Instance>()) {
    std::string text = i->data->type_name + "(";
    for (std::size_t k = 0; k < i->data->fields.size(); ++k) {
      if (k != 0) text += ", ";
      text += format_value(i->data->fields[k].second);
    }
    return {text + ")", kAtom};
  }
  const auto& t = *v.thunk();
  switch (t.op.fixity) {
    case Fixity::infix: {
      const int p = t.op.symbol == "*" ? kProduct : kSum;
      const std::string sep = t.op.symbol == "*" ? "*" : " " + t.op.symbol + " ";
      return {operand(t.operands.at(0), false, p) + sep + operand(t.operands.at(1), true, p), p};
    }
    case Fixity::prefix:
      return {t.op.symbol + operand(t.operands.at(0), true, kPrefix), kPrefix};
    case Fixity::ordinary: {
      std::string text = t.op.symbol + "(";
      for (std::size_t k = 0; k < t.operands.size(); ++k) {
        if (k != 0) text += ", ";
        text += format_value(t.operands[k]);
      }
      return {text + ")", kAtom};
    }
  }
  return {"?", kAtom};
}

void tree_lines(const Value& v, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  if (const auto* t = v.thunk()) {
    out += t->op.fixity == Fixity::ordinary ? t->op.symbol + "(...)" : t->op.symbol;
    out += '\n';
    for (const auto& o : t->operands) tree_lines(o, depth + 1, out);
    return;
  }
  out += format_value(v);
  out += '\n';
}

}  // namespace

std::map<std::string, TypeId> free_variables(const Value& v) {
  std::map<std::string, TypeId> out;
  collect_free(v, out);
  return out;
}

FunctionalObject substitute(const FunctionalObject& t, const std::string& name, const Value& v) {
  bool hit = false;
  FunctionalObject out{t.op, {}, t.result_type};
  out.operands.reserve(t.operands.size());
  for (const auto& o : t.operands) out.operands.push_back(replace_free(o, name, v, hit));
  if (!hit) {
    throw Error(ErrorCode::unknown_identifier,
                "'" + name + "' is not a free variable of the functional object");
  }
  return out;
}

std::string format_complex(const ComplexValue& c) { return render_complex(c).text; }

std::string format_value(const Value& v) { return render(v).text; }

std::string format_tree(const Value& v) {
  std::string out;
  tree_lines(v, 0, out);
  return out;
}

}  // namespace psi
