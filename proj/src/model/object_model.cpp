#include "psi/object_model.hpp"

#include <set>

namespace psi::model {

namespace {

std::string describe(const Operator& op) {
  if (op.fixity == Fixity::ordinary) return "function " + op.symbol;
  return std::string(fixity_name(op.fixity)) + " " + op.symbol;
}

}  // namespace

Registry::Registry() {
  types_.push_back(ObjectDescriptor{kIntegerName, std::nullopt, {}, {}});
  by_name_.emplace(kIntegerName, kIntegerType);
}

std::optional<TypeId> Registry::lookup(const std::string& name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

TypeId Registry::require(const std::string& name, const Span& span) const {
  if (auto t = lookup(name)) return *t;
  throw Error(ErrorCode::unknown_type, "unknown type '" + name + "'", span);
}

const ObjectDescriptor& Registry::get(TypeId t) const {
  if (!contains(t)) throw Error(ErrorCode::unknown_type, "invalid type reference");
  return types_[t.index];
}

std::string Registry::name(TypeId t) const {
  if (t == kFailType) return "fail";
  return get(t).name;
}

std::vector<Slot> Registry::resolve_params(const std::vector<syntax::Param>& params) const {
  std::vector<Slot> out;
  out.reserve(params.size());
  for (const auto& p : params) out.push_back(Slot{p.name, require(p.type, p.span)});
  return out;
}

std::vector<Slot> Registry::all_fields(TypeId t) const {
  std::vector<TypeId> chain;
  for (std::optional<TypeId> cur = t; cur; cur = get(*cur).ancestor) chain.push_back(*cur);
  std::vector<Slot> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const auto& own = get(*it).fields;
    out.insert(out.end(), own.begin(), own.end());
  }
  return out;
}

// Overrides keep fixity (by key) and arity; results may narrow to a
// descendant of the overridden result.
void Registry::check_override(TypeId owner, const Method& m) const {
  const auto& desc = get(owner);
  if (!desc.ancestor) return;
  const Method* inherited = find_method(*desc.ancestor, m.op);
  if (!inherited) return;
  if (inherited->params.size() != m.params.size()) {
    throw Error(ErrorCode::signature_mismatch,
                describe(m.op) + " in " + desc.name + " takes " +
                    std::to_string(m.params.size()) + " parameters but the inherited one takes " +
                    std::to_string(inherited->params.size()),
                m.span);
  }
  if (!is_descendant(m.result, inherited->result)) {
    throw Error(ErrorCode::signature_mismatch,
                describe(m.op) + " in " + desc.name + " returns " + name(m.result) +
                    ", which does not descend from the inherited result " +
                    name(inherited->result),
                m.span);
  }
}

TypeId Registry::define_object(const syntax::ObjectDecl& decl) {
  if (by_name_.count(decl.name) != 0) {
    throw Error(ErrorCode::duplicate_type, "type '" + decl.name + "' is already defined", decl.span);
  }
  ObjectDescriptor desc;
  desc.name = decl.name;
  if (decl.ancestor) {
    const auto anc = lookup(*decl.ancestor);
    if (!anc) {
      throw Error(ErrorCode::unknown_ancestor, "unknown ancestor '" + *decl.ancestor + "'",
                  decl.span);
    }
    desc.ancestor = *anc;
  }

  std::set<std::string> seen;
  if (desc.ancestor) {
    for (const auto& f : all_fields(*desc.ancestor)) seen.insert(f.name);
  }
  for (const auto& f : decl.fields) {
    if (!seen.insert(f.name).second) {
      throw Error(ErrorCode::field_shadowing,
                  "field '" + f.name + "' is already declared in " + decl.name +
                      " or one of its ancestors",
                  f.span);
    }
    desc.fields.push_back(Slot{f.name, require(f.type, f.span)});
  }

  const TypeId id{static_cast<std::uint32_t>(types_.size())};
  // Method headers may mention the type being declared.
  types_.push_back(desc);
  by_name_.emplace(decl.name, id);
  try {
    for (const auto& h : decl.methods) {
      Method m;
      m.owner = id;
      m.op = Operator{h.name, h.fixity};
      m.params = resolve_params(h.params);
      m.result = require(h.result_type, h.span);
      m.span = h.span;
      check_override(id, m);
      if (!types_[id.index].methods.emplace(m.op, std::move(m)).second) {
        throw Error(ErrorCode::signature_mismatch,
                    describe(Operator{h.name, h.fixity}) + " is declared twice in " + decl.name,
                    h.span);
      }
    }
  } catch (...) {
    types_.pop_back();
    by_name_.erase(decl.name);
    throw;
  }
  return id;
}

TypeId Registry::define_method(const std::shared_ptr<const syntax::FunctionDecl>& decl) {
  const auto& h = decl->header;
  Method m;
  m.op = Operator{h.name, h.fixity};
  m.params = resolve_params(h.params);
  m.result = require(h.result_type, h.span);
  m.body = decl;
  m.span = h.span;
  if (h.owner) {
    m.owner = require(*h.owner, h.span);
  } else if (!m.params.empty()) {
    m.owner = m.params.front().type;
  } else {
    throw Error(ErrorCode::signature_mismatch, "a method needs an owner type", h.span);
  }

  auto& methods = types_[m.owner.index].methods;
  if (const auto it = methods.find(m.op); it != methods.end()) {
    const Method& declared = it->second;
    bool same = declared.result == m.result && declared.params.size() == m.params.size();
    for (std::size_t i = 0; same && i < m.params.size(); ++i) {
      same = declared.params[i].type == m.params[i].type;
    }
    if (!same) {
      throw Error(ErrorCode::signature_mismatch,
                  "definition of " + describe(m.op) + " does not match its declaration in " +
                      name(m.owner),
                  h.span);
    }
    it->second = std::move(m);
    return it->second.owner;
  }
  check_override(m.owner, m);
  const TypeId owner = m.owner;
  methods.emplace(m.op, std::move(m));
  return owner;
}

void Registry::bind_native(TypeId owner, const Operator& op, NativeMethod fn) {
  auto& methods = types_.at(owner.index).methods;
  const auto it = methods.find(op);
  if (it == methods.end()) {
    throw Error(ErrorCode::no_such_method, describe(op) + " is not declared in " + name(owner));
  }
  it->second.native = std::move(fn);
  it->second.body.reset();
}

void Registry::add_native(TypeId owner, const Operator& op, std::vector<Slot> params,
                          TypeId result, NativeMethod fn) {
  Method m;
  m.owner = owner;
  m.op = op;
  m.params = std::move(params);
  m.result = result;
  m.native = std::move(fn);
  types_.at(owner.index).methods[op] = std::move(m);
}

const Method* Registry::find_method(TypeId receiver, const Operator& op) const {
  if (!contains(receiver)) return nullptr;
  for (std::optional<TypeId> cur = receiver; cur; cur = get(*cur).ancestor) {
    const auto& methods = get(*cur).methods;
    if (const auto it = methods.find(op); it != methods.end()) return &it->second;
  }
  return nullptr;
}

const Method& Registry::resolve_method(TypeId receiver, const Operator& op,
                                       const Span& span) const {
  if (const Method* m = find_method(receiver, op)) return *m;
  throw Error(ErrorCode::no_such_method,
              "no " + describe(op) + " for type " + name(receiver), span);
}

bool Registry::is_descendant(TypeId a, TypeId b) const {
  if (!contains(a) || !contains(b)) return false;
  for (std::optional<TypeId> cur = a; cur; cur = get(*cur).ancestor) {
    if (*cur == b) return true;
  }
  return false;
}

bool Registry::accepts_integer_promotion(TypeId t) const {
  const auto complex = complex_type();
  return complex && is_descendant(*complex, t);
}

bool Registry::kind_compatible(const KindedType& slot, const KindedType& datum) const {
  if (datum.base == kFailType) return true;
  if (is_descendant(datum.base, slot.base)) return true;
  return datum.base == kIntegerType && accepts_integer_promotion(slot.base);
}

}  // namespace psi::model
