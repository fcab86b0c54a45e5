#include "psi/environment.hpp"

namespace psi::eval {

Value Binding::read(const std::string& name) const {
  if (value) return *value;
  return Value(FreeVar{name, type});
}

KindedType Binding::kinded(const std::string& name) const {
  return KindedType{type, classify_binding(read(name))};
}

Binding* Frame::find(const std::string& name) {
  const auto it = bindings.find(name);
  return it == bindings.end() ? nullptr : &it->second;
}

const Binding* Frame::find(const std::string& name) const {
  const auto it = bindings.find(name);
  return it == bindings.end() ? nullptr : &it->second;
}

Environment::Environment() : Environment(std::make_shared<Frame>()) {}

Environment::Environment(std::shared_ptr<Frame> root) { frames_.push_back(std::move(root)); }

Environment Environment::activation() const {
  Environment env(frames_.front());
  env.push(std::make_shared<Frame>());
  return env;
}

Binding* Environment::find(const std::string& name) {
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
    if (Binding* b = (*it)->find(name)) return b;
  }
  return nullptr;
}

const Binding* Environment::find(const std::string& name) const {
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
    if (const Binding* b = (*it)->find(name)) return b;
  }
  return nullptr;
}

Binding& Environment::declare(const std::string& name, TypeId type, Role role) {
  auto& slot = innermost().bindings[name];
  slot = Binding{type, role, std::nullopt};
  return slot;
}

}  // namespace psi::eval
