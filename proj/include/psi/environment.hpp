#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "psi/value.hpp"

namespace psi::eval {

enum class Role {
  var,     // declared in a `var` block
  param,   // method or function parameter
  par,     // pattern variable from a `par` block
  result,  // the Return pseudo-variable
};

struct Binding {
  TypeId type;
  Role role = Role::var;
  std::optional<Value> value;  // empty while unassigned

  bool assigned() const { return value.has_value(); }
  // What reading the name yields: the stored value, or a FreeVar.
  Value read(const std::string& name) const;
  KindedType kinded(const std::string& name) const;
};

struct Frame {
  std::map<std::string, Binding> bindings;

  Binding* find(const std::string& name);
  const Binding* find(const std::string& name) const;
};

// Stack of frames searched innermost first. Frames are shared so that an
// activation sees global updates.
class Environment {
 public:
  Environment();
  explicit Environment(std::shared_ptr<Frame> root);

  // A new environment whose innermost frame is fresh and whose outer frame
  // is this environment's root frame.
  Environment activation() const;

  void push(std::shared_ptr<Frame> frame) { frames_.push_back(std::move(frame)); }

  Binding* find(const std::string& name);
  const Binding* find(const std::string& name) const;

  // Declares in the innermost frame, replacing any previous binding.
  Binding& declare(const std::string& name, TypeId type, Role role);

  Frame& innermost() { return *frames_.back(); }
  const Frame& innermost() const { return *frames_.back(); }
  Frame& root() { return *frames_.front(); }
  const std::shared_ptr<Frame>& root_ptr() const { return frames_.front(); }
  std::size_t depth() const { return frames_.size(); }

 private:
  std::vector<std::shared_ptr<Frame>> frames_;
};

}  // namespace psi::eval
