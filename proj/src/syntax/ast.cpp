#include "psi/syntax/ast.hpp"

#include <utility>

namespace psi {

const char* fixity_name(Fixity f) {
  switch (f) {
    case Fixity::infix: return "infix";
    case Fixity::prefix: return "prefix";
    case Fixity::ordinary: return "function";
  }
  return "?";
}

}  // namespace psi

namespace psi::syntax {

ExprPtr make_expr(Expr::Node node, Span span) {
  return std::make_shared<const Expr>(Expr{std::move(node), span});
}

StmtPtr make_stmt(Stmt::Node node, Span span) {
  return std::make_shared<const Stmt>(Stmt{std::move(node), span});
}

namespace {

bool same(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  return same_structure(*a, *b);
}

bool same(const StmtPtr& a, const StmtPtr& b) {
  if (!a || !b) return a == b;
  return same_structure(*a, *b);
}

template <class T>
bool same_list(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same(a[i], b[i])) return false;
  }
  return true;
}

bool same_params(const std::vector<Param>& a, const std::vector<Param>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || a[i].type != b[i].type) return false;
  }
  return true;
}

bool same_header(const FunctionHeader& a, const FunctionHeader& b) {
  return a.fixity == b.fixity && a.owner == b.owner && a.name == b.name &&
         same_params(a.params, b.params) && a.result_type == b.result_type;
}

struct ExprEq {
  const Expr::Node& other;
  bool operator()(const IntLit& x) const { return std::get<IntLit>(other).value == x.value; }
  bool operator()(const FailLit&) const { return true; }
  bool operator()(const Ident& x) const { return std::get<Ident>(other).name == x.name; }
  bool operator()(const Binary& x) const {
    const auto& y = std::get<Binary>(other);
    return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
  }
  bool operator()(const Prefix& x) const {
    const auto& y = std::get<Prefix>(other);
    return x.op == y.op && same(x.operand, y.operand);
  }
  bool operator()(const Call& x) const {
    const auto& y = std::get<Call>(other);
    return x.callee == y.callee && same_list(x.args, y.args);
  }
  bool operator()(const FieldAccess& x) const {
    const auto& y = std::get<FieldAccess>(other);
    return x.field == y.field && same(x.object, y.object);
  }
  bool operator()(const InheritedCall& x) const {
    const auto& y = std::get<InheritedCall>(other);
    return x.ancestor == y.ancestor && same(x.application, y.application);
  }
  bool operator()(const Tuple& x) const {
    return same_list(x.elements, std::get<Tuple>(other).elements);
  }
  bool operator()(const Eval& x) const { return same(x.operand, std::get<Eval>(other).operand); }
};

struct StmtEq {
  const Stmt::Node& other;
  bool operator()(const Assign& x) const {
    const auto& y = std::get<Assign>(other);
    return x.target == y.target && same(x.value, y.value);
  }
  bool operator()(const If& x) const {
    const auto& y = std::get<If>(other);
    return same(x.condition.lhs, y.condition.lhs) && same(x.condition.rhs, y.condition.rhs) &&
           same(x.then_branch, y.then_branch) && same(x.else_branch, y.else_branch);
  }
  bool operator()(const Block& x) const { return same_list(x.body, std::get<Block>(other).body); }
  bool operator()(const CallStmt& x) const {
    const auto& y = std::get<CallStmt>(other);
    return x.callee == y.callee && same_list(x.args, y.args);
  }
};

struct ItemEq {
  const Item& other;
  bool operator()(const ObjectDecl& x) const {
    const auto& y = std::get<ObjectDecl>(other);
    if (x.name != y.name || x.ancestor != y.ancestor || x.has_body != y.has_body ||
        !same_params(x.fields, y.fields) || x.methods.size() != y.methods.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x.methods.size(); ++i) {
      if (!same_header(x.methods[i], y.methods[i])) return false;
    }
    return true;
  }
  bool operator()(const std::shared_ptr<const FunctionDecl>& x) const {
    const auto& y = std::get<std::shared_ptr<const FunctionDecl>>(other);
    return same_header(x->header, y->header) && same_params(x->par_vars, y->par_vars) &&
           same_params(x->local_vars, y->local_vars) && same(x->body, y->body);
  }
  bool operator()(const VarBlock& x) const {
    return same_params(x.vars, std::get<VarBlock>(other).vars);
  }
  bool operator()(const StmtPtr& x) const { return same(x, std::get<StmtPtr>(other)); }
};

}  // namespace

bool same_structure(const Expr& a, const Expr& b) {
  return a.node.index() == b.node.index() && std::visit(ExprEq{b.node}, a.node);
}

bool same_structure(const Stmt& a, const Stmt& b) {
  return a.node.index() == b.node.index() && std::visit(StmtEq{b.node}, a.node);
}

bool same_structure(const Program& a, const Program& b) {
  if (a.items.size() != b.items.size()) return false;
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    if (a.items[i].index() != b.items[i].index()) return false;
    if (!std::visit(ItemEq{b.items[i]}, a.items[i])) return false;
  }
  return true;
}

}  // namespace psi::syntax
