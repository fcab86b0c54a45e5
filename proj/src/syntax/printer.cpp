#include "psi/syntax/printer.hpp"

#include <sstream>

namespace psi::syntax {

namespace {

constexpr int kSum = 1;
constexpr int kProduct = 2;
constexpr int kPrefix = 3;
constexpr int kAtom = 4;

int precedence(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) return b->op == "*" ? kProduct : kSum;
  if (std::holds_alternative<Prefix>(e.node)) return kPrefix;
  return kAtom;
}

std::string join(const std::vector<ExprPtr>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += ", ";
    out += format_expr(*items[i]);
  }
  return out;
}

std::string wrap(const Expr& e, bool parens) {
  return parens ? "(" + format_expr(e) + ")" : format_expr(e);
}

struct ExprPrinter {
  std::string operator()(const IntLit& x) const { return x.value.str(); }
  std::string operator()(const FailLit&) const { return "fail"; }
  std::string operator()(const Ident& x) const { return x.name; }
  std::string operator()(const Binary& x) const {
    const int p = x.op == "*" ? kProduct : kSum;
    const bool right_parens =
        precedence(*x.rhs) <= p || std::holds_alternative<Prefix>(x.rhs->node);
    const std::string sep = x.op == "*" ? "*" : " " + x.op + " ";
    return wrap(*x.lhs, precedence(*x.lhs) < p) + sep + wrap(*x.rhs, right_parens);
  }
  std::string operator()(const Prefix& x) const {
    return x.op + wrap(*x.operand, precedence(*x.operand) <= kPrefix);
  }
  std::string operator()(const Call& x) const { return x.callee + "(" + join(x.args) + ")"; }
  std::string operator()(const FieldAccess& x) const {
    return wrap(*x.object, precedence(*x.object) < kAtom) + "." + x.field;
  }
  std::string operator()(const InheritedCall& x) const {
    return x.ancestor + ".(" + format_expr(*x.application) + ")";
  }
  std::string operator()(const Tuple& x) const { return "(" + join(x.elements) + ")"; }
  std::string operator()(const Eval& x) const { return "EVAL(" + format_expr(*x.operand) + ")"; }
};

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 2, ' '); }

// Groups consecutive names that share a type: `A, B : Group`.
std::string param_groups(const std::vector<Param>& params, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < params.size();) {
    std::size_t j = i;
    std::string names;
    while (j < params.size() && params[j].type == params[i].type) {
      if (j != i) names += ", ";
      names += params[j].name;
      ++j;
    }
    if (i != 0) out += sep;
    out += names + " : " + params[i].type;
    i = j;
  }
  return out;
}

std::string header_text(const FunctionHeader& h) {
  std::string out = "function ";
  if (h.owner) out += *h.owner + ".";
  if (h.fixity != Fixity::ordinary) out += std::string(fixity_name(h.fixity)) + " ";
  out += h.name + "(" + param_groups(h.params, "; ") + ") : " + h.result_type;
  return out;
}

void declaration_lines(std::ostringstream& os, const char* keyword,
                       const std::vector<Param>& decls) {
  if (decls.empty()) return;
  os << keyword << "\n";
  os << "  " << param_groups(decls, ";\n  ") << ";\n";
}

}  // namespace

std::string format_expr(const Expr& expr) { return std::visit(ExprPrinter{}, expr.node); }

std::string format_stmt(const Stmt& stmt, int indent) {
  std::ostringstream os;
  if (const auto* a = std::get_if<Assign>(&stmt.node)) {
    os << pad(indent) << a->target << " := " << format_expr(*a->value);
  } else if (const auto* c = std::get_if<CallStmt>(&stmt.node)) {
    os << pad(indent) << c->callee << "(" << join(c->args) << ")";
  } else if (const auto* b = std::get_if<Block>(&stmt.node)) {
    os << pad(indent) << "begin\n";
    for (std::size_t i = 0; i < b->body.size(); ++i) {
      os << format_stmt(*b->body[i], indent + 1);
      if (i + 1 != b->body.size()) os << ";";
      os << "\n";
    }
    os << pad(indent) << "end";
  } else {
    const auto& f = std::get<If>(stmt.node);
    os << pad(indent) << "if " << format_expr(*f.condition.lhs) << " = "
       << format_expr(*f.condition.rhs) << " then\n"
       << format_stmt(*f.then_branch, indent + 1);
    if (f.else_branch) {
      os << "\n" << pad(indent) << "else\n" << format_stmt(*f.else_branch, indent + 1);
    }
  }
  return os.str();
}

std::string format_program(const Program& program) {
  std::ostringstream os;
  for (const auto& item : program.items) {
    if (const auto* o = std::get_if<ObjectDecl>(&item)) {
      os << o->name << " = Object";
      if (o->ancestor) os << "(" << *o->ancestor << ")";
      os << ";\n";
      if (o->has_body) {
        if (!o->fields.empty()) os << "  " << param_groups(o->fields, ";\n  ") << ";\n";
        for (const auto& m : o->methods) os << "  " << header_text(m) << ";\n";
        os << "end;\n";
      }
    } else if (const auto* f = std::get_if<std::shared_ptr<const FunctionDecl>>(&item)) {
      const auto& decl = **f;
      os << header_text(decl.header) << ";\n";
      declaration_lines(os, "par", decl.par_vars);
      declaration_lines(os, "var", decl.local_vars);
      os << format_stmt(*decl.body) << ";\n";
    } else if (const auto* v = std::get_if<VarBlock>(&item)) {
      declaration_lines(os, "var", v->vars);
    } else {
      os << format_stmt(*std::get<StmtPtr>(item)) << ";\n";
    }
  }
  return os.str();
}

}  // namespace psi::syntax
