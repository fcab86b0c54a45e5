#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "psi/error.hpp"
#include "psi/integer.hpp"
#include "psi/operator.hpp"

namespace psi::syntax {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLit {
  Integer value;
};
struct FailLit {};
struct Ident {
  std::string name;
};
struct Binary {
  std::string op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Prefix {
  std::string op;
  ExprPtr operand;
};
struct Call {
  std::string callee;
  std::vector<ExprPtr> args;
};
struct FieldAccess {
  ExprPtr object;
  std::string field;
};
// `Ancestor.(A * B)`: resolve the operator starting at Ancestor.
struct InheritedCall {
  std::string ancestor;
  ExprPtr application;
};
// `(a, b)`; builds the declared type of the slot it is assigned to.
struct Tuple {
  std::vector<ExprPtr> elements;
};
// `EVAL(e)`: force a functional object.
struct Eval {
  ExprPtr operand;
};

struct Expr {
  using Node = std::variant<IntLit, FailLit, Ident, Binary, Prefix, Call, FieldAccess,
                            InheritedCall, Tuple, Eval>;
  Node node;
  Span span;
};

ExprPtr make_expr(Expr::Node node, Span span = {});

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Assign {
  std::string target;  // "Return" for the result pseudo-variable
  ExprPtr value;
  bool is_return() const { return target == "Return"; }
};
struct Condition {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct If {
  Condition condition;
  StmtPtr then_branch;
  StmtPtr else_branch;  // may be null
};
struct Block {
  std::vector<StmtPtr> body;
};
struct CallStmt {
  std::string callee;
  std::vector<ExprPtr> args;
};

struct Stmt {
  using Node = std::variant<Assign, If, Block, CallStmt>;
  Node node;
  Span span;
};

StmtPtr make_stmt(Stmt::Node node, Span span = {});

struct Param {
  std::string name;
  std::string type;
  Span span;
};

struct FunctionHeader {
  Fixity fixity = Fixity::ordinary;
  std::optional<std::string> owner;
  std::string name;  // operator symbol or function identifier
  std::vector<Param> params;
  std::string result_type;
  Span span;
};

struct FunctionDecl {
  FunctionHeader header;
  std::vector<Param> par_vars;
  std::vector<Param> local_vars;
  StmtPtr body;  // a Block
  Span span;
};

struct ObjectDecl {
  std::string name;
  std::optional<std::string> ancestor;
  std::vector<Param> fields;
  std::vector<FunctionHeader> methods;
  // False for the short form `Name = Object(Ancestor);` with no member list.
  bool has_body = false;
  Span span;
};

struct VarBlock {
  std::vector<Param> vars;
  Span span;
};

using Item = std::variant<ObjectDecl, std::shared_ptr<const FunctionDecl>, VarBlock, StmtPtr>;

struct Program {
  std::vector<Item> items;
};

// Structural equality, ignoring spans.
bool same_structure(const Expr& a, const Expr& b);
bool same_structure(const Stmt& a, const Stmt& b);
bool same_structure(const Program& a, const Program& b);

}  // namespace psi::syntax
