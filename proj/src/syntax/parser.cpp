#include "psi/syntax/parser.hpp"

#include <utility>

#include "psi/syntax/lexer.hpp"

namespace psi::syntax {

namespace {

Span cover(const Span& first, const Span& last) {
  Span s = first;
  const auto end = last.offset + last.length;
  s.length = end > first.offset ? end - first.offset : first.length;
  return s;
}

bool is_declarable_operator(const Token& t) {
  return t.is_op("+") || t.is_op("-") || t.is_op("*");
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::end_of_input) {
      throw Error(ErrorCode::parse, "token stream is not terminated");
    }
  }

  Program program() {
    Program prog;
    while (!at_end()) prog.items.push_back(item());
    return prog;
  }

  ExprPtr single_expression() {
    auto e = expression();
    if (peek().is_punct(";")) advance();
    if (!at_end()) fail({"end of input"});
    return e;
  }

 private:
  // -- token helpers --------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    const auto i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at_end() const { return peek().kind == TokenKind::end_of_input; }
  const Token& advance() {
    const Token& t = peek();
    if (!at_end()) ++pos_;
    return t;
  }
  const Token& previous() const { return toks_[pos_ == 0 ? 0 : pos_ - 1]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i != 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += " but found " + describe(t);
    Error err(ErrorCode::parse, msg, t.span, std::move(expected));
    if (t.kind == TokenKind::end_of_input) err.mark_at_end();
    throw err;
  }

  const Token& expect_punct(const char* p) {
    if (!peek().is_punct(p)) fail({std::string("'") + p + "'"});
    return advance();
  }
  const Token& expect_op(const char* p) {
    if (!peek().is_op(p)) fail({std::string("'") + p + "'"});
    return advance();
  }
  const Token& expect_keyword(const char* k) {
    if (!peek().is_keyword(k)) fail({std::string("'") + k + "'"});
    return advance();
  }
  const Token& expect_identifier(const char* what = "identifier") {
    if (peek().kind != TokenKind::identifier) fail({what});
    return advance();
  }
  // Terminating `;`; may be omitted at the very end of the input.
  void end_of_item() {
    if (peek().is_punct(";")) {
      advance();
    } else if (!at_end()) {
      fail({"';'"});
    }
  }

  // -- declarations ---------------------------------------------------------

  Item item() {
    const Token& t = peek();
    if (t.is_keyword("var")) return var_block();
    if (t.is_keyword("function")) return function_decl();
    if (t.kind == TokenKind::identifier && peek(1).is_op("=") && peek(2).is_keyword("Object")) {
      return object_decl();
    }
    auto s = statement();
    end_of_item();
    return s;
  }

  // name {, name} : type ;
  void declaration_group(std::vector<Param>& out, bool needs_semicolon) {
    std::vector<std::pair<std::string, Span>> names;
    const Token& first = expect_identifier();
    names.emplace_back(first.text, first.span);
    while (peek().is_punct(",")) {
      advance();
      const Token& n = expect_identifier();
      names.emplace_back(n.text, n.span);
    }
    expect_punct(":");
    const Token& type = expect_identifier("type name");
    for (auto& [name, span] : names) out.push_back(Param{name, type.text, span});
    if (needs_semicolon) expect_punct(";");
  }

  bool at_declaration_group() const {
    return peek().kind == TokenKind::identifier &&
           (peek(1).is_punct(",") || peek(1).is_punct(":"));
  }

  VarBlock var_block() {
    const Span start = expect_keyword("var").span;
    VarBlock block;
    declaration_group(block.vars, true);
    while (at_declaration_group()) declaration_group(block.vars, true);
    block.span = cover(start, previous().span);
    return block;
  }

  FunctionHeader header() {
    const Span start = expect_keyword("function").span;
    FunctionHeader h;
    if (peek().kind == TokenKind::identifier && peek(1).is_punct(".")) {
      h.owner = advance().text;
      advance();
    }
    if (peek().is_keyword("infix") || peek().is_keyword("prefix")) {
      h.fixity = advance().text == "infix" ? Fixity::infix : Fixity::prefix;
      if (!is_declarable_operator(peek())) fail({"'+'", "'-'", "'*'"});
      h.name = advance().text;
    } else {
      h.fixity = Fixity::ordinary;
      h.name = expect_identifier("function name").text;
    }
    expect_punct("(");
    if (!peek().is_punct(")")) {
      declaration_group(h.params, false);
      while (peek().is_punct(";") || peek().is_punct(",")) {
        advance();
        declaration_group(h.params, false);
      }
    }
    expect_punct(")");
    expect_punct(":");
    h.result_type = expect_identifier("type name").text;
    h.span = cover(start, previous().span);

    const std::size_t want = h.fixity == Fixity::infix ? 2 : 1;
    if (h.fixity != Fixity::ordinary && h.params.size() != want) {
      throw Error(ErrorCode::arity,
                  std::string(fixity_name(h.fixity)) + " '" + h.name + "' needs exactly " +
                      std::to_string(want) + " parameter" + (want == 1 ? "" : "s") + ", got " +
                      std::to_string(h.params.size()),
                  h.span);
    }
    return h;
  }

  std::shared_ptr<const FunctionDecl> function_decl() {
    auto decl = std::make_shared<FunctionDecl>();
    decl->header = header();
    expect_punct(";");
    for (;;) {
      if (peek().is_keyword("par")) {
        advance();
        declaration_group(decl->par_vars, true);
        while (at_declaration_group()) declaration_group(decl->par_vars, true);
      } else if (peek().is_keyword("var")) {
        advance();
        declaration_group(decl->local_vars, true);
        while (at_declaration_group()) declaration_group(decl->local_vars, true);
      } else {
        break;
      }
    }
    if (!peek().is_keyword("begin")) fail({"'par'", "'var'", "'begin'"});
    decl->body = block();
    decl->span = cover(decl->header.span, previous().span);
    end_of_item();
    return decl;
  }

  ObjectDecl object_decl() {
    ObjectDecl decl;
    const Token& name = advance();
    decl.name = name.text;
    advance();  // =
    advance();  // Object
    if (peek().is_punct("(")) {
      advance();
      decl.ancestor = expect_identifier("ancestor type").text;
      expect_punct(")");
    }
    expect_punct(";");
    decl.span = cover(name.span, previous().span);

    bool any_member = false;
    for (;;) {
      if (peek().is_keyword("end")) {
        advance();
        decl.has_body = true;
        decl.span = cover(name.span, previous().span);
        end_of_item();
        return decl;
      }
      if (at_declaration_group()) {
        declaration_group(decl.fields, true);
        any_member = true;
        continue;
      }
      if (peek().is_keyword("function")) {
        const std::size_t mark = pos_;
        auto h = header();
        expect_punct(";");
        const bool has_body =
            peek().is_keyword("par") || peek().is_keyword("var") || peek().is_keyword("begin");
        if (has_body || h.owner) {
          if (any_member) fail({"'end'"});
          pos_ = mark;  // a top-level definition follows the short form
          return decl;
        }
        decl.methods.push_back(std::move(h));
        any_member = true;
        continue;
      }
      if (!any_member) return decl;
      fail({"field declaration", "'function'", "'end'"});
    }
  }

  // -- statements -----------------------------------------------------------

  StmtPtr block() {
    const Span start = expect_keyword("begin").span;
    Block b;
    while (!peek().is_keyword("end")) {
      b.body.push_back(statement());
      if (peek().is_punct(";")) {
        advance();
      } else if (!peek().is_keyword("end")) {
        fail({"';'", "'end'"});
      }
    }
    advance();
    return make_stmt(std::move(b), cover(start, previous().span));
  }

  StmtPtr statement() {
    const Token& t = peek();
    if (t.is_keyword("if")) {
      advance();
      Condition cond;
      cond.lhs = expression();
      expect_op("=");
      cond.rhs = expression();
      expect_keyword("then");
      If node{std::move(cond), statement(), nullptr};
      if (peek().is_keyword("else")) {
        advance();
        node.else_branch = statement();
      }
      return make_stmt(std::move(node), cover(t.span, previous().span));
    }
    if (t.is_keyword("begin")) return block();
    if (t.is_keyword("Return") || t.kind == TokenKind::identifier) {
      if (peek(1).is_op(":=")) {
        const std::string target = advance().text;
        advance();
        auto value = expression();
        return make_stmt(Assign{target, std::move(value)}, cover(t.span, previous().span));
      }
      if (t.kind == TokenKind::identifier && peek(1).is_punct("(")) {
        advance();
        CallStmt call{t.text, arguments()};
        return make_stmt(std::move(call), cover(t.span, previous().span));
      }
      advance();
      fail({"':='"});
    }
    fail({"statement"});
  }

  // -- expressions ----------------------------------------------------------

  std::vector<ExprPtr> arguments() {
    expect_punct("(");
    std::vector<ExprPtr> args;
    if (!peek().is_punct(")")) {
      args.push_back(expression());
      while (peek().is_punct(",")) {
        advance();
        args.push_back(expression());
      }
    }
    expect_punct(")");
    return args;
  }

  ExprPtr expression() {
    auto lhs = term();
    while (peek().is_op("+") || peek().is_op("-")) {
      const std::string op = advance().text;
      auto rhs = term();
      const Span s = cover(lhs->span, rhs->span);
      lhs = make_expr(Binary{op, std::move(lhs), std::move(rhs)}, s);
    }
    return lhs;
  }

  ExprPtr term() {
    auto lhs = unary();
    while (peek().is_op("*")) {
      advance();
      auto rhs = unary();
      const Span s = cover(lhs->span, rhs->span);
      lhs = make_expr(Binary{"*", std::move(lhs), std::move(rhs)}, s);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().is_op("-")) {
      const Span start = advance().span;
      auto operand = unary();
      const Span s = cover(start, operand->span);
      return make_expr(Prefix{"-", std::move(operand)}, s);
    }
    return postfix();
  }

  ExprPtr postfix() {
    auto e = primary();
    while (peek().is_punct(".") && peek(1).kind == TokenKind::identifier) {
      advance();
      const Token& field = advance();
      const Span s = cover(e->span, field.span);
      e = make_expr(FieldAccess{std::move(e), field.text}, s);
    }
    return e;
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::integer_literal:
        advance();
        return make_expr(IntLit{Integer(t.text)}, t.span);
      case TokenKind::keyword:
        if (t.is_keyword("fail")) {
          advance();
          return make_expr(FailLit{}, t.span);
        }
        if (t.is_keyword("Return")) {
          advance();
          return make_expr(Ident{"Return"}, t.span);
        }
        if (t.is_keyword("EVAL")) {
          advance();
          expect_punct("(");
          auto inner = expression();
          expect_punct(")");
          return make_expr(Eval{std::move(inner)}, cover(t.span, previous().span));
        }
        break;
      case TokenKind::identifier:
        advance();
        if (peek().is_punct(".") && peek(1).is_punct("(")) {
          advance();
          advance();
          auto inner = expression();
          expect_punct(")");
          const bool is_application = std::holds_alternative<Binary>(inner->node) ||
                                      std::holds_alternative<Prefix>(inner->node);
          if (!is_application) {
            throw Error(ErrorCode::parse,
                        "inherited call needs an operator application inside the parentheses",
                        inner->span, {"operator application"});
          }
          return make_expr(InheritedCall{t.text, std::move(inner)}, cover(t.span, previous().span));
        }
        if (peek().is_punct("(")) {
          auto args = arguments();
          return make_expr(Call{t.text, std::move(args)}, cover(t.span, previous().span));
        }
        return make_expr(Ident{t.text}, t.span);
      case TokenKind::punctuation:
        if (t.is_punct("(")) {
          advance();
          auto first = expression();
          if (!peek().is_punct(",")) {
            expect_punct(")");
            return first;
          }
          Tuple tuple;
          tuple.elements.push_back(std::move(first));
          while (peek().is_punct(",")) {
            advance();
            tuple.elements.push_back(expression());
          }
          expect_punct(")");
          return make_expr(std::move(tuple), cover(t.span, previous().span));
        }
        break;
      default:
        break;
    }
    fail({"expression"});
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse_program(const std::vector<Token>& tokens) { return Parser(tokens).program(); }

Program parse_program(std::string_view source) { return parse_program(tokenize(source)); }

ExprPtr parse_expression(const std::vector<Token>& tokens) {
  return Parser(tokens).single_expression();
}

ExprPtr parse_expression(std::string_view source) { return parse_expression(tokenize(source)); }

ExprPtr parse_juxtaposition(std::string_view word, std::string_view op_name) {
  if (word.empty()) throw Error(ErrorCode::empty_word, "juxtaposition of an empty word");
  const auto op_tokens = tokenize(op_name);
  if (op_tokens.size() != 2 || op_tokens[0].kind != TokenKind::identifier) {
    throw Error(ErrorCode::parse, "'" + std::string(op_name) + "' is not an operation name");
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    const bool letter = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    if (!letter) {
      throw Error(ErrorCode::parse, "'" + std::string(1, c) + "' is not a one-letter identifier",
                  Span{i, 1, i + 1, 1});
    }
  }
  ExprPtr acc = make_expr(Ident{std::string(1, word.back())});
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    acc = make_expr(Call{std::string(op_name), {make_expr(Ident{std::string(1, word[i])}), acc}});
  }
  return acc;
}

}  // namespace psi::syntax
