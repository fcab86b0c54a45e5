#include <doctest.h>

#include <random>

#include "psi/error.hpp"
#include "psi/syntax/lexer.hpp"
#include "psi/syntax/parser.hpp"
#include "psi/syntax/printer.hpp"
#include "support/oracles.hpp"

using namespace psi;
using namespace psi::syntax;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::runtime;
}

template <class T>
const T& node(const ExprPtr& e) {
  REQUIRE(std::holds_alternative<T>(e->node));
  return std::get<T>(e->node);
}

}  // namespace

TEST_CASE("lexer: keywords, operators and comments") {
  const auto toks = tokenize("var a : integer; { note } a := 1 + 2*b;");
  std::vector<std::string> texts;
  for (const auto& t : toks) texts.push_back(t.text);
  CHECK(texts == std::vector<std::string>{"var", "a", ":", "integer", ";", "a", ":=", "1", "+",
                                          "2", "*", "b", ";", ""});
  CHECK(toks[0].kind == TokenKind::keyword);
  CHECK(toks[6].kind == TokenKind::operator_symbol);
  CHECK(toks.back().kind == TokenKind::end_of_input);
}

TEST_CASE("lexer: unicode minus reads as minus") {
  const auto toks = tokenize("a − b");
  REQUIRE(toks.size() == 4);
  CHECK(toks[1].is_op("-"));
  CHECK(toks[1].lexeme == "−");
}

TEST_CASE("lexer: spans track line and column") {
  const auto toks = tokenize("a :=\n  12");
  CHECK(toks[2].span.line == 2);
  CHECK(toks[2].span.column == 3);
  CHECK(toks[2].span.length == 2);
}

TEST_CASE("lexer errors") {
  CHECK(error_of([] { tokenize("{ never closed"); }) == ErrorCode::lex);
  CHECK(error_of([] { tokenize("12abc"); }) == ErrorCode::lex);
  CHECK(error_of([] { tokenize("a # b"); }) == ErrorCode::lex);
  try {
    tokenize("a :=\n  $");
  } catch (const Error& e) {
    CHECK(e.span().line == 2);
    CHECK(e.span().column == 3);
  }
}

TEST_CASE("lexer: tokens reconstruct the source around whitespace") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 200; ++n) {
    const std::string src = testing::random_infix(rng, 4);
    const auto toks = tokenize(src);
    for (const auto& t : toks) {
      if (t.kind == TokenKind::end_of_input) continue;
      CHECK(src.substr(t.span.offset, t.span.length) == t.lexeme);
    }
  }
}

TEST_CASE("precedence: * over +, prefix minus tightest, left associative") {
  CHECK(testing::parenthesise(*parse_expression("a + b * c")) == "(a + (b * c))");
  CHECK(testing::parenthesise(*parse_expression("a - b - c")) == "((a - b) - c)");
  CHECK(testing::parenthesise(*parse_expression("-a * b")) == "((-a) * b)");
  CHECK(testing::parenthesise(*parse_expression("a * -b + c")) == "((a * (-b)) + c)");
  CHECK(testing::parenthesise(*parse_expression("(a + b) * c")) == "((a + b) * c)");
}

TEST_CASE("precedence agrees with a shunting-yard oracle") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 1000; ++n) {
    const std::string src = testing::random_infix(rng, 5);
    const auto toks = tokenize(src);
    INFO(src);
    CHECK(testing::parenthesise(*parse_expression(toks)) == testing::shunting_yard(toks));
  }
}

TEST_CASE("printer round trip") {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 1000; ++n) {
    const auto e = parse_expression(testing::random_infix(rng, 5));
    const std::string printed = format_expr(*e);
    INFO(printed);
    CHECK(same_structure(*parse_expression(printed), *e));
    CHECK(format_expr(*parse_expression(printed)) == printed);
  }
}

TEST_CASE("printer: minimal parentheses") {
  CHECK(format_expr(*parse_expression("(a + b) * c")) == "(a + b)*c");
  CHECK(format_expr(*parse_expression("a + (b + c)")) == "a + (b + c)");
  CHECK(format_expr(*parse_expression("((a)) * b")) == "a*b");
  CHECK(format_expr(*parse_expression("a - (-b)")) == "a - (-b)");
  CHECK(format_expr(*parse_expression("Algebra.(A * B)")) == "Algebra.(A*B)");
  CHECK(format_expr(*parse_expression("(A.Re, A.Im)")) == "(A.Re, A.Im)");
}

TEST_CASE("expressions: calls, fields, tuples, fail, EVAL") {
  const auto call = parse_expression("Complex(0, 1)");
  CHECK(node<Call>(call).callee == "Complex");
  CHECK(node<Call>(call).args.size() == 2);
  const auto field = parse_expression("A.Re * B.Im");
  CHECK(node<FieldAccess>(node<Binary>(field).lhs).field == "Re");
  CHECK(node<Tuple>(parse_expression("(1, 2, 3)")).elements.size() == 3);
  CHECK(std::holds_alternative<FailLit>(parse_expression("fail")->node));
  CHECK(std::holds_alternative<Eval>(parse_expression("EVAL(b)")->node));
  const auto inherited = parse_expression("Algebra.(A * B)");
  CHECK(node<InheritedCall>(inherited).ancestor == "Algebra");
  CHECK(error_of([] { parse_expression("Algebra.(A)"); }) == ErrorCode::parse);
}

TEST_CASE("program: object declarations, both forms") {
  const auto p = parse_program(R"(
    Group = Object;
      function infix +(A, B : Group) : Group;
      function prefix -(A : Group) : Group;
    end;
    Ring = Object(Group);
    Complex = Object(Ring);
      Re, Im : integer;
    end;
  )");
  REQUIRE(p.items.size() == 3);
  const auto& g = std::get<ObjectDecl>(p.items[0]);
  CHECK(g.name == "Group");
  CHECK(!g.ancestor);
  CHECK(g.methods.size() == 2);
  CHECK(g.methods[1].fixity == Fixity::prefix);
  const auto& r = std::get<ObjectDecl>(p.items[1]);
  CHECK(*r.ancestor == "Group");
  CHECK(!r.has_body);
  const auto& c = std::get<ObjectDecl>(p.items[2]);
  CHECK(c.fields.size() == 2);
  CHECK(c.fields[1].type == "integer");
}

TEST_CASE("program: short object form followed by a definition") {
  const auto p = parse_program(R"(
    Thing = Object(Group);
    function Thing.infix *(A, B : Thing) : Thing;
    begin
      Return := A
    end;
  )");
  REQUIRE(p.items.size() == 2);
  const auto& f = std::get<std::shared_ptr<const FunctionDecl>>(p.items[1]);
  CHECK(*f->header.owner == "Thing");
  CHECK(f->header.fixity == Fixity::infix);
}

TEST_CASE("program: function with par, var and nested if") {
  const auto p = parse_program(R"(
    function Algebra.infix *(A, B : Algebra) : Algebra;
    par C, D, E, F : Algebra;
    begin
      if A = C + D then Return := C * B + D * B
      else if B = E + F then Return := A * E + A * F
      else Return := fail
    end;
  )");
  const auto& f = std::get<std::shared_ptr<const FunctionDecl>>(p.items[0]);
  CHECK(f->par_vars.size() == 4);
  const auto& body = std::get<Block>(f->body->node);
  REQUIRE(body.body.size() == 1);
  const auto& outer = std::get<If>(body.body[0]->node);
  CHECK(std::holds_alternative<If>(outer.else_branch->node));
  CHECK(same_structure(parse_program(format_program(p)), p));
}

TEST_CASE("program printer round trip") {
  const char* src = R"(
    Group = Object;
      function infix +(A, B : Group) : Group;
    end;
    var a, b : integer; z : Group;
    function twice(n : integer) : integer;
    var t : integer;
    begin
      t := n + n;
      if t = 4 then Return := 0 else begin Return := t end
    end;
    a := twice(2);
    print(a)
  )";
  const auto p = parse_program(src);
  const auto again = parse_program(format_program(p));
  CHECK(same_structure(p, again));
  CHECK(format_program(again) == format_program(p));
}

TEST_CASE("parse errors carry expectations and positions") {
  try {
    parse_program("var a : integer;\na := ;");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    CHECK(e.span().line == 2);
    CHECK(e.span().column == 6);
    CHECK(!e.expected().empty());
    CHECK(!e.at_end());
  }
  try {
    parse_program("function f(a : integer) : integer;\nbegin\n");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.at_end());
  }
}

TEST_CASE("operator declarations need the right arity and a declarable symbol") {
  CHECK(error_of([] { parse_program("function infix +(A : T) : T; begin Return := A end;"); }) ==
        ErrorCode::arity);
  CHECK(error_of([] { parse_program("function prefix -(A, B : T) : T; begin Return := A end;"); }) ==
        ErrorCode::arity);
  CHECK(error_of([] { parse_program("function infix =(A, B : T) : T; begin Return := A end;"); }) ==
        ErrorCode::parse);
}

TEST_CASE("error spans stay inside the source") {
  std::mt19937_64 rng(17);
  const std::string alphabet = "ab1+-*():=;, .{}";
  int errors = 0;
  for (int n = 0; n < 500; ++n) {
    std::string src;
    const int len = std::uniform_int_distribution<int>(1, 20)(rng);
    for (int k = 0; k < len; ++k) {
      src += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    }
    try {
      parse_program(src);
    } catch (const Error& e) {
      ++errors;
      INFO(src);
      CHECK(e.category() == ErrorCategory::syntax);
      CHECK(e.span().offset <= src.size());
      CHECK(e.span().offset + e.span().length <= src.size());
    }
  }
  CHECK(errors > 0);
}

TEST_CASE("juxtaposition folds to the right") {
  CHECK(format_expr(*parse_juxtaposition("abc", "OP")) == "OP(a, OP(b, c))");
  CHECK(format_expr(*parse_juxtaposition("a", "OP")) == "a");
  CHECK(error_of([] { parse_juxtaposition("", "OP"); }) == ErrorCode::empty_word);
  CHECK(error_of([] { parse_juxtaposition("a1", "OP"); }) == ErrorCode::parse);
  std::mt19937_64 rng(19);
  for (int n = 0; n < 300; ++n) {
    const auto w = testing::random_word(rng, 1, 8);
    CHECK(format_expr(*parse_juxtaposition(w, "F")) == testing::right_fold(w, "F"));
  }
}
