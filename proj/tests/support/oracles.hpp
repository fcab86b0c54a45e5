#pragma once

// Reference implementations used to check the interpreter. They share no
// code with the library beyond the AST and value types they inspect.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "psi/integer.hpp"
#include "psi/syntax/ast.hpp"
#include "psi/syntax/token.hpp"
#include "psi/value.hpp"

namespace psi::testing {

// Gaussian integers, written out independently of the algebra kernels.
struct Gauss {
  Integer re = 0;
  Integer im = 0;
  friend bool operator==(const Gauss&, const Gauss&) = default;
};

inline Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
inline Gauss operator-(const Gauss& a) { return {-a.re, -a.im}; }
inline Gauss operator*(const Gauss& a, const Gauss& b) {
  // (a + bi)(c + di) expanded term by term.
  const Integer ac = a.re * b.re;
  const Integer bd = a.im * b.im;
  const Integer ad = a.re * b.im;
  const Integer bc = a.im * b.re;
  return {ac - bd, ad + bc};
}

inline std::string to_string(const Gauss& g) {
  return "(" + g.re.str() + ", " + g.im.str() + ")";
}

// The numeric content of a concrete value, if it has one.
inline std::optional<Gauss> as_gauss(const Value& v) {
  if (const auto* n = v.get_if<Integer>()) return Gauss{*n, 0};
  if (const auto* c = v.get_if<ComplexValue>()) return Gauss{c->re, c->im};
  return std::nullopt;
}

// -- random expression trees over +, *, prefix -, literals, i, x, y ---------

struct Tree {
  enum class Tag { literal, unit, x, y, add, mul, neg };
  Tag tag;
  int literal = 0;
  std::vector<std::shared_ptr<const Tree>> kids;
};
using TreePtr = std::shared_ptr<const Tree>;

inline TreePtr random_tree(std::mt19937_64& rng, int depth) {
  auto t = std::make_shared<Tree>();
  // Below the depth limit three nodes in ten are leaves; operators are
  // weighted 2:2:1 for +, *, prefix -.
  const bool leaf = depth <= 0 || std::uniform_int_distribution<int>(0, 9)(rng) < 3;
  if (leaf) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0:
        t->tag = Tree::Tag::literal;
        t->literal = std::uniform_int_distribution<int>(0, 5)(rng);
        break;
      case 1:
        t->tag = Tree::Tag::unit;
        break;
      case 2:
        t->tag = Tree::Tag::x;
        break;
      default:
        t->tag = Tree::Tag::y;
        break;
    }
    return t;
  }
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0:
    case 1:
      t->tag = Tree::Tag::add;
      t->kids = {random_tree(rng, depth - 1), random_tree(rng, depth - 1)};
      break;
    case 2:
    case 3:
      t->tag = Tree::Tag::mul;
      t->kids = {random_tree(rng, depth - 1), random_tree(rng, depth - 1)};
      break;
    default:
      t->tag = Tree::Tag::neg;
      t->kids = {random_tree(rng, depth - 1)};
      break;
  }
  return t;
}

// Fully parenthesised surface text.
inline std::string tree_source(const Tree& t) {
  switch (t.tag) {
    case Tree::Tag::literal:
      return std::to_string(t.literal);
    case Tree::Tag::unit:
      return "i";
    case Tree::Tag::x:
      return "x";
    case Tree::Tag::y:
      return "y";
    case Tree::Tag::add:
      return "(" + tree_source(*t.kids[0]) + " + " + tree_source(*t.kids[1]) + ")";
    case Tree::Tag::mul:
      return "(" + tree_source(*t.kids[0]) + " * " + tree_source(*t.kids[1]) + ")";
    case Tree::Tag::neg:
      return "(-" + tree_source(*t.kids[0]) + ")";
  }
  return {};
}

inline Gauss tree_value(const Tree& t, const Gauss& x, const Gauss& y) {
  switch (t.tag) {
    case Tree::Tag::literal:
      return {t.literal, 0};
    case Tree::Tag::unit:
      return {0, 1};
    case Tree::Tag::x:
      return x;
    case Tree::Tag::y:
      return y;
    case Tree::Tag::add:
      return tree_value(*t.kids[0], x, y) + tree_value(*t.kids[1], x, y);
    case Tree::Tag::mul:
      return tree_value(*t.kids[0], x, y) * tree_value(*t.kids[1], x, y);
    case Tree::Tag::neg:
      return -tree_value(*t.kids[0], x, y);
  }
  return {};
}

// -- juxtaposition -------------------------------------------------------

// OP(a, OP(b, ... OP(y, z))) built as text from the right.
inline std::string right_fold(const std::string& word, const std::string& op) {
  std::string acc(1, word.back());
  for (std::size_t k = word.size() - 1; k-- > 0;) {
    acc = op + "(" + std::string(1, word[k]) + ", " + acc + ")";
  }
  return acc;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> letter(0, 51);
  std::string w(len(rng), 'a');
  for (auto& c : w) {
    const int k = letter(rng);
    c = static_cast<char>(k < 26 ? 'a' + k : 'A' + (k - 26));
  }
  return w;
}

// -- precedence oracle ---------------------------------------------------

// Random token strings over identifiers, literals, + - *, prefix - and
// parentheses. Every string is a well-formed expression.
inline std::string random_infix(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  static const std::array<const char*, 5> names = {"a", "b", "x", "Re", "alpha"};
  switch (pick(rng)) {
    case 0:
      return std::to_string(std::uniform_int_distribution<int>(0, 99)(rng));
    case 1:
      return names[std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng)];
    case 2:
      return "-" + random_infix(rng, depth - 1);
    case 3:
      return "(" + random_infix(rng, depth - 1) + ")";
    default: {
      static const std::array<const char*, 3> ops = {" + ", " - ", " * "};
      const char* op = ops[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
      return random_infix(rng, depth - 1) + op + random_infix(rng, depth - 1);
    }
  }
}

// Shunting-yard over the token stream, producing a fully parenthesised
// rendering: `(a + b)`, `(-a)`, atoms bare.
inline std::string shunting_yard(const std::vector<syntax::Token>& tokens) {
  struct OpEntry {
    std::string symbol;  // "u-" for prefix minus, "(" for a bracket
    int prec;
  };
  std::vector<std::string> out;
  std::vector<OpEntry> ops;
  auto reduce = [&] {
    const OpEntry op = ops.back();
    ops.pop_back();
    if (op.symbol == "u-") {
      const std::string a = out.back();
      out.pop_back();
      out.push_back("(-" + a + ")");
    } else {
      const std::string b = out.back();
      out.pop_back();
      const std::string a = out.back();
      out.pop_back();
      out.push_back("(" + a + " " + op.symbol + " " + b + ")");
    }
  };
  bool expect_operand = true;
  for (const auto& t : tokens) {
    if (t.kind == syntax::TokenKind::end_of_input) break;
    if (t.kind == syntax::TokenKind::integer_literal || t.kind == syntax::TokenKind::identifier) {
      out.push_back(t.text);
      expect_operand = false;
    } else if (t.is_punct("(")) {
      ops.push_back({"(", 0});
      expect_operand = true;
    } else if (t.is_punct(")")) {
      while (ops.back().symbol != "(") reduce();
      ops.pop_back();
      expect_operand = false;
    } else if (expect_operand && t.is_op("-")) {
      // Prefix operators are right associative: nothing to reduce first.
      ops.push_back({"u-", 3});
    } else {
      const int prec = t.is_op("*") ? 2 : 1;
      while (!ops.empty() && ops.back().symbol != "(" && ops.back().prec >= prec) reduce();
      ops.push_back({t.text, prec});
      expect_operand = true;
    }
  }
  while (!ops.empty()) reduce();
  return out.back();
}

// The same rendering computed from a parsed tree.
inline std::string parenthesise(const syntax::Expr& e) {
  using namespace syntax;
  if (const auto* n = std::get_if<IntLit>(&e.node)) return n->value.str();
  if (const auto* n = std::get_if<Ident>(&e.node)) return n->name;
  if (const auto* n = std::get_if<Prefix>(&e.node)) return "(" + n->op + parenthesise(*n->operand) + ")";
  if (const auto* n = std::get_if<Binary>(&e.node)) {
    return "(" + parenthesise(*n->lhs) + " " + n->op + " " + parenthesise(*n->rhs) + ")";
  }
  return "<?>";
}

// -- monomials -----------------------------------------------------------

// Exponents of x1, x2, ~y1, ~y2 tracked one generator at a time.
struct ExponentCounter {
  std::array<std::int64_t, 4> e{};  // x1, x2, ~y1, ~y2

  void multiply_generator(int g) { ++e[static_cast<std::size_t>(g)]; }
  // Register view: k = #x1, l = #x1 + #x2, m = #~y1, n = #~y1 + #~y2.
  std::array<std::int64_t, 4> registers() const { return {e[0], e[0] + e[1], e[2], e[2] + e[3]}; }
};

struct RawRegister {
  std::int64_t k, l, m, n;
};

inline RawRegister random_register(std::mt19937_64& rng, std::int64_t max) {
  std::uniform_int_distribution<std::int64_t> upto(0, max);
  const std::int64_t l = upto(rng);
  const std::int64_t n = upto(rng);
  return {std::uniform_int_distribution<std::int64_t>(0, l)(rng), l,
          std::uniform_int_distribution<std::int64_t>(0, n)(rng), n};
}

}  // namespace psi::testing
