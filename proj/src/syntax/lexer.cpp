#include "psi/syntax/lexer.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace psi::syntax {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blanks();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    Token eof;
    eof.kind = TokenKind::end_of_input;
    eof.span = here(0);
    out.push_back(std::move(eof));
    return out;
  }

 private:
  Span here(std::size_t length) const { return Span{pos_, line_, column_, length}; }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      const char c = src_[pos_++];
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  void skip_blanks() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else if (c == '{') {
        const Span open = here(1);
        const auto close = src_.find('}', pos_ + 1);
        if (close == std::string_view::npos) {
          throw Error(ErrorCode::lex, "unterminated comment", open);
        }
        advance(close + 1 - pos_);
      } else {
        break;
      }
    }
  }

  Token make(TokenKind kind, std::size_t length, std::string text) {
    Token t;
    t.kind = kind;
    t.span = here(length);
    t.lexeme = std::string(src_.substr(pos_, length));
    t.text = std::move(text);
    advance(length);
    return t;
  }

  Token next() {
    const char c = src_[pos_];
    if (is_ident_start(c)) {
      std::size_t end = pos_ + 1;
      while (end < src_.size() && is_ident_char(src_[end])) ++end;
      std::string word(src_.substr(pos_, end - pos_));
      const auto kind = is_keyword(word) ? TokenKind::keyword : TokenKind::identifier;
      return make(kind, end - pos_, word);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t end = pos_ + 1;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end])) != 0) ++end;
      if (end < src_.size() && is_ident_start(src_[end])) {
        throw Error(ErrorCode::lex, "malformed number", Span{pos_, line_, column_, end + 1 - pos_});
      }
      return make(TokenKind::integer_literal, end - pos_, std::string(src_.substr(pos_, end - pos_)));
    }
    if (src_.substr(pos_, 2) == ":=") return make(TokenKind::operator_symbol, 2, ":=");
    if (src_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus) {
      return make(TokenKind::operator_symbol, kUnicodeMinus.size(), "-");
    }
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '=':
        return make(TokenKind::operator_symbol, 1, std::string(1, c));
      case '(':
      case ')':
      case ',':
      case ';':
      case ':':
      case '.':
        return make(TokenKind::punctuation, 1, std::string(1, c));
      default:
        break;
    }
    std::size_t length = 1;
    const auto lead = static_cast<unsigned char>(c);
    if (lead >= 0xF0) length = 4;
    else if (lead >= 0xE0) length = 3;
    else if (lead >= 0xC0) length = 2;
    length = std::min(length, src_.size() - pos_);
    throw Error(ErrorCode::lex,
                "unexpected character '" + std::string(src_.substr(pos_, length)) + "'",
                here(length));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

const std::vector<std::string>& keywords() {
  static const std::vector<std::string> words = {
      "Object", "function", "infix", "prefix", "var",    "par",  "begin",
      "end",    "if",       "then",  "else",   "Return", "fail", "EVAL"};
  return words;
}

bool is_keyword(std::string_view word) {
  const auto& words = keywords();
  return std::find(words.begin(), words.end(), word) != words.end();
}

std::string describe(const Token& token) {
  if (token.kind == TokenKind::end_of_input) return "end of input";
  return "'" + token.text + "'";
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace psi::syntax
