#include "psi/session.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "psi/algebra.hpp"
#include "psi/syntax/lexer.hpp"
#include "psi/syntax/parser.hpp"
#include "psi/syntax/printer.hpp"

namespace psi::repl {

namespace {

constexpr std::string_view kHelp =
    ":type e       type and kind of e\n"
    ":show e       tree of a functional object\n"
    ":eval e       force e, then simplify it\n"
    ":word abc OP  juxtaposition OP(a, OP(b, c))\n"
    ":label e      representation label of a monomial\n"
    ":quit         leave\n";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Statements and declarations start with a keyword or contain `:=` or an
// object declaration; everything else is read as an expression.
bool looks_like_program(const std::vector<syntax::Token>& tokens) {
  if (tokens.empty()) return false;
  const auto& first = tokens.front();
  for (const char* kw : {"var", "function", "if", "begin", "Return"}) {
    if (first.is_keyword(kw)) return true;
  }
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (tokens[k].is_op(":=")) return true;
    if (tokens[k].is_keyword("Object")) return true;
  }
  return false;
}

void print_builtin(eval::Interpreter& interp) {
  interp.define_builtin("print", [](eval::Interpreter& in, eval::BuiltinCall& c) {
    for (std::size_t k = 0; k < c.values.size(); ++k) {
      if (k != 0) in.output() << ' ';
      in.output() << format_value(c.values[k]);
    }
    in.output() << '\n';
    return std::optional<Value>();
  });
  interp.define_builtin("kind", [](eval::Interpreter& in, eval::BuiltinCall& c) {
    if (c.args.size() != 1) {
      throw Error(ErrorCode::type_mismatch, "kind takes 1 argument");
    }
    in.output() << syntax::format_expr(*c.args[0]) << ": "
                << kind_name(classify_binding(c.values[0])) << '\n';
    return std::optional<Value>();
  });
}

}  // namespace

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::syntax:
      return 1;
    case ErrorCategory::type:
      return 2;
    case ErrorCategory::runtime:
      return 3;
  }
  return 3;
}

std::string format_diagnostic(const Error& e, std::string_view origin) {
  std::ostringstream os;
  os << origin;
  if (e.has_span()) os << ':' << e.span().line << ':' << e.span().column;
  os << ": " << code_name(e.code()) << ": " << e.what();
  return os.str();
}

Session::Session(SessionOptions options)
    : options_(options), interp_(std::make_unique<eval::Interpreter>()) {
  print_builtin(*interp_);
  algebra::SimplifyOptions simplify;
  simplify.max_rewrites = options_.max_rewrites;
  if (options_.trace) {
    eval::Interpreter* in = interp_.get();
    simplify.on_step = [in](const algebra::RewriteStep& s) {
      in->output() << "rewrite " << algebra::rule_name(s.rule) << ": " << format_value(s.tree)
                   << '\n';
    };
  }
  algebra::install_builtins(*interp_, std::move(simplify));
  if (options_.prelude) algebra::load_prelude(*interp_);
}

int Session::run(std::string_view source, std::string_view origin, std::ostream& out,
                 std::ostream& err) {
  interp_->set_output(out);
  try {
    const auto program = syntax::parse_program(source);
    interp_->execute(program);
  } catch (const Error& e) {
    out.flush();
    err << format_diagnostic(e, origin) << '\n';
    return exit_code_for(e);
  }
  return 0;
}

Value Session::eval_text(std::string_view text) {
  return interp_->evaluate(*syntax::parse_expression(text));
}

void Session::command(std::string_view name, std::string_view arg, std::ostream& out) {
  auto need_arg = [&] {
    if (arg.empty()) {
      throw Error(ErrorCode::parse, ":" + std::string(name) + " needs an argument");
    }
  };
  if (name == "quit" || name == "q") {
    finished_ = true;
  } else if (name == "help") {
    out << kHelp;
  } else if (name == "type") {
    need_arg();
    const Value v = eval_text(arg);
    out << interp_->type_name(v) << ' ' << kind_name(classify_binding(v)) << '\n';
  } else if (name == "show") {
    need_arg();
    out << format_tree(eval_text(arg));
  } else if (name == "eval") {
    need_arg();
    const Value forced = interp_->force(eval_text(arg));
    algebra::SimplifyOptions simplify;
    simplify.max_rewrites = options_.max_rewrites;
    if (options_.trace) {
      simplify.on_step = [&out](const algebra::RewriteStep& s) {
        out << "rewrite " << algebra::rule_name(s.rule) << ": " << format_value(s.tree) << '\n';
      };
    }
    out << format_value(algebra::simplify(*interp_, forced, simplify)) << '\n';
  } else if (name == "word") {
    need_arg();
    std::istringstream words{std::string(arg)};
    std::string word, op, extra;
    words >> word >> op;
    if (op.empty() || (words >> extra)) {
      throw Error(ErrorCode::parse, ":word expects a word and an operator name");
    }
    out << syntax::format_expr(*syntax::parse_juxtaposition(word, op)) << '\n';
  } else if (name == "label") {
    need_arg();
    const Value v = eval_text(arg);
    const auto* r = v.get_if<lorentz::MonomialRegister>();
    if (!r) {
      throw Error(ErrorCode::type_mismatch, "label needs a monomial, got " + interp_->type_name(v));
    }
    out << lorentz::rep_label(*r).to_string() << '\n';
  } else {
    throw Error(ErrorCode::parse, "unknown command :" + std::string(name) + " (try :help)");
  }
}

void Session::evaluate_input(std::string_view input, std::ostream& out) {
  const auto tokens = syntax::tokenize(input);
  if (tokens.size() == 1) return;  // only end of input
  if (looks_like_program(tokens)) {
    interp_->execute(syntax::parse_program(tokens));
    return;
  }
  const auto expr = syntax::parse_expression(tokens);
  if (const auto* call = std::get_if<syntax::Call>(&expr->node)) {
    auto v = interp_->call(call->callee, call->args, interp_->globals(), expr->span);
    if (v) out << format_value(*v) << '\n';
    return;
  }
  out << format_value(interp_->evaluate(*expr)) << '\n';
}

void Session::step(std::string_view input, std::ostream& out, std::ostream& err) {
  interp_->set_output(out);
  const auto text = trim(input);
  const auto saved = interp_->snapshot();
  try {
    if (!text.empty() && text.front() == ':') {
      const auto space = text.find_first_of(" \t");
      const auto name = text.substr(1, space == std::string_view::npos ? text.npos : space - 1);
      const auto arg = space == std::string_view::npos ? std::string_view{} : trim(text.substr(space));
      command(name, arg, out);
    } else {
      evaluate_input(text, out);
    }
  } catch (const Error& e) {
    interp_->restore(saved);
    err << format_diagnostic(e, "<repl>") << '\n';
  }
}

bool Session::wants_more(std::string_view input) const {
  const auto text = trim(input);
  if (text.empty() || text.front() == ':') return false;
  try {
    const auto tokens = syntax::tokenize(text);
    if (looks_like_program(tokens)) {
      syntax::parse_program(tokens);
    } else {
      syntax::parse_expression(tokens);
    }
  } catch (const Error& e) {
    return e.at_end();
  }
  return false;
}

RunResult run_source(std::string_view source, const SessionOptions& options,
                     std::string_view origin) {
  std::ostringstream out, err;
  RunResult r;
  try {
    Session session(options);
    r.exit_code = session.run(source, origin, out, err);
  } catch (const Error& e) {
    err << format_diagnostic(e, "<prelude>") << '\n';
    r.exit_code = exit_code_for(e);
  }
  r.out = out.str();
  r.err = err.str();
  return r;
}

RunResult run_file(const std::string& path, const SessionOptions& options) {
  std::ifstream file(path, std::ios::binary);
  if (!file) return RunResult{4, "", path + ": cannot read file\n"};
  std::ostringstream text;
  text << file.rdbuf();
  return run_source(text.str(), options, path);
}

void run_repl(std::istream& in, std::ostream& out, std::ostream& err,
              const SessionOptions& options, bool show_prompt) {
  Session session(options);
  std::string pending;
  std::string line;
  while (!session.finished()) {
    if (show_prompt) out << (pending.empty() ? "psi> " : "...> ") << std::flush;
    if (!std::getline(in, line)) break;
    // A blank line submits an unfinished input as it is.
    const bool blank = trim(line).empty();
    if (!pending.empty()) pending += '\n';
    pending += line;
    if (!blank && session.wants_more(pending)) continue;
    session.step(pending, out, err);
    pending.clear();
  }
  if (!pending.empty() && !session.finished()) session.step(pending, out, err);
}

}  // namespace psi::repl
