#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include "psi/error.hpp"
#include "psi/interpreter.hpp"

namespace psi::repl {

struct SessionOptions {
  bool prelude = true;
  bool trace = false;  // print every rewrite step of simplify and :eval
  std::size_t max_rewrites = 10'000;
};

// Exit status of a failed run: 1 for lexical or syntax errors, 2 for type
// and registry errors, 3 for runtime errors.
int exit_code_for(const Error& e);

// `origin:line:col: Code: message`.
std::string format_diagnostic(const Error& e, std::string_view origin);

class Session {
 public:
  explicit Session(SessionOptions options = {});
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  eval::Interpreter& interpreter() { return *interp_; }
  const SessionOptions& options() const { return options_; }

  // Parses the whole program, then executes it. Returns the exit status.
  int run(std::string_view source, std::string_view origin, std::ostream& out,
          std::ostream& err);

  // One REPL input: a `:command`, an expression (printed), or statements
  // and declarations. A failed input leaves the session as it was.
  void step(std::string_view input, std::ostream& out, std::ostream& err);

  // True while `input` is an unfinished declaration or expression.
  bool wants_more(std::string_view input) const;
  bool finished() const { return finished_; }

 private:
  void command(std::string_view name, std::string_view arg, std::ostream& out);
  void evaluate_input(std::string_view input, std::ostream& out);
  Value eval_text(std::string_view text);

  SessionOptions options_;
  std::unique_ptr<eval::Interpreter> interp_;
  bool finished_ = false;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

RunResult run_source(std::string_view source, const SessionOptions& options = {},
                     std::string_view origin = "<input>");
// Exit status 4 with a diagnostic when the file cannot be read.
RunResult run_file(const std::string& path, const SessionOptions& options = {});

// Reads inputs line by line until end of input or `:quit`.
void run_repl(std::istream& in, std::ostream& out, std::ostream& err,
              const SessionOptions& options, bool show_prompt);

}  // namespace psi::repl
