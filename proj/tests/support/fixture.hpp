#pragma once

#include <sstream>
#include <string>

#include "psi/session.hpp"
#include "psi/syntax/parser.hpp"
#include "psi/value.hpp"

namespace psi::testing {

// A session whose output is captured.
struct Fixture {
  explicit Fixture(bool prelude = true) : session(repl::SessionOptions{prelude, false, 10'000}) {
    session.interpreter().set_output(out);
  }

  eval::Interpreter& interp() { return session.interpreter(); }

  void run(const std::string& src) {
    interp().set_output(out);
    interp().execute(syntax::parse_program(src));
  }

  Value eval(const std::string& src) { return interp().evaluate(*syntax::parse_expression(src)); }
  std::string show(const std::string& src) { return format_value(eval(src)); }

  std::string take_output() {
    std::string s = out.str();
    out.str("");
    return s;
  }

  repl::Session session;
  std::ostringstream out;
};

template <class Fn>
ErrorCode error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::runtime;  // distinguishable only by the caller's CHECK
}

}  // namespace psi::testing
