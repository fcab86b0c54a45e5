#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <unistd.h>

#include "psi/session.hpp"

namespace {

void add_session_flags(CLI::App* cmd, psi::repl::SessionOptions& options) {
  cmd->add_flag("--no-prelude", [&options](std::int64_t) { options.prelude = false; },
                "start without Group, Algebra, Complex, Monomial and i");
  cmd->add_flag("--trace", options.trace, "print every rewrite step");
  cmd->add_option("--max-rewrites", options.max_rewrites, "rewrite budget for simplify")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"psi: interpreter for a small object language with functional objects"};
  app.require_subcommand(1);

  psi::repl::SessionOptions options;
  std::string path;

  auto* run = app.add_subcommand("run", "run a .psi script");
  run->add_option("file", path, "script to run")->required();
  add_session_flags(run, options);

  auto* repl = app.add_subcommand("repl", "interactive session");
  add_session_flags(repl, options);

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    const auto result = psi::repl::run_file(path, options);
    std::cout << result.out << std::flush;
    std::cerr << result.err << std::flush;
    return result.exit_code;
  }
  psi::repl::run_repl(std::cin, std::cout, std::cerr, options, isatty(STDIN_FILENO) != 0);
  return 0;
}
