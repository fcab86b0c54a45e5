#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "psi/session.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A script may start with `{ flags: --trace --no-prelude }`.
psi::repl::SessionOptions flags_of(const std::string& src) {
  psi::repl::SessionOptions o;
  const auto line = src.substr(0, src.find('\n'));
  if (line.rfind("{ flags:", 0) != 0) return o;
  o.trace = line.find("--trace") != std::string::npos;
  o.prelude = line.find("--no-prelude") == std::string::npos;
  return o;
}

}  // namespace

TEST_CASE("golden scripts reproduce their expected output") {
  std::vector<fs::path> scripts;
  for (const auto& entry : fs::directory_iterator(PSI_GOLDEN_DIR)) {
    if (entry.path().extension() == ".psi") scripts.push_back(entry.path());
  }
  std::sort(scripts.begin(), scripts.end());
  REQUIRE(scripts.size() >= 6);
  for (const auto& script : scripts) {
    const std::string src = slurp(script);
    const auto result =
        psi::repl::run_source(src, flags_of(src), script.filename().string());
    INFO(script.filename().string());
    auto expected = script;
    CHECK(result.out == slurp(expected.replace_extension(".out")));
    auto err = script;
    err.replace_extension(".err");
    if (fs::exists(err)) {
      CHECK(result.err == slurp(err));
      CHECK(result.exit_code != 0);
    } else {
      CHECK(result.err.empty());
      CHECK(result.exit_code == 0);
    }
  }
}
