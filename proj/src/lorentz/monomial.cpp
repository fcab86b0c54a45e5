#include "psi/monomial.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include "psi/error.hpp"

namespace psi::lorentz {

namespace {

constexpr std::array<std::string_view, 4> kGenerators = {"x1", "x2", "~y1", "~y2"};

void check_component(std::int64_t value, const char* name) {
  if (value < 0 || value > MonomialRegister::kMaxComponent) {
    throw Error(ErrorCode::invariant_violation,
                std::string("register component ") + name + " = " + std::to_string(value) +
                    " is out of range");
  }
}

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t sum = std::uint64_t{a} + b;
  if (sum > MonomialRegister::kMaxComponent) {
    throw Error(ErrorCode::overflow, "monomial exponent overflow");
  }
  return static_cast<std::uint32_t>(sum);
}

}  // namespace

MonomialRegister::MonomialRegister(std::int64_t k, std::int64_t l, std::int64_t m,
                                   std::int64_t n) {
  check_component(k, "k");
  check_component(l, "l");
  check_component(m, "m");
  check_component(n, "n");
  if (k > l || m > n) {
    throw Error(ErrorCode::invariant_violation,
                "register (" + std::to_string(k) + "," + std::to_string(l) + "," +
                    std::to_string(m) + "," + std::to_string(n) + ") needs k <= l and m <= n");
  }
  k_ = static_cast<std::uint32_t>(k);
  l_ = static_cast<std::uint32_t>(l);
  m_ = static_cast<std::uint32_t>(m);
  n_ = static_cast<std::uint32_t>(n);
}

std::string HalfInteger::to_string() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::string RepLabel::to_string() const {
  return "(" + j1.to_string() + ", " + j2.to_string() + ")";
}

MonomialRegister register_mul(const MonomialRegister& a, const MonomialRegister& b) {
  return MonomialRegister(checked_add(a.k(), b.k()), checked_add(a.l(), b.l()),
                          checked_add(a.m(), b.m()), checked_add(a.n(), b.n()));
}

MonomialRegister register_conjugate(const MonomialRegister& r) {
  return MonomialRegister(r.m(), r.n(), r.k(), r.l());
}

RepLabel rep_label(const MonomialRegister& r) {
  return {HalfInteger{r.l()}, HalfInteger{r.n()}};
}

std::string format_monomial(const MonomialRegister& r) {
  const std::array<std::uint32_t, 4> exps = {r.x1(), r.x2(), r.y1(), r.y2()};
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += kGenerators[i];
    if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialRegister parse_monomial(std::string_view text) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::parse, "malformed monomial '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
  };
  const auto last = text.find_last_not_of(" \t\r\n");
  text = last == std::string_view::npos ? std::string_view{} : text.substr(0, last + 1);
  skip_spaces();
  if (text.substr(pos) == "1") return {};
  std::array<std::uint32_t, 4> exps{};
  bool any = false;
  while (pos < text.size()) {
    std::size_t which = kGenerators.size();
    for (std::size_t g = 0; g < kGenerators.size(); ++g) {
      if (text.substr(pos, kGenerators[g].size()) == kGenerators[g]) {
        which = g;
        break;
      }
    }
    if (which == kGenerators.size()) throw bad("unknown factor at offset " + std::to_string(pos));
    pos += kGenerators[which].size();
    std::uint32_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc() || ptr == first) throw bad("missing exponent");
      pos += static_cast<std::size_t>(ptr - first);
    }
    exps[which] = checked_add(exps[which], exponent);
    any = true;
    if (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) == 0) {
      throw bad("factors must be separated by spaces");
    }
    skip_spaces();
  }
  if (!any) throw bad("empty");
  const std::uint32_t l = checked_add(exps[0], exps[1]);
  const std::uint32_t n = checked_add(exps[2], exps[3]);
  return MonomialRegister(exps[0], l, exps[2], n);
}

}  // namespace psi::lorentz
