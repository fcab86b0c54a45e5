#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace psi::lorentz {

// Packed exponents of the monomial x1^k x2^(l-k) ~y1^m ~y2^(n-m), where ~y
// denotes a complex-conjugated generator. Valid registers satisfy k <= l and
// m <= n; every component is at most kMaxComponent.
class MonomialRegister {
 public:
  static constexpr std::uint32_t kMaxComponent = 0x7FFFFFFF;

  constexpr MonomialRegister() = default;
  // Throws InvariantViolation unless k <= l, m <= n and all fit.
  MonomialRegister(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n);

  std::uint32_t k() const { return k_; }
  std::uint32_t l() const { return l_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return n_; }

  // Exponents of the four generators x1, x2, ~y1, ~y2.
  std::uint32_t x1() const { return k_; }
  std::uint32_t x2() const { return l_ - k_; }
  std::uint32_t y1() const { return m_; }
  std::uint32_t y2() const { return n_ - m_; }

  bool is_identity() const { return l_ == 0 && n_ == 0; }

  friend bool operator==(const MonomialRegister&, const MonomialRegister&) = default;

 private:
  std::uint32_t k_ = 0;
  std::uint32_t l_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t n_ = 0;
};

// A half-integer stored as its doubled value.
struct HalfInteger {
  std::int64_t twice = 0;

  std::string to_string() const;
  friend HalfInteger operator+(HalfInteger a, HalfInteger b) { return {a.twice + b.twice}; }
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

// The (l/2, n/2) Lorentz-group representation a monomial belongs to.
struct RepLabel {
  HalfInteger j1;
  HalfInteger j2;

  std::string to_string() const;
  friend RepLabel operator+(const RepLabel& a, const RepLabel& b) {
    return {a.j1 + b.j1, a.j2 + b.j2};
  }
  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

// Multiplication of monomials is componentwise addition. Throws
// OverflowError if a component leaves the representable range.
MonomialRegister register_mul(const MonomialRegister& a, const MonomialRegister& b);

// Complex conjugation swaps the (k, l) and (m, n) halves.
MonomialRegister register_conjugate(const MonomialRegister& r);

RepLabel rep_label(const MonomialRegister& r);

// `x1^k x2^(l-k) ~y1^m ~y2^(n-m)` with zero exponents omitted and exponent
// one written bare; the identity is `1`.
std::string format_monomial(const MonomialRegister& r);
MonomialRegister parse_monomial(std::string_view text);

}  // namespace psi::lorentz
