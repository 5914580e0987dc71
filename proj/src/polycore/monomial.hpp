#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace logvec {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Slots past the ring's arity stay zero, so comparisons
/// never need to know the arity.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t deg = 0;

  Monomial() = default;

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.exp[i] = static_cast<std::uint16_t>(power);
    m.deg = power;
    return m;
  }

  template <class It>
  static Monomial from_exponents(It first, It last) {
    Monomial m;
    std::size_t i = 0;
    for (; first != last; ++first, ++i) {
      if (i >= kMaxVars) throw std::out_of_range("too many variables");
      m.exp[i] = static_cast<std::uint16_t>(*first);
      m.deg += *first;
    }
    return m;
  }

  unsigned operator[](std::size_t i) const { return exp[i]; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exp != b.exp; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = unsigned(a.exp[i]) + b.exp[i];
      if (e > 0xFFFFu) throw std::overflow_error("exponent overflow");
      m.exp[i] = static_cast<std::uint16_t>(e);
    }
    m.deg = a.deg + b.deg;
    return m;
  }

  /// True iff this divides other.
  bool divides(const Monomial& other) const {
    if (deg > other.deg) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }

  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      m.exp[i] = static_cast<std::uint16_t>(other.exp[i] - exp[i]);
    m.deg = other.deg - deg;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.exp[i] = std::max(a.exp[i], b.exp[i]);
      m.deg += m.exp[i];
    }
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.exp[i] != 0 && b.exp[i] != 0) return false;
    return true;
  }

  bool is_one() const { return deg == 0; }
};

/// Graded reverse lexicographic comparison: -1, 0, 1.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  return 0;
}

/// Pure lexicographic comparison with x0 > x1 > ...
inline int lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

}  // namespace logvec
