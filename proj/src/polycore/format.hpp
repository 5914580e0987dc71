#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "polycore/polynomial.hpp"

namespace logvec {

/// Default names: x, y, z for up to three variables, x0, x1, ... beyond.
inline std::vector<std::string> default_variable_names(std::size_t n) {
  if (n <= 3) {
    std::vector<std::string> base{"x", "y", "z"};
    return {base.begin(), base.begin() + static_cast<long>(n)};
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

namespace detail {
inline bool negative(const Rational& q) { return sgn(q) < 0; }
inline bool negative(const ModP&) { return false; }
inline Rational magnitude(const Rational& q) { return abs(q); }
inline ModP magnitude(const ModP& a) { return a; }
}  // namespace detail

/// Canonical text form; parse(to_string(p)) == p.
template <class K>
std::string to_string(const Poly<K>& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = detail::negative(t.coef);
    K mag = detail::magnitude(t.coef);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (t.mono.is_one()) {
      os << to_string(mag);
    } else {
      if (!is_one(mag)) os << to_string(mag) << '*';
      os << monomial_to_string(t.mono, names);
    }
  }
  return os.str();
}

template <class K>
std::string to_string(const Poly<K>& p) {
  return to_string(p, default_variable_names(p.nvars()));
}

}  // namespace logvec
