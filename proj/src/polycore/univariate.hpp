#pragma once

#include <utility>
#include <vector>

#include "polycore/field.hpp"

namespace logvec {

/// Dense univariate polynomial, coefficients from the constant term up.
/// Used for eliminants and restrictions to lines.
template <class K>
class UPoly {
public:
  UPoly() = default;
  UPoly(std::vector<K> coeffs, Field<K> field) : c_(std::move(coeffs)), field_(field) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  const K& lead() const { return c_.back(); }

  UPoly derivative() const {
    std::vector<K> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<long>(i)));
    return UPoly(std::move(d), field_);
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    std::vector<K> m = c_;
    K inv = field_.one() / lead();
    for (auto& a : m) a *= inv;
    return UPoly(std::move(m), field_);
  }

  /// Quotient and remainder of Euclidean division.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    std::vector<K> r = c_;
    int dd = d.degree();
    if (dd < 0) throw std::domain_error("division by zero polynomial");
    std::vector<K> q(r.size() > static_cast<std::size_t>(dd) ? r.size() - dd : 0, field_.zero());
    K inv = field_.one() / d.lead();
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
      if (is_zero_coef(r[i])) continue;
      K f = r[i] * inv;
      q[i - dd] = f;
      for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(q), field_), UPoly(std::move(r), field_)};
  }

  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second.monic();
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Product of the distinct irreducible factors (characteristic zero or
  /// degree below the characteristic).
  UPoly squarefree_part() const {
    if (degree() <= 0) return monic();
    UPoly g = gcd(*this, derivative());
    return divmod(g).first.monic();
  }

  bool is_squarefree() const { return degree() <= 0 || gcd(*this, derivative()).degree() == 0; }

private:
  static bool is_zero_coef(const K& a) { return logvec::is_zero(a); }
  void trim() {
    while (!c_.empty() && logvec::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
  Field<K> field_{};
};

}  // namespace logvec
