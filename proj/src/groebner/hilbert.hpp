#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "polycore/field.hpp"
#include "polycore/monomial.hpp"

namespace logvec {

/// Integer Laurent polynomial in t; used for Hilbert series numerators.
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, long long coef = 1) {
    LaurentPoly p;
    p.add(exponent, coef);
    return p;
  }

  void add(int exponent, long long coef) {
    if (coef == 0) return;
    auto& c = coeffs_[exponent];
    c += coef;
    if (c == 0) coeffs_.erase(exponent);
  }

  long long coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
  }

  const std::map<int, long long>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return coeffs_.begin()->first; }
  int max_exponent() const { return coeffs_.rbegin()->first; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (auto [e, c] : b.coeffs_) a.add(e, c);
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    for (auto [e, c] : b.coeffs_) a.add(e, -c);
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [e1, c1] : a.coeffs_)
      for (auto [e2, c2] : b.coeffs_) r.add(e1 + e2, c1 * c2);
    return r;
  }
  LaurentPoly shifted(int by) const {
    LaurentPoly r;
    for (auto [e, c] : coeffs_) r.add(e + by, c);
    return r;
  }
  long long evaluate_at_one() const {
    long long s = 0;
    for (auto [e, c] : coeffs_) s += c;
    return s;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Text like "2t^4 - t^5 - t^6"; terms by increasing exponent.
  std::string to_string() const;

private:
  std::map<int, long long> coeffs_;
};

/// Hilbert series numerator(t) / (1 - t)^vars of a graded module over a
/// polynomial ring in `vars` variables.
class HilbertSeries {
public:
  HilbertSeries() = default;
  HilbertSeries(LaurentPoly numerator, std::size_t vars) : num_(std::move(numerator)), vars_(vars) {}

  const LaurentPoly& numerator() const { return num_; }
  std::size_t vars() const { return vars_; }

  /// Dimension of the degree-t graded piece.
  long long value(int t) const;

  /// Coefficients (constant term first) of the polynomial P with
  /// value(t) == P(t) for all t >= regularity_index().
  std::vector<Rational> hilbert_polynomial() const;
  Rational hilbert_polynomial_at(int t) const;

  /// Least t0 such that value(t) == HP(t) for every t >= t0.
  int regularity_index() const;

  /// Krull dimension of the module (0 for the zero module is reported as -1).
  int krull_dimension() const;

  /// Multiplicity: numerator / (1-t)^codim evaluated at t = 1.
  long long multiplicity() const;

  /// numerator / (1 - t)^k as an exact Laurent polynomial; throws if (1-t)^k
  /// does not divide.
  LaurentPoly reduced_numerator(std::size_t k) const;

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.vars_ == b.vars_ && a.num_ == b.num_;
  }

  std::string to_string() const;

private:
  LaurentPoly num_;
  std::size_t vars_ = 0;
};

/// Numerator K(t) of HS(S/I) = K(t)/(1-t)^n for a monomial ideal I given by
/// generators in n variables.
LaurentPoly monomial_ideal_numerator(std::vector<Monomial> gens, std::size_t nvars);

/// Binomial(n, k) as an exact integer, zero when n < k or k < 0.
long long binomial(long long n, long long k);

}  // namespace logvec
