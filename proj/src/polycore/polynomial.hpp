#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polycore/field.hpp"
#include "polycore/linalg.hpp"
#include "polycore/monomial.hpp"

namespace logvec {

template <class K>
struct Term {
  Monomial mono;
  K coef;
};

/// Degree reported for the zero polynomial.
inline constexpr int kMinusInfinity = INT_MIN;

/// Sparse multivariate polynomial over an exact field. Terms are stored in
/// strictly decreasing grevlex order with nonzero coefficients, so two
/// polynomials are equal iff their term lists are equal.
template <class K>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::size_t nvars, Field<K> field = {}) : nvars_(nvars), field_(field) {
    if (nvars > kMaxVars) throw std::out_of_range("too many variables");
  }

  static Poly constant(std::size_t nvars, const K& c, Field<K> field = {}) {
    Poly p(nvars, field);
    if (!logvec::is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Poly constant(std::size_t nvars, long c, Field<K> field = {}) {
    return constant(nvars, field.from_int(c), field);
  }
  static Poly variable(std::size_t nvars, std::size_t i, Field<K> field = {}) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Poly p(nvars, field);
    p.terms_.push_back({Monomial::variable(i), field.one()});
    return p;
  }
  static Poly monomial(std::size_t nvars, const Monomial& m, const K& c, Field<K> field = {}) {
    Poly p(nvars, field);
    if (!logvec::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds from arbitrary (monomial, coefficient) pairs; sorts and merges.
  static Poly from_terms(std::size_t nvars, std::vector<Term<K>> terms, Field<K> field = {}) {
    Poly p(nvars, field);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Field<K>& field() const { return field_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Leading term under grevlex; undefined for zero.
  const Term<K>& leading() const { return terms_.front(); }

  /// Maximum total degree; kMinusInfinity for zero.
  int total_degree() const {
    int d = kMinusInfinity;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.deg));
    return d;
  }

  K coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coef;
    return field_.zero();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return a.combine(b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return a.combine(b, true); }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.nvars_, a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    std::map<Monomial, K, GrevlexGreater> acc;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        Monomial m = s.mono * t.mono;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, s.coef * t.coef);
        else
          it->second += s.coef * t.coef;
      }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!logvec::is_zero(c)) r.terms_.push_back({m, c});
    return r;
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend Poly operator*(const K& c, const Poly& p) {
    Poly r(p.nvars_, p.field_);
    if (logvec::is_zero(c)) return r;
    r.terms_ = p.terms_;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }
  friend Poly operator*(const Poly& p, const K& c) { return c * p; }

  Poly times_monomial(const Monomial& m, const K& c) const {
    Poly r(nvars_, field_);
    if (logvec::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;
  }

  Poly pow(unsigned e) const {
    Poly result = constant(nvars_, field_.one(), field_);
    Poly base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  /// Scales so the leading coefficient is one; zero stays zero.
  Poly monic() const {
    if (is_zero()) return *this;
    return (field_.one() / leading().coef) * *this;
  }

  K evaluate(const std::vector<K>& point) const {
    K sum = field_.zero();
    for (const auto& t : terms_) {
      K v = t.coef;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned e = 0; e < t.mono.exp[i]; ++e) v *= point[i];
      sum += v;
    }
    return sum;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
  void check_compatible(const Poly& b) const {
    if (nvars_ != b.nvars_) throw std::invalid_argument("polynomials live in different rings");
  }

  Poly combine(const Poly& b, bool subtract) const {
    check_compatible(b);
    Poly r(nvars_, field_);
    r.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == terms_.size())
        c = -1;
      else if (j == b.terms_.size())
        c = 1;
      else
        c = grevlex_cmp(terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? K(-t.coef) : t.coef});
      } else {
        K s = subtract ? K(terms_[i].coef - b.terms_[j].coef) : K(terms_[i].coef + b.terms_[j].coef);
        if (!logvec::is_zero(s)) r.terms_.push_back({terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term<K>& a, const Term<K>& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coef += t.coef;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term<K>& t) { return logvec::is_zero(t.coef); });
    terms_ = std::move(out);
  }

  std::size_t nvars_ = 0;
  Field<K> field_{};
  std::vector<Term<K>> terms_;
};

using Polynomial = Poly<Rational>;

/// Homogeneity data; degree is meaningless for the zero polynomial.
struct Grading {
  bool is_zero = false;
  bool is_homogeneous = false;
  int degree = kMinusInfinity;
};

template <class K>
Grading grading(const Poly<K>& p) {
  Grading g;
  if (p.is_zero()) {
    g.is_zero = true;
    g.is_homogeneous = true;
    return g;
  }
  g.degree = p.total_degree();
  g.is_homogeneous = std::all_of(p.terms().begin(), p.terms().end(),
                                 [&](const Term<K>& t) { return int(t.mono.deg) == g.degree; });
  return g;
}

template <class K>
bool is_homogeneous(const Poly<K>& p) {
  return grading(p).is_homogeneous;
}

template <class K>
Poly<K> differentiate(const Poly<K>& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term<K>> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exp[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.exp[var] = static_cast<std::uint16_t>(e - 1);
    m.deg -= 1;
    out.push_back({m, t.coef * p.field().from_int(static_cast<long>(e))});
  }
  return Poly<K>::from_terms(p.nvars(), std::move(out), p.field());
}

/// Substitutes variable i by images[i] (all images in a common ring).
template <class K>
Poly<K> substitute(const Poly<K>& p, const std::vector<Poly<K>>& images) {
  if (images.size() != p.nvars()) throw std::invalid_argument("substitution arity mismatch");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  // powers[i][e] = images[i]^e, built lazily
  std::vector<std::vector<Poly<K>>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Poly<K>& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(Poly<K>::constant(target, p.field().one(), p.field()));
    while (v.size() <= e) v.push_back(v.back() * images[i]);
    return v[e];
  };
  Poly<K> result(target, p.field());
  for (const auto& t : p.terms()) {
    Poly<K> term = Poly<K>::constant(target, t.coef, p.field());
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.mono.exp[i]) term = term * power(i, t.mono.exp[i]);
    result += term;
  }
  return result;
}

/// Replaces each variable x_i by sum_j M(i,j) x_j. Rejects singular M.
template <class K>
Poly<K> apply_linear_change(const Poly<K>& p, const Matrix<K>& m) {
  std::size_t n = p.nvars();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("change matrix has wrong size");
  if (is_zero(m.determinant())) throw std::invalid_argument("singular change of variables");
  std::vector<Poly<K>> images;
  for (std::size_t i = 0; i < n; ++i) {
    Poly<K> form(n, p.field());
    for (std::size_t j = 0; j < n; ++j)
      form += Poly<K>::monomial(n, Monomial::variable(j), m(i, j), p.field());
    images.push_back(std::move(form));
  }
  return substitute(p, images);
}

/// Sets variable var to 1 and drops it from the ring.
template <class K>
Poly<K> dehomogenize(const Poly<K>& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term<K>> out;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0, k = 0; i < p.nvars(); ++i) {
      if (i == var) continue;
      m.exp[k++] = t.mono.exp[i];
    }
    m.deg = t.mono.deg - t.mono.exp[var];
    out.push_back({m, t.coef});
  }
  return Poly<K>::from_terms(p.nvars() - 1, std::move(out), p.field());
}

/// Appends a new last variable and homogenizes with it.
template <class K>
Poly<K> homogenize(const Poly<K>& p) {
  std::size_t n = p.nvars();
  if (n + 1 > kMaxVars) throw std::out_of_range("too many variables");
  int d = p.total_degree();
  std::vector<Term<K>> out;
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    m.exp[n] = static_cast<std::uint16_t>(d - static_cast<int>(t.mono.deg));
    m.deg = static_cast<std::uint32_t>(d);
    out.push_back({m, t.coef});
  }
  return Poly<K>::from_terms(n + 1, std::move(out), p.field());
}

/// Reinterprets a polynomial over Q in another field.
template <class K>
Poly<K> map_to_field(const Polynomial& p, Field<K> field) {
  std::vector<Term<K>> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono, field.from_rational(t.coef)});
  return Poly<K>::from_terms(p.nvars(), std::move(out), field);
}

/// Rational representative of a polynomial (symmetric lift from Z/p).
template <class K>
Polynomial lift_to_rational(const Poly<K>& p) {
  std::vector<Term<Rational>> out;
  for (const auto& t : p.terms()) out.push_back({t.mono, lift(t.coef)});
  return Polynomial::from_terms(p.nvars(), std::move(out));
}

/// Common denominator cleared, content removed, positive leading coefficient.
inline Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(p.leading().coef) < 0) scale = -scale;
  return scale * p;
}

}  // namespace logvec
