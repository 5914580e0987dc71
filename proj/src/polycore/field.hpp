#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace logvec {

/// Exact rationals. GMP keeps every value in lowest terms with a positive
/// denominator, and zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Element of the prime field Z/p. The modulus travels with the value so
/// that arithmetic needs no global state.
class ModP {
public:
  ModP() = default;
  ModP(std::uint64_t value, std::uint32_t prime)
      : v_(static_cast<std::uint32_t>(value % prime)), p_(prime) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t prime() const { return p_; }

  friend ModP operator+(ModP a, ModP b) {
    std::uint64_t s = std::uint64_t(a.v_) + b.v_;
    return raw(static_cast<std::uint32_t>(s >= a.p_ ? s - a.p_ : s), a.p_);
  }
  friend ModP operator-(ModP a, ModP b) {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend ModP operator*(ModP a, ModP b) {
    return raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  ModP& operator/=(ModP b) { return *this = *this / b; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }
  friend bool operator!=(ModP a, ModP b) { return a.v_ != b.v_; }

  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in Z/p");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return raw(static_cast<std::uint32_t>(t), p_);
  }

private:
  static ModP raw(std::uint32_t v, std::uint32_t p) {
    ModP m;
    m.v_ = v;
    m.p_ = p;
    return m;
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Per-field construction data. Rational needs none; Z/p needs the prime.
template <class K>
struct Field;

template <>
struct Field<Rational> {
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_int(long v) const { return v; }
  Rational from_rational(const Rational& q) const { return q; }
  std::uint32_t characteristic() const { return 0; }
  friend bool operator==(const Field&, const Field&) { return true; }
};

template <>
struct Field<ModP> {
  std::uint32_t prime = kDefaultPrime;

  ModP zero() const { return ModP(0, prime); }
  ModP one() const { return ModP(1, prime); }
  ModP from_int(long v) const {
    long r = v % static_cast<long>(prime);
    if (r < 0) r += prime;
    return ModP(static_cast<std::uint64_t>(r), prime);
  }
  ModP from_integer(const Integer& z) const {
    Integer r = z % prime;
    if (r < 0) r += prime;
    return ModP(r.get_ui(), prime);
  }
  ModP from_rational(const Rational& q) const {
    ModP den = from_integer(q.get_den());
    if (den.value() == 0)
      throw std::domain_error("denominator vanishes modulo " + std::to_string(prime));
    return from_integer(q.get_num()) / den;
  }
  std::uint32_t characteristic() const { return prime; }
  friend bool operator==(const Field& a, const Field& b) { return a.prime == b.prime; }
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ModP& a) { return a.value() == 0; }
inline bool is_one(const Rational& q) { return q == 1; }
inline bool is_one(const ModP& a) { return a.value() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const ModP& a) { return std::to_string(a.value()); }

/// Symmetric lift of a Z/p element to a rational representative in (-p/2, p/2].
inline Rational lift(const ModP& a) {
  long v = a.value();
  if (v > static_cast<long>(a.prime() / 2)) v -= a.prime();
  return Rational(v);
}
inline Rational lift(const Rational& q) { return q; }

}  // namespace logvec
