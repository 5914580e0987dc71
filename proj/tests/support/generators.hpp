#pragma once

// Seeded random inputs for property tests.

#include <cstdint>
#include <vector>

#include "polycore/polynomial.hpp"
#include "singcurve/singcurve.hpp"

namespace logvec::testing {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : draws_(seed) {}

  long integer(long lo, long hi) { return draws_.uniform(lo, hi); }
  bool coin() { return integer(0, 1) == 1; }

  Monomial monomial(std::size_t nvars, int max_degree) {
    std::vector<int> e(nvars, 0);
    int budget = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i < budget; ++i) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
    return Monomial::from_exponents(e.begin(), e.end());
  }

  /// Up to `terms` terms, coefficients in [-c, c], total degree <= max_degree.
  template <class K>
  Poly<K> poly(std::size_t nvars, int max_degree, int terms, long c, Field<K> field = {}) {
    std::vector<Term<K>> ts;
    for (int i = 0; i < terms; ++i) ts.push_back({monomial(nvars, max_degree), field.from_int(integer(-c, c))});
    return Poly<K>::from_terms(nvars, std::move(ts), field);
  }

  /// Homogeneous of the given degree with a few terms.
  template <class K>
  Poly<K> form(std::size_t nvars, int degree, int terms, long c, Field<K> field = {}) {
    std::vector<Term<K>> ts;
    for (int i = 0; i < terms; ++i) {
      std::vector<int> e(nvars, 0);
      for (int j = 0; j < degree; ++j) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
      ts.push_back({Monomial::from_exponents(e.begin(), e.end()), field.from_int(integer(-c, c))});
    }
    return Poly<K>::from_terms(nvars, std::move(ts), field);
  }

  Polynomial line() {
    for (;;) {
      long a = integer(-3, 3), b = integer(-3, 3), c = integer(-3, 3);
      if (a == 0 && b == 0 && c == 0) continue;
      return Polynomial::constant(3, a) * Polynomial::variable(3, 0) +
             Polynomial::constant(3, b) * Polynomial::variable(3, 1) +
             Polynomial::constant(3, c) * Polynomial::variable(3, 2);
    }
  }

  /// Smooth conic: random full-rank symmetric form.
  Polynomial conic() {
    for (;;) {
      Polynomial q = form<Rational>(3, 2, 4, 3);
      if (grading(q).degree == 2 && is_smooth(q)) return q;
    }
  }

  /// Arrangement of up to four lines and conics with reduced product.
  std::vector<Polynomial> arrangement(int max_components = 4) {
    for (;;) {
      int k = static_cast<int>(integer(2, max_components));
      std::vector<Polynomial> comps;
      for (int i = 0; i < k; ++i) comps.push_back(coin() ? line() : conic());
      try {
        Arrangement::from_components(comps);
        return comps;
      } catch (const HypothesisError&) {
      }
    }
  }

  std::vector<Polynomial> lines(int count) {
    for (;;) {
      std::vector<Polynomial> comps;
      for (int i = 0; i < count; ++i) comps.push_back(line());
      try {
        Arrangement::from_components(comps);
        return comps;
      } catch (const HypothesisError&) {
      }
    }
  }

private:
  SeededDraws draws_;
};

}  // namespace logvec::testing
