#pragma once

// Independent reference computations. None of these use the Buchberger
// engine: plain division, dense expansion, Macaulay matrices and direct
// geometry of lines.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "polycore/linalg.hpp"
#include "polycore/polynomial.hpp"

namespace logvec::testing {

/// Multivariate division by a list under grevlex; returns the remainder.
template <class K>
Poly<K> divide_remainder(Poly<K> f, const std::vector<Poly<K>>& divisors) {
  Poly<K> rem(f.nvars(), f.field());
  while (!f.is_zero()) {
    const auto lt = f.leading();
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero() || !g.leading().mono.divides(lt.mono)) continue;
      f -= g.times_monomial(g.leading().mono.quotient_of(lt.mono), lt.coef / g.leading().coef);
      divided = true;
      break;
    }
    if (!divided) {
      rem += Poly<K>::monomial(f.nvars(), lt.mono, lt.coef, f.field());
      f -= Poly<K>::monomial(f.nvars(), lt.mono, lt.coef, f.field());
    }
  }
  return rem;
}

template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
  Monomial l = lcm(f.leading().mono, g.leading().mono);
  return f.times_monomial(f.leading().mono.quotient_of(l), g.leading().coef) -
         g.times_monomial(g.leading().mono.quotient_of(l), f.leading().coef);
}

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, int degree, bool exact) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      for (int v = exact ? left : 0; v <= left; ++v) {
        e[i] = v;
        out.push_back(Monomial::from_exponents(e.begin(), e.end()));
      }
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, degree);
  return out;
}

/// dim K[x]/(I + m^N) at the origin by rank of a truncated Macaulay
/// matrix. For N beyond the local nilpotency order this is the local
/// length of I at 0.
template <class K>
std::size_t local_length_at_origin(const std::vector<Poly<K>>& gens, int N) {
  const std::size_t n = gens.front().nvars();
  auto cols = monomials_up_to(n, N - 1, false);
  std::map<Monomial, std::size_t, GrevlexGreater> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  std::vector<Vector<K>> rows;
  Field<K> field = gens.front().field();
  for (const auto& g : gens)
    for (const auto& m : cols) {
      Vector<K> r(cols.size(), field.zero());
      bool any = false;
      for (const auto& t : g.terms()) {
        Monomial mm = t.mono * m;
        if (static_cast<int>(mm.deg) >= N) continue;
        r[index.at(mm)] += t.coef;
        any = true;
      }
      if (any) rows.push_back(std::move(r));
    }
  Matrix<K> mat(rows.size(), cols.size(), field);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) mat(i, j) = rows[i][j];
  return cols.size() - mat.rank();
}

/// dim of the degree-t piece of S/I for homogeneous I, by linear algebra
/// on the products (monomial * generator) of degree t.
template <class K>
long long hilbert_function_by_rank(const std::vector<Poly<K>>& gens, int t) {
  const std::size_t n = gens.front().nvars();
  auto cols = monomials_up_to(n, t, true);
  std::map<Monomial, std::size_t, GrevlexGreater> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  Field<K> field = gens.front().field();
  std::vector<Vector<K>> rows;
  for (const auto& g : gens) {
    int d = g.total_degree();
    if (d > t) continue;
    for (const auto& m : monomials_up_to(n, t - d, true)) {
      Vector<K> r(cols.size(), field.zero());
      for (const auto& term : g.terms()) r[index.at(term.mono * m)] += term.coef;
      rows.push_back(std::move(r));
    }
  }
  if (rows.empty()) return static_cast<long long>(cols.size());
  Matrix<K> mat(rows.size(), cols.size(), field);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) mat(i, j) = rows[i][j];
  return static_cast<long long>(cols.size() - mat.rank());
}

/// Number of degree-t monomials outside a monomial ideal.
inline long long standard_monomials_in_degree(const std::vector<Monomial>& gens, std::size_t nvars, int t) {
  long long count = 0;
  for (const auto& m : monomials_up_to(nvars, t, true)) {
    bool in = false;
    for (const auto& g : gens)
      if (g.divides(m)) in = true;
    if (!in) ++count;
  }
  return count;
}

/// Dense expansion of a product of polynomials: exponent vector -> coefficient.
inline std::map<std::vector<int>, Rational> dense_product(const std::vector<Polynomial>& factors) {
  std::map<std::vector<int>, Rational> acc{{std::vector<int>(3, 0), Rational(1)}};
  for (const auto& f : factors) {
    std::map<std::vector<int>, Rational> next;
    for (const auto& [e, c] : acc)
      for (const auto& t : f.terms()) {
        auto sum = e;
        for (std::size_t i = 0; i < 3; ++i) sum[i] += t.mono.exp[i];
        next[sum] += c * t.coef;
      }
    acc.clear();
    for (auto& [e, c] : next)
      if (sgn(c) != 0) acc.emplace(e, c);
  }
  return acc;
}

/// Pairwise intersections of a line arrangement: each point, normalized so
/// its last nonzero coordinate is 1, with the lines through it.
inline std::map<std::array<Rational, 3>, std::set<std::size_t>> line_arrangement_points(
    const std::vector<Polynomial>& lines) {
  auto coeffs = [](const Polynomial& l) {
    std::array<Rational, 3> c{Rational(0), Rational(0), Rational(0)};
    for (const auto& t : l.terms())
      for (std::size_t i = 0; i < 3; ++i)
        if (t.mono.exp[i]) c[i] = t.coef;
    return c;
  };
  std::map<std::array<Rational, 3>, std::set<std::size_t>> points;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto a = coeffs(lines[i]), b = coeffs(lines[j]);
      std::array<Rational, 3> p{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
      for (int k = 2; k >= 0; --k)
        if (sgn(p[static_cast<std::size_t>(k)]) != 0) {
          Rational s = p[static_cast<std::size_t>(k)];
          for (auto& v : p) v /= s;
          break;
        }
      points[p].insert(i);
      points[p].insert(j);
    }
  return points;
}

/// Singular points of a line arrangement by intersecting pairs directly:
/// returns (point count, sum over points of (m_p - 1)^2).
inline std::pair<long long, long long> line_arrangement_oracle(const std::vector<Polynomial>& lines) {
  auto points = line_arrangement_points(lines);
  long long mu = 0;
  for (const auto& [p, ls] : points) mu += static_cast<long long>((ls.size() - 1) * (ls.size() - 1));
  return {static_cast<long long>(points.size()), mu};
}

/// Forms of degree d vanishing at the given points: the kernel dimension of
/// the evaluation matrix on all degree-d monomials.
inline long long forms_through_oracle(const std::vector<std::array<Rational, 3>>& points, int d) {
  std::vector<Monomial> monos;
  for (const auto& m : monomials_up_to(3, d, true)) monos.push_back(m);
  Matrix<Rational> ev(points.size(), monos.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      Rational v(1);
      for (std::size_t k = 0; k < 3; ++k)
        for (int e = 0; e < static_cast<int>(monos[j].exp[k]); ++e) v *= points[i][k];
      ev(i, j) = v;
    }
  return static_cast<long long>(monos.size()) - static_cast<long long>(ev.rank());
}

}  // namespace logvec::testing
