#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "groebner/engine.hpp"
#include "groebner/hilbert.hpp"
#include "groebner/order.hpp"
#include "polycore/polynomial.hpp"

namespace logvec {

template <class K>
using Vec = std::vector<Poly<K>>;

/// Vector of a graded free module; basis element i has degree shifts[i].
template <class K>
struct FreeModuleElement {
  Vec<K> coords;
  std::vector<int> shifts;

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Poly<K>& p) { return p.is_zero(); });
  }
  /// Max of deg(coords[i]) + shifts[i]; kMinusInfinity for zero.
  int degree() const {
    int d = kMinusInfinity;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) d = std::max(d, coords[i].total_degree() + shifts[i]);
    return d;
  }
  bool is_homogeneous() const {
    int d = degree();
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (const auto& t : coords[i].terms())
        if (static_cast<int>(t.mono.deg) + shifts[i] != d) return false;
    return true;
  }
};

/// Submodule of the graded free module with basis degrees `shifts`.
template <class K>
struct GradedSubmodule {
  std::size_t nvars = 0;
  Field<K> field{};
  std::vector<int> shifts;
  std::vector<Vec<K>> gens;

  std::size_t rank() const { return shifts.size(); }
  FreeModuleElement<K> element(std::size_t i) const { return {gens[i], shifts}; }
  int degree(std::size_t i) const { return element(i).degree(); }
  std::vector<int> degrees() const {
    std::vector<int> d;
    for (std::size_t i = 0; i < gens.size(); ++i) d.push_back(degree(i));
    return d;
  }
};

/// Ideal given by generators; homogeneity is required only by the graded
/// operations that say so.
template <class K>
struct GradedIdeal {
  std::size_t nvars = 0;
  Field<K> field{};
  std::vector<Poly<K>> gens;

  static GradedIdeal of(std::vector<Poly<K>> gens) {
    if (gens.empty()) throw std::invalid_argument("ideal needs at least one generator to fix its ring");
    GradedIdeal I{gens.front().nvars(), gens.front().field(), {}};
    for (auto& g : gens)
      if (!g.is_zero()) I.gens.push_back(std::move(g));
    return I;
  }

  GradedSubmodule<K> as_submodule() const {
    GradedSubmodule<K> m{nvars, field, {0}, {}};
    for (const auto& g : gens) m.gens.push_back({g});
    return m;
  }
};

/// The irrelevant ideal generated by all variables.
template <class K>
GradedIdeal<K> irrelevant_ideal(std::size_t nvars, Field<K> field = {}) {
  GradedIdeal<K> I{nvars, field, {}};
  for (std::size_t i = 0; i < nvars; ++i) I.gens.push_back(Poly<K>::variable(nvars, i, field));
  return I;
}

/// A Groebner basis under construction or complete, with exact normal forms.
template <class K>
class GroebnerBasis {
public:
  GroebnerBasis(std::size_t nvars, ModuleOrder order, Field<K> field = {},
                EngineLimits limits = limits_from_environment())
      : eng_(nvars, std::move(order), field, limits) {}

  static GroebnerBasis of(const GradedIdeal<K>& I, MonomialOrder order = {}) {
    GroebnerBasis gb(I.nvars, ModuleOrder::ideal(order), I.field);
    for (const auto& g : I.gens) gb.add(g);
    gb.compute();
    return gb;
  }

  static GroebnerBasis of(const GradedSubmodule<K>& M,
                          ModuleOrderKind kind = ModuleOrderKind::term_over_position) {
    GroebnerBasis gb(M.nvars, ModuleOrder{MonomialOrder::grevlex(), kind, M.shifts, 0}, M.field);
    for (const auto& g : M.gens) gb.add(g);
    gb.compute();
    return gb;
  }

  std::size_t nvars() const { return eng_.nvars(); }
  std::size_t rank() const { return eng_.order().rank(); }
  const Field<K>& field() const { return eng_.field(); }

  void add(const Vec<K>& v) { eng_.add_generator(eng_.element(integral(v).first)); }
  void add(const Poly<K>& p) { add(Vec<K>{p}); }

  /// Processes everything up to the given (shifted) degree.
  void compute(int max_degree = INT_MAX) { eng_.run(max_degree); }
  bool is_complete(int max_degree = INT_MAX) const { return eng_.done(max_degree); }

  /// Adds v if its normal form is nonzero; returns whether it was new.
  /// Only meaningful once the basis is complete up to v's degree.
  bool add_if_new(const Vec<K>& v) {
    auto e = eng_.reduce(eng_.element(integral(v).first));
    if (e.empty()) return false;
    eng_.insert_reduced(std::move(e));
    return true;
  }

  /// Exact normal form: v minus an element of the module, with no term
  /// divisible by a leading term.
  Vec<K> reduce(const Vec<K>& v) const {
    auto [w, den] = integral(v);
    K scale = field().one();
    auto r = eng_.reduce(eng_.element(w), &scale);
    auto coords = eng_.coordinates(r, rank());
    K inv = field().one() / (scale * den);
    for (auto& c : coords) c = inv * c;
    return coords;
  }
  Poly<K> reduce(const Poly<K>& p) const { return reduce(Vec<K>{p}).front(); }

  bool contains(const Vec<K>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Poly<K>& c) { return c.is_zero(); });
  }
  bool contains(const Poly<K>& p) const { return reduce(p).is_zero(); }

  /// Reduced basis, each element scaled to leading coefficient one, sorted
  /// by increasing leading term.
  std::vector<Vec<K>> elements() const {
    std::vector<Vec<K>> out;
    for (const auto& e : eng_.reduced_basis()) {
      auto coords = eng_.coordinates(e, rank());
      K lc = coords[e.front().comp].coefficient(e.front().m);
      K inv = field().one() / lc;
      for (auto& c : coords) c = inv * c;
      out.push_back(std::move(coords));
    }
    return out;
  }

  /// The reduced basis of an ideal as polynomials.
  std::vector<Poly<K>> polys() const {
    std::vector<Poly<K>> out;
    for (auto& v : elements()) out.push_back(std::move(v.front()));
    return out;
  }

  /// Raw reduced basis with leading-term positions, for callers that need
  /// to split by component.
  std::vector<std::pair<std::uint32_t, Vec<K>>> elements_with_position() const {
    std::vector<std::pair<std::uint32_t, Vec<K>>> out;
    auto raw = eng_.reduced_basis();
    auto els = elements();
    for (std::size_t i = 0; i < raw.size(); ++i) out.emplace_back(raw[i].front().comp, std::move(els[i]));
    return out;
  }

  std::vector<Monomial> leading_monomials(std::uint32_t comp = 0) const {
    std::vector<Monomial> out;
    for (const auto& [m, c] : eng_.leading_terms())
      if (c == comp) out.push_back(m);
    return out;
  }

  bool is_unit_ideal() const {
    for (const auto& m : leading_monomials(0))
      if (m.is_one()) return true;
    return false;
  }

  const Buchberger<K>& engine() const { return eng_; }

private:
  /// Clears denominators; returns (den * v, den).
  static std::pair<Vec<K>, K> integral(const Vec<K>& v) {
    if constexpr (std::is_same_v<K, Rational>) {
      Integer den = 1;
      for (const auto& p : v)
        for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
      if (den == 1) return {v, Rational(1)};
      Vec<K> w;
      for (const auto& p : v) w.push_back(Rational(den) * p);
      return {w, Rational(den)};
    } else {
      Field<K> f = v.empty() ? Field<K>{} : v.front().field();
      return {v, f.one()};
    }
  }

  Buchberger<K> eng_;
};

/// Reduced Groebner basis of an ideal.
template <class K>
std::vector<Poly<K>> groebner_basis(const std::vector<Poly<K>>& gens, MonomialOrder order = {}) {
  return GroebnerBasis<K>::of(GradedIdeal<K>::of(gens), order).polys();
}

/// Reduced Groebner basis of a submodule under the given module order.
template <class K>
std::vector<Vec<K>> groebner_basis(const GradedSubmodule<K>& M, ModuleOrder order) {
  GroebnerBasis<K> gb(M.nvars, std::move(order), M.field);
  for (const auto& g : M.gens) gb.add(g);
  gb.compute();
  return gb.elements();
}

/// Normal form of p modulo the ideal spanned by `basis`.
template <class K>
Poly<K> normal_form(const Poly<K>& p, const std::vector<Poly<K>>& basis, MonomialOrder order = {}) {
  GroebnerBasis<K> gb(p.nvars(), ModuleOrder::ideal(order), p.field());
  for (const auto& g : basis) gb.add(g);
  gb.compute();
  return gb.reduce(p);
}

/// Module of relations v with sum v_i * gens[i] = 0. The i-th basis
/// element of the source gets the degree of gens[i], so homogeneous input
/// gives homogeneous syzygies.
template <class K>
GradedSubmodule<K> syzygies(const GradedSubmodule<K>& M) {
  const std::size_t r = M.rank(), k = M.gens.size();
  GradedSubmodule<K> out{M.nvars, M.field, {}, {}};
  for (std::size_t i = 0; i < k; ++i) {
    int d = M.degree(i);
    out.shifts.push_back(d == kMinusInfinity ? 0 : d);
  }
  if (k == 0) return out;
  std::vector<int> shifts = M.shifts;
  shifts.insert(shifts.end(), out.shifts.begin(), out.shifts.end());
  GroebnerBasis<K> gb(M.nvars, ModuleOrder{MonomialOrder::grevlex(), ModuleOrderKind::term_over_position, shifts, r},
                      M.field);
  for (std::size_t i = 0; i < k; ++i) {
    Vec<K> row = M.gens[i];
    row.resize(r + k, Poly<K>(M.nvars, M.field));
    row[r + i] = Poly<K>::constant(M.nvars, M.field.one(), M.field);
    gb.add(row);
  }
  gb.compute();
  for (auto& [comp, v] : gb.elements_with_position()) {
    if (comp < r) continue;
    out.gens.emplace_back(v.begin() + static_cast<long>(r), v.end());
  }
  return out;
}

template <class K>
GradedSubmodule<K> syzygies(const std::vector<Poly<K>>& gens) {
  if (gens.empty()) throw std::invalid_argument("syzygies of an empty list");
  GradedSubmodule<K> M{gens.front().nvars(), gens.front().field(), {0}, {}};
  for (const auto& g : gens) M.gens.push_back({g});
  return syzygies(M);
}

/// A minimal generating set drawn from the given homogeneous generators,
/// chosen greedily by increasing degree.
template <class K>
GradedSubmodule<K> minimal_generators(const GradedSubmodule<K>& M) {
  GradedSubmodule<K> out{M.nvars, M.field, M.shifts, {}};
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < M.gens.size(); ++i) {
    auto e = M.element(i);
    if (e.is_zero()) continue;
    if (!e.is_homogeneous()) throw std::invalid_argument("minimal generators need homogeneous input");
    order.emplace_back(e.degree(), i);
  }
  std::stable_sort(order.begin(), order.end());
  GroebnerBasis<K> gb(M.nvars, ModuleOrder{MonomialOrder::grevlex(), ModuleOrderKind::term_over_position, M.shifts, 0},
                      M.field);
  int current = INT_MIN;
  for (auto [d, i] : order) {
    if (d != current) {
      gb.compute(d);
      current = d;
    }
    if (gb.add_if_new(M.gens[i])) out.gens.push_back(M.gens[i]);
  }
  return out;
}

template <class K>
GradedIdeal<K> minimal_generators(const GradedIdeal<K>& I) {
  auto m = minimal_generators(I.as_submodule());
  GradedIdeal<K> out{I.nvars, I.field, {}};
  for (auto& g : m.gens) out.gens.push_back(std::move(g.front()));
  return out;
}

/// Graded minimal free resolution ... <- F_1 <- F_0. degrees[i] lists the
/// basis degrees of F_i; maps[i] holds the images of the basis of F_{i+1}
/// in F_i. For a module M, `generators` maps F_0 onto M.
template <class K>
struct FreeResolution {
  std::size_t nvars = 0;
  std::vector<std::vector<int>> degrees;
  std::vector<GradedSubmodule<K>> maps;
  GradedSubmodule<K> generators;

  std::size_t length() const { return degrees.empty() ? 0 : degrees.size() - 1; }
  std::vector<std::size_t> betti_numbers() const {
    std::vector<std::size_t> b;
    for (const auto& d : degrees) b.push_back(d.size());
    return b;
  }
  /// Alternating sum of the shifted free modules.
  HilbertSeries hilbert_series() const {
    LaurentPoly num;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      for (int d : degrees[i]) num.add(d, i % 2 == 0 ? 1 : -1);
    return HilbertSeries(num, nvars);
  }
  /// Max over i of (largest degree in F_i) - i.
  int regularity() const {
    int r = INT_MIN;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      for (int d : degrees[i]) r = std::max(r, d - static_cast<int>(i));
    return r;
  }
};

namespace detail {

template <class K>
void extend_resolution(FreeResolution<K>& res, GradedSubmodule<K> current) {
  for (;;) {
    auto syz = minimal_generators(syzygies(current));
    if (syz.gens.empty()) return;
    res.degrees.push_back(syz.degrees());
    res.maps.push_back(syz);
    current = std::move(syz);
  }
}

}  // namespace detail

/// Minimal free resolution of a submodule of a graded free module.
template <class K>
FreeResolution<K> free_resolution(const GradedSubmodule<K>& M) {
  FreeResolution<K> res;
  res.nvars = M.nvars;
  res.generators = minimal_generators(M);
  if (res.generators.gens.empty()) return res;
  res.degrees.push_back(res.generators.degrees());
  detail::extend_resolution(res, res.generators);
  return res;
}

/// Minimal free resolution of S/I, starting with F_0 = S.
template <class K>
FreeResolution<K> free_resolution(const GradedIdeal<K>& I) {
  FreeResolution<K> res;
  res.nvars = I.nvars;
  res.generators = GradedSubmodule<K>{I.nvars, I.field, {0}, {{Poly<K>::constant(I.nvars, I.field.one(), I.field)}}};
  res.degrees.push_back({0});
  auto gens = minimal_generators(I.as_submodule());
  if (gens.gens.empty()) return res;
  res.degrees.push_back(gens.degrees());
  res.maps.push_back(gens);
  detail::extend_resolution(res, gens);
  return res;
}

/// Hilbert series of S/I from the staircase of a graded Groebner basis.
template <class K>
HilbertSeries hilbert_series_quotient(const GroebnerBasis<K>& gb) {
  return HilbertSeries(monomial_ideal_numerator(gb.leading_monomials(0), gb.nvars()), gb.nvars());
}

template <class K>
HilbertSeries hilbert_series(const GradedIdeal<K>& I) {
  return hilbert_series_quotient(GroebnerBasis<K>::of(I));
}

/// Hilbert series of the submodule M itself, from the staircase of each
/// component of its leading-term module.
template <class K>
HilbertSeries hilbert_series(const GradedSubmodule<K>& M) {
  auto gb = GroebnerBasis<K>::of(M);
  LaurentPoly num;
  for (std::size_t j = 0; j < M.rank(); ++j) {
    auto quotient = monomial_ideal_numerator(gb.leading_monomials(static_cast<std::uint32_t>(j)), M.nvars);
    num = num + LaurentPoly::monomial(M.shifts[j]) - quotient.shifted(M.shifts[j]);
  }
  return HilbertSeries(num, M.nvars);
}

template <class K>
long long hilbert_function(const GradedSubmodule<K>& M, int t) {
  return hilbert_series(M).value(t);
}

/// I : J = { f : f*J in I }.
template <class K>
GradedIdeal<K> quotient(const GradedIdeal<K>& I, const GradedIdeal<K>& J) {
  const std::size_t s = J.gens.size();
  GradedIdeal<K> out{I.nvars, I.field, {}};
  if (s == 0) {
    out.gens.push_back(Poly<K>::constant(I.nvars, I.field.one(), I.field));
    return out;
  }
  // kernel of S -> (S/I)^s, f -> (f h_1, ..., f h_s)
  GradedSubmodule<K> M{I.nvars, I.field, std::vector<int>(s, 0), {}};
  M.gens.push_back(J.gens);
  for (std::size_t j = 0; j < s; ++j)
    for (const auto& g : I.gens) {
      Vec<K> v(s, Poly<K>(I.nvars, I.field));
      v[j] = g;
      M.gens.push_back(std::move(v));
    }
  auto syz = syzygies(M);
  for (auto& v : syz.gens)
    if (!v.front().is_zero()) out.gens.push_back(std::move(v.front()));
  if (out.gens.empty()) out.gens.push_back(Poly<K>(I.nvars, I.field));
  return out;
}

/// Whether every generator of J lies in I.
template <class K>
bool ideal_contains(const GroebnerBasis<K>& gb, const GradedIdeal<K>& J) {
  return std::all_of(J.gens.begin(), J.gens.end(), [&](const Poly<K>& g) { return gb.contains(g); });
}

/// Iterated quotient I : J^infinity.
template <class K>
GradedIdeal<K> saturate(const GradedIdeal<K>& I, const GradedIdeal<K>& J) {
  GradedIdeal<K> current = I;
  for (;;) {
    GradedIdeal<K> next = minimal_generators(quotient(current, J));
    if (ideal_contains(GroebnerBasis<K>::of(current), next)) return current;
    current = std::move(next);
  }
}

template <class K>
GradedIdeal<K> saturate(const GradedIdeal<K>& I) {
  return saturate(I, irrelevant_ideal<K>(I.nvars, I.field));
}

/// Whether S/I has finite length: every variable has a pure power among
/// the leading monomials.
template <class K>
bool is_finite_length(const GroebnerBasis<K>& gb) {
  auto lm = gb.leading_monomials(0);
  for (std::size_t v = 0; v < gb.nvars(); ++v) {
    bool found = std::any_of(lm.begin(), lm.end(), [&](const Monomial& m) { return m.deg == m.exp[v]; });
    if (!found) return false;
  }
  return true;
}

/// Degree of the projective scheme V(I) in P^{n-1}: 0 when empty, the
/// constant Hilbert polynomial for a zero-dimensional scheme.
template <class K>
long long projective_degree(const GradedIdeal<K>& I) {
  auto hs = hilbert_series(I);
  int dim = hs.krull_dimension();
  if (dim <= 0) return 0;
  if (dim > 1) throw std::domain_error("projective scheme has positive dimension");
  return hs.multiplicity();
}

}  // namespace logvec
