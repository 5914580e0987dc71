#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "groebner/groebner.hpp"
#include "polycore/errors.hpp"
#include "polycore/linalg.hpp"
#include "polycore/polynomial.hpp"
#include "polycore/univariate.hpp"

namespace logvec {

/// Integer draws from mt19937_64 without the std distributions, whose
/// output differs between standard libraries.
class SeededDraws {
public:
  explicit SeededDraws(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::mt19937_64 gen_;
};

/// Reduced plane curve given as a product of components in x, y, z.
struct Arrangement {
  std::vector<Polynomial> components;
  Polynomial product;
  int degree = 0;

  /// Validates homogeneity and reducedness of the product; throws
  /// HypothesisError naming the failed check.
  static Arrangement from_components(std::vector<Polynomial> components);
  Arrangement with_curve(const Polynomial& curve) const;
};

/// Squarefree restriction of Q to one of several seeded random lines. A
/// squarefree restriction proves Q reduced.
bool is_reduced(const Polynomial& Q, std::uint64_t seed = 0, int tries = 12);

/// Restriction of a ternary form to the line through p in direction d.
UPoly<Rational> restrict_to_line(const Polynomial& Q, const std::vector<long>& p, const std::vector<long>& d);

/// Arithmetic genus of a smooth plane curve of degree n.
int genus_smooth(int n);

template <class K>
GradedIdeal<K> jacobian_ideal(const Poly<K>& F) {
  GradedIdeal<K> J{F.nvars(), F.field(), {}};
  for (std::size_t i = 0; i < F.nvars(); ++i) {
    auto d = differentiate(F, i);
    if (!d.is_zero()) J.gens.push_back(std::move(d));
  }
  return J;
}

/// A form is smooth when S/J_F has finite length, that is when its
/// saturated Jacobian ideal is the unit ideal.
template <class K>
bool is_smooth(const Poly<K>& F) {
  if (!is_homogeneous(F) || F.is_zero()) throw HypothesisError("homogeneous", "smoothness needs a nonzero form");
  auto J = jacobian_ideal(F);
  if (J.gens.empty()) return false;
  return is_finite_length(GroebnerBasis<K>::of(J));
}

template <class K>
Matrix<K> to_field(const Matrix<Rational>& m, Field<K> field) {
  Matrix<K> out(m.rows(), m.cols(), field);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field.from_rational(m(i, j));
  return out;
}

/// The restriction of a ternary form to the line z = 0, as a binary form.
template <class K>
Poly<K> at_infinity(const Poly<K>& P) {
  std::vector<Term<K>> kept;
  for (const auto& t : P.terms())
    if (t.mono.exp[2] == 0) kept.push_back(t);
  return Poly<K>::from_terms(2, std::move(kept), P.field());
}

/// Whether binary forms have no common zero on P^1.
template <class K>
bool no_common_zero(const std::vector<Poly<K>>& forms) {
  GradedIdeal<K> I{2, forms.empty() ? Field<K>{} : forms.front().field(), {}};
  for (const auto& f : forms)
    if (!f.is_zero()) I.gens.push_back(f);
  if (I.gens.empty()) return false;
  return is_finite_length(GroebnerBasis<K>::of(I));
}

struct ChartOptions {
  std::uint64_t seed = 1;
  unsigned retries = 32;
};

/// Affine chart z = 1 after the shear z -> a x + b y + z.
template <class K>
struct ChartData {
  Matrix<Rational> change;  // x_i -> sum_j change(i, j) x_j
  Poly<K> transformed;
  Poly<K> q;
  std::uint64_t seed = 0;
  unsigned attempt = 0;

  Poly<K> to_chart(const Poly<K>& P) const {
    return dehomogenize(apply_linear_change(P, to_field(change, P.field())), 2);
  }
  /// Maps a form in chart coordinates back to the original ones.
  Poly<K> from_chart(const Poly<K>& P) const {
    return apply_linear_change(P, to_field(*change.inverse(), P.field()));
  }
};

/// Seeded random shear such that the singular points of Q, and its
/// intersections with each of `others`, avoid the line z = 0. Every draw
/// is certified exactly; `accept` may impose a further condition.
template <class K>
ChartData<K> generic_chart(const Poly<K>& Q, const ChartOptions& opts, const std::vector<Poly<K>>& others = {},
                           const std::function<bool(const ChartData<K>&)>& accept = {}) {
  SeededDraws draws(opts.seed);
  for (unsigned attempt = 0; attempt < opts.retries; ++attempt) {
    long range = 2 + static_cast<long>(attempt);
    Matrix<Rational> m = Matrix<Rational>::identity(3);
    m(2, 0) = draws.uniform(-range, range);
    m(2, 1) = draws.uniform(-range, range);
    ChartData<K> chart{m, apply_linear_change(Q, to_field(m, Q.field())), {}, opts.seed, attempt};
    std::vector<Poly<K>> sing;
    for (std::size_t i = 0; i < 3; ++i) sing.push_back(at_infinity(differentiate(chart.transformed, i)));
    if (!no_common_zero(sing)) continue;
    bool ok = true;
    for (const auto& C : others) {
      auto Ct = apply_linear_change(C, to_field(m, Q.field()));
      if (!no_common_zero(std::vector<Poly<K>>{at_infinity(Ct), at_infinity(chart.transformed)})) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chart.q = dehomogenize(chart.transformed, 2);
    if (accept && !accept(chart)) continue;
    return chart;
  }
  throw RetryExhaustedError("no certified chart after " + std::to_string(opts.retries) + " draws");
}

/// K[x_1..x_n]/I for a zero-dimensional ideal, with the standard monomials
/// of a Groebner basis as vector space basis.
template <class K>
class QuotientAlgebra {
public:
  explicit QuotientAlgebra(GroebnerBasis<K> gb) : gb_(std::move(gb)) {
    if (!gb_.is_unit_ideal() && !is_finite_length(gb_))
      throw std::domain_error("quotient algebra is not finite-dimensional");
    auto lead = gb_.leading_monomials(0);
    auto standard = [&](const Monomial& m) {
      for (const auto& l : lead)
        if (l.divides(m)) return false;
      return true;
    };
    std::set<Monomial, GrevlexGreater> seen;
    std::vector<Monomial> frontier{Monomial{}};
    while (!frontier.empty()) {
      Monomial m = frontier.back();
      frontier.pop_back();
      if (!seen.insert(m).second || !standard(m)) continue;
      basis_.push_back(m);
      for (std::size_t v = 0; v < gb_.nvars(); ++v) frontier.push_back(m * Monomial::variable(v));
    }
    std::sort(basis_.begin(), basis_.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) < 0; });
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const GroebnerBasis<K>& groebner() const { return gb_; }
  const Field<K>& field() const { return gb_.field(); }

  Vector<K> coordinates(const Poly<K>& f) const {
    Vector<K> v(dimension(), field().zero());
    Poly<K> nf = gb_.reduce(f);
    for (const auto& t : nf.terms()) v[index_.at(t.mono)] = t.coef;
    return v;
  }

  /// Matrix of multiplication by f; column j is the image of basis()[j].
  Matrix<K> multiplication_matrix(const Poly<K>& f) const {
    std::size_t n = dimension();
    Matrix<K> m(n, n, field());
    for (std::size_t j = 0; j < n; ++j) {
      auto col = coordinates(f.times_monomial(basis_[j], field().one()));
      for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
  }

  /// Monic minimal polynomial of multiplication by f. Each Krylov vector
  /// is reduced against the earlier ones before the next multiplication,
  /// carrying along the polynomial it represents.
  UPoly<K> minimal_polynomial(const Poly<K>& f) const {
    std::size_t n = dimension();
    if (n == 0) return UPoly<K>({field().one()}, field());
    Matrix<K> m = multiplication_matrix(f);
    std::vector<Vector<K>> ws;
    std::vector<std::vector<K>> ps;
    std::vector<std::size_t> pivots;
    Vector<K> w = coordinates(Poly<K>::constant(gb_.nvars(), field().one(), field()));
    std::vector<K> p{field().one()};
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t j = 0; j < ws.size(); ++j) {
        K c = w[pivots[j]];
        if (logvec::is_zero(c)) continue;
        for (std::size_t i = 0; i < n; ++i)
          if (!logvec::is_zero(ws[j][i])) w[i] -= c * ws[j][i];
        for (std::size_t i = 0; i < ps[j].size(); ++i) p[i] -= c * ps[j][i];
      }
      std::size_t piv = 0;
      while (piv < n && logvec::is_zero(w[piv])) ++piv;
      if (piv == n) return UPoly<K>(std::move(p), field()).monic();
      K inv = field().one() / w[piv];
      for (auto& a : w) a *= inv;
      for (auto& a : p) a *= inv;
      ws.push_back(w);
      ps.push_back(p);
      pivots.push_back(piv);
      w = apply(m, w);
      p.insert(p.begin(), field().zero());
    }
    throw std::logic_error("Krylov sequence failed to close");
  }

  /// The nilradical as a subspace: images of multiplication by the
  /// squarefree parts of the minimal polynomials of the variables
  /// (Seidenberg). s(x_v) is evaluated on the unit by Horner, then moved
  /// through the staircase one variable at a time; normal forms of
  /// s(x_v) * b swell badly over Q.
  EchelonSpan<K> nilradical() const {
    std::size_t n = dimension(), nv = gb_.nvars();
    EchelonSpan<K> span(n, field());
    if (n == 0) return span;
    std::vector<Matrix<K>> mult;
    for (std::size_t v = 0; v < nv; ++v) mult.push_back(multiplication_matrix(Poly<K>::variable(nv, v, field())));
    const Vector<K> unit = coordinates(Poly<K>::constant(nv, field().one(), field()));
    for (std::size_t v = 0; v < nv; ++v) {
      auto s = minimal_polynomial(Poly<K>::variable(nv, v, field())).squarefree_part();
      const auto& c = s.coeffs();
      Vector<K> w(n, field().zero());
      for (std::size_t e = c.size(); e-- > 0;) {
        w = apply(mult[v], w);
        for (std::size_t i = 0; i < n; ++i) w[i] += c[e] * unit[i];
      }
      // basis_ is sorted by degree, so b / x_u is always seen before b
      std::vector<Vector<K>> images(n);
      for (std::size_t j = 0; j < n; ++j) {
        const Monomial& b = basis_[j];
        if (b.is_one()) {
          images[j] = w;
        } else {
          std::size_t u = 0;
          while (b.exp[u] == 0) ++u;
          images[j] = apply(mult[u], images[index_.at(Monomial::variable(u).quotient_of(b))]);
        }
        span.insert(images[j]);
      }
    }
    return span;
  }

  /// Number of distinct points of the underlying scheme.
  std::size_t reduced_dimension() const { return dimension() - nilradical().dim(); }

  /// Dimension of the summand of the algebra on which f is invertible,
  /// that is the stable rank of multiplication by f.
  std::size_t invertible_part_dimension(const Poly<K>& f) const { return stable_rank(multiplication_matrix(f)); }

  /// Upper bound for dimension_on(f) from the stable rank of the reduction
  /// of the multiplication matrix modulo `prime`. Minors that survive
  /// modulo p are nonzero over Q, so ranks can only drop. nullopt when a
  /// denominator vanishes modulo p.
  std::optional<std::size_t> dimension_on_upper_bound(const Poly<K>& f, std::uint32_t prime) const {
    if constexpr (!std::is_same_v<K, Rational>) {
      (void)prime;
      return dimension_on(f);
    } else {
      Matrix<Rational> m = multiplication_matrix(f);
      Field<ModP> fp{prime};
      Matrix<ModP> mp(m.rows(), m.cols(), fp);
      try {
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) mp(i, j) = fp.from_rational(m(i, j));
      } catch (const std::domain_error&) {
        return std::nullopt;
      }
      return dimension() - stable_rank(mp);
    }
  }

  /// Dimension of the part supported on V(f).
  std::size_t dimension_on(const Poly<K>& f) const { return dimension() - invertible_part_dimension(f); }

private:
  template <class F>
  static Vector<F> apply(const Matrix<F>& m, const Vector<F>& v) {
    Vector<F> out(m.rows(), m.field().zero());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (logvec::is_zero(v[j])) continue;
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (!logvec::is_zero(m(i, j))) out[i] += m(i, j) * v[j];
    }
    return out;
  }

  /// Rank of m^k for k large: images are taken until the dimension stops dropping.
  template <class F>
  static std::size_t stable_rank(const Matrix<F>& m) {
    std::size_t n = m.rows();
    std::vector<Vector<F>> current;
    for (std::size_t i = 0; i < n; ++i) {
      Vector<F> e(n, m.field().zero());
      e[i] = m.field().one();
      current.push_back(std::move(e));
    }
    for (;;) {
      EchelonSpan<F> image(n, m.field());
      for (const auto& v : current) image.insert(apply(m, v));
      if (image.dim() == current.size()) return image.dim();
      current = image.basis();
    }
  }

  GroebnerBasis<K> gb_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, GrevlexGreater> index_;
};

/// Number of standard monomials of a zero-dimensional ideal; throws
/// std::domain_error when the quotient is infinite-dimensional.
template <class K>
std::size_t affine_quotient_dimension(const GradedIdeal<K>& I) {
  return QuotientAlgebra<K>(GroebnerBasis<K>::of(I)).dimension();
}

template <class K>
GradedIdeal<K> affine_critical_ideal(const Poly<K>& q) {
  return GradedIdeal<K>{q.nvars(), q.field(), {differentiate(q, 0), differentiate(q, 1)}};
}

template <class K>
GradedIdeal<K> affine_tjurina_ideal(const Poly<K>& q) {
  return GradedIdeal<K>{q.nvars(), q.field(), {q, differentiate(q, 0), differentiate(q, 1)}};
}

/// Sum of the Milnor numbers of the affine curve q = 0 at its singular
/// points. Critical points of q off the curve are discarded.
template <class K>
std::size_t affine_milnor_total(const Poly<K>& q) {
  QuotientAlgebra<K> A(GroebnerBasis<K>::of(affine_critical_ideal(q)));
  return A.dimension_on(q);
}

template <class K>
std::size_t affine_tjurina_total(const Poly<K>& q) {
  return affine_quotient_dimension(affine_tjurina_ideal(q));
}

struct SingularityProfile {
  long long mu_total = 0;
  long long tau_total = 0;
  bool quasihomogeneous_all = true;
  long long sing_point_count = 0;
  std::uint64_t chart_seed = 0;
  unsigned chart_attempt = 0;
};

/// All ternary monomials of degree d, in decreasing grevlex order.
inline std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) {
      int e[3] = {a, b, d - a - b};
      out.push_back(Monomial::from_exponents(e, e + 3));
    }
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

/// Degree-d forms (original coordinates) whose chart image lies in the
/// subspace N of the algebra A.
template <class K>
std::vector<Poly<K>> forms_into_subspace(const ChartData<K>& chart, const QuotientAlgebra<K>& A,
                                         const EchelonSpan<K>& N, int d, Field<K> field) {
  auto monos = monomials_of_degree(d);
  Matrix<K> m(A.dimension(), monos.size(), field);
  for (std::size_t j = 0; j < monos.size(); ++j) {
    auto v = A.coordinates(chart.to_chart(Poly<K>::monomial(3, monos[j], field.one(), field)));
    N.reduce(v);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = v[i];
  }
  std::vector<Poly<K>> out;
  for (const auto& k : m.kernel()) {
    std::vector<Term<K>> terms;
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (!logvec::is_zero(k[j])) terms.push_back({monos[j], k[j]});
    out.push_back(Poly<K>::from_terms(3, std::move(terms), field));
  }
  return out;
}

/// Prime for the modular shortcut in localized_milnor.
inline constexpr std::uint32_t kCertificationPrime = 2147483647u;

/// dim of the critical algebra supported on V(q), given tau = dim of the
/// Tjurina algebra of the same chart. Since mu >= tau, a modular upper
/// bound equal to tau settles mu = tau; otherwise the exact computation runs.
template <class K>
long long localized_milnor(const QuotientAlgebra<K>& critical, const Poly<K>& q, long long tau) {
  if constexpr (std::is_same_v<K, Rational>) {
    auto ub = critical.dimension_on_upper_bound(q, kCertificationPrime);
    if (ub && static_cast<long long>(*ub) == tau) return tau;
  }
  return static_cast<long long>(critical.dimension_on(q));
}

/// Chart-level data of a reduced projective curve: the critical algebra
/// of q, the Tjurina algebra and its nilradical.
template <class K>
struct CurveSingularities {
  ChartData<K> chart;
  std::optional<QuotientAlgebra<K>> critical;
  std::optional<QuotientAlgebra<K>> tjurina;
  std::optional<EchelonSpan<K>> nilradical;

  static CurveSingularities compute(const Poly<K>& Q, const ChartOptions& opts) {
    CurveSingularities s;
    s.chart = generic_chart<K>(Q, opts, {}, [&](const ChartData<K>& c) {
      auto gb = GroebnerBasis<K>::of(affine_critical_ideal(c.q));
      if (!gb.is_unit_ideal() && !is_finite_length(gb)) return false;
      s.critical.emplace(std::move(gb));
      return true;
    });
    s.tjurina.emplace(GroebnerBasis<K>::of(affine_tjurina_ideal(s.chart.q)));
    s.nilradical.emplace(s.tjurina->nilradical());
    return s;
  }

  long long point_count() const { return static_cast<long long>(tjurina->dimension() - nilradical->dim()); }

  SingularityProfile profile() const {
    SingularityProfile p;
    p.tau_total = static_cast<long long>(tjurina->dimension());
    p.mu_total = localized_milnor(*critical, chart.q, p.tau_total);
    p.quasihomogeneous_all = p.mu_total == p.tau_total;
    p.sing_point_count = point_count();
    p.chart_seed = chart.seed;
    p.chart_attempt = chart.attempt;
    return p;
  }

  /// Basis of the degree-d forms vanishing at every singular point.
  std::vector<Poly<K>> forms_through_points(int d) const {
    return forms_into_subspace(chart, *tjurina, *nilradical, d, chart.q.field());
  }

  /// Saturated radical ideal of the singular points, generated by its
  /// pieces of degree at most the number of points.
  GradedIdeal<K> points_ideal() const {
    GradedIdeal<K> I{3, chart.q.field(), {}};
    long long k = point_count();
    if (k == 0) {
      I.gens.push_back(Poly<K>::constant(3, chart.q.field().one(), chart.q.field()));
      return I;
    }
    for (int d = 1; d <= k; ++d)
      for (auto& f : forms_through_points(d)) I.gens.push_back(std::move(f));
    return minimal_generators(I);
  }
};

template <class K>
SingularityProfile singularity_profile(const Poly<K>& Q, const ChartOptions& opts = {}) {
  return CurveSingularities<K>::compute(Q, opts).profile();
}

template <class K>
long long milnor_total(const Poly<K>& Q, const ChartOptions& opts = {}) {
  std::optional<QuotientAlgebra<K>> critical;
  auto chart = generic_chart<K>(Q, opts, {}, [&](const ChartData<K>& c) {
    auto gb = GroebnerBasis<K>::of(affine_critical_ideal(c.q));
    if (!gb.is_unit_ideal() && !is_finite_length(gb)) return false;
    critical.emplace(std::move(gb));
    return true;
  });
  return static_cast<long long>(critical->dimension_on(chart.q));
}

template <class K>
long long tjurina_total(const Poly<K>& Q, const ChartOptions& opts = {}) {
  auto chart = generic_chart<K>(Q, opts);
  return static_cast<long long>(affine_tjurina_total(chart.q));
}

template <class K>
bool is_quasihomogeneous_everywhere(const Poly<K>& Q, const ChartOptions& opts = {}) {
  return singularity_profile(Q, opts).quasihomogeneous_all;
}

/// Throws HypothesisError when the two forms share a component.
template <class K>
void require_no_common_component(const Poly<K>& C, const Poly<K>& Q) {
  GradedIdeal<K> I{3, Q.field(), {C, Q}};
  if (hilbert_series(I).krull_dimension() >= 2)
    throw HypothesisError("no_common_component", "the curve shares a component with the arrangement");
}

struct IntersectionData {
  long long bezout_total = 0;   // with multiplicities
  long long reduced_count = 0;  // distinct points
};

template <class K>
IntersectionData intersection_data(const Poly<K>& C, const Poly<K>& Q, const ChartOptions& opts = {}) {
  require_no_common_component(C, Q);
  auto chart = generic_chart<K>(Q, opts, {C});
  GradedIdeal<K> I{2, Q.field(), {chart.to_chart(C), chart.q}};
  QuotientAlgebra<K> A(GroebnerBasis<K>::of(I));
  IntersectionData d;
  d.bezout_total = static_cast<long long>(A.dimension());
  d.reduced_count = static_cast<long long>(A.reduced_dimension());
  return d;
}

template <class K>
long long bezout_total(const Poly<K>& C, const Poly<K>& Q, const ChartOptions& opts = {}) {
  return intersection_data(C, Q, opts).bezout_total;
}

template <class K>
long long reduced_point_count(const Poly<K>& C, const Poly<K>& Q, const ChartOptions& opts = {}) {
  return intersection_data(C, Q, opts).reduced_count;
}

/// mu(A u C) - mu(A) against 2 m n - k.
struct MilnorDelta {
  long long mu_union = 0;
  long long mu_arrangement = 0;
  long long k = 0;
  long long expected = 0;
  bool pass = false;
};

inline MilnorDelta milnor_delta_from(long long mu_union, long long mu_arr, int m, int n, long long k) {
  MilnorDelta d{mu_union, mu_arr, k, 2LL * m * n - k, false};
  d.pass = mu_union - mu_arr == d.expected;
  return d;
}

template <class K>
MilnorDelta milnor_union_delta(const Poly<K>& C, const Poly<K>& Q, const ChartOptions& opts = {}) {
  long long k = reduced_point_count(C, Q, opts);
  return milnor_delta_from(milnor_total(C * Q, opts), milnor_total(Q, opts), Q.total_degree(), C.total_degree(), k);
}

}  // namespace logvec
