#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groebner/groebner.hpp"
#include "polycore/errors.hpp"
#include "singcurve/singcurve.hpp"

namespace logvec {

/// D_0(V(F)): relations among the partials of F, as a submodule of S^3
/// with zero shifts. D(V(F)) = d0 + S*E for the Euler field E.
template <class K>
struct LogDerivationModule {
  Poly<K> F;
  GradedSubmodule<K> d0;
  std::vector<int> degrees;  // minimal generator degrees, sorted
};

/// theta(F) = sum theta_i * dF/dx_i.
template <class K>
Poly<K> apply_derivation(const Vec<K>& theta, const Poly<K>& F) {
  Poly<K> r(F.nvars(), F.field());
  for (std::size_t i = 0; i < theta.size(); ++i) r += theta[i] * differentiate(F, i);
  return r;
}

template <class K>
LogDerivationModule<K> d0_module(const Poly<K>& F) {
  auto g = grading(F);
  if (g.is_zero || !g.is_homogeneous || g.degree < 1)
    throw HypothesisError("homogeneous", "D0 needs a nonconstant form");
  if constexpr (std::is_same_v<K, Rational>) {
    if (!is_reduced(F)) throw HypothesisError("reduced", "the form has a repeated factor");
  }
  Vec<K> partials;
  for (std::size_t i = 0; i < F.nvars(); ++i) partials.push_back(differentiate(F, i));
  auto syz = syzygies(partials);
  auto mins = minimal_generators(syz);
  LogDerivationModule<K> out{F, GradedSubmodule<K>{F.nvars(), F.field(), std::vector<int>(F.nvars(), 0), {}}, {}};
  for (auto& theta : mins.gens) {
    if (!apply_derivation(theta, F).is_zero()) throw InconsistencyError("syzygy does not annihilate the Jacobian");
    out.d0.gens.push_back(std::move(theta));
  }
  out.degrees = out.d0.degrees();
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

/// Determinant of a 3x3 matrix of polynomials, rows given.
template <class K>
Poly<K> determinant3(const Vec<K>& a, const Vec<K>& b, const Vec<K>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

template <class K>
struct FreenessCertificate {
  bool is_free = false;
  std::vector<int> exponents;          // {1, e1, e2} when free
  std::optional<K> saito_constant;     // det[E; theta1; theta2] = c * F
  std::vector<std::size_t> betti;      // ranks in the resolution of d0
  std::size_t generator_count = 0;
};

/// Free iff d0 has two minimal generators; then the Saito determinant is
/// checked to be a nonzero constant multiple of F.
template <class K>
FreenessCertificate<K> freeness(const LogDerivationModule<K>& D) {
  FreenessCertificate<K> cert;
  cert.generator_count = D.d0.gens.size();
  const std::size_t n = D.F.nvars();
  if (n == 3 && D.d0.gens.size() == 2) {
    Vec<K> euler;
    for (std::size_t i = 0; i < n; ++i) euler.push_back(Poly<K>::variable(n, i, D.F.field()));
    Poly<K> det = determinant3(euler, D.d0.gens[0], D.d0.gens[1]);
    if (det.is_zero()) throw InconsistencyError("Saito determinant vanishes for a two-generated D0");
    K c = det.leading().coef / D.F.leading().coef;
    if (!(det == c * D.F)) throw InconsistencyError("Saito determinant is not a constant multiple of F");
    cert.is_free = true;
    cert.saito_constant = c;
    cert.exponents = {1, D.degrees[0], D.degrees[1]};
    if (1 + D.degrees[0] + D.degrees[1] != D.F.total_degree())
      throw InconsistencyError("exponents do not add up to deg F");
    cert.betti = {2};
  } else {
    cert.betti = free_resolution(D.d0).betti_numbers();
  }
  return cert;
}

template <class K>
FreenessCertificate<K> freeness(const Poly<K>& F) {
  return freeness(d0_module(F));
}

/// Hilbert data of the cokernel of 0 -> D0(A)(-n) -> D0(A u C).
struct CokernelData {
  int t_min = 0;
  std::vector<long long> hilbert_function;  // values at t_min, t_min + 1, ...
  LaurentPoly numerator;                    // over (1 - t)^3
  int n = 0;
  int genus = 0;
  long long k = 0;
  long long hp_slope = 0;     // n
  long long hp_constant = 0;  // 3(1 - g) - n - k

  HilbertSeries series() const { return HilbertSeries(numerator, 3); }
  long long hf(int t) const { return series().value(t); }
  long long hp(int t) const { return hp_slope * t + hp_constant; }
};

/// Cokernel data from the Hilbert series of both D0 modules.
CokernelData cokernel_from_series(const HilbertSeries& d0_arrangement, const HilbertSeries& d0_union, int n,
                                  long long k, int t_min = 0, int t_max = -1);

/// Named pass/fail item of an identity report.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Degree and Hilbert-polynomial identities for the cokernel, and the
/// agreement windows HF = 0 below n - 2 + k/n and HF = HP above 2n - 4 + k/n.
std::vector<Check> theorem_main_check(const CokernelData& coker);

/// deg D = 3n - n^2 - k and its genus form 2 - 2g - k.
struct DegreeIdentity {
  long long via_degree = 0;
  long long via_genus = 0;
  bool pass = false;
};
DegreeIdentity degree_identity(int n, long long k);

struct AdditionPrediction {
  bool is_free = false;
  std::vector<int> d0_degrees;  // {c, d} when free
  LaurentPoly numerator;        // t^(a+n) + t^(b+n) + coker numerator
};

/// Two-of-three prediction: D0(A) free with degrees {a, b} plus the
/// cokernel numerator give the numerator of D0(A u C); it is free iff
/// that numerator is t^c + t^d.
AdditionPrediction predict_addition(const std::vector<int>& a_degrees, int n, const LaurentPoly& coker_numerator);

struct RegularityData {
  int reg_union = 0;
  int reg_arrangement = 0;
  Rational bound;  // max{reg_arrangement + n, 2n - 4 + k/n}
  bool pass = false;
};

RegularityData regularity_bound_check(int reg_arrangement, int reg_union, int n, long long k);

template <class K>
int regularity(const GradedSubmodule<K>& M) {
  return free_resolution(M).regularity();
}

/// Basis of the degree-d part of a homogeneous ideal, by normal forms of
/// all degree-d monomials.
template <class K>
std::vector<Poly<K>> curves_through(const GradedIdeal<K>& P, int d) {
  auto gb = GroebnerBasis<K>::of(P);
  auto monos = monomials_of_degree(d);
  std::map<Monomial, std::size_t, GrevlexGreater> rows;
  std::vector<Poly<K>> nfs;
  for (const auto& m : monos) {
    nfs.push_back(gb.reduce(Poly<K>::monomial(P.nvars, m, P.field.one(), P.field)));
    for (const auto& t : nfs.back().terms()) rows.emplace(t.mono, rows.size());
  }
  Matrix<K> mat(rows.size(), monos.size(), P.field);
  for (std::size_t j = 0; j < monos.size(); ++j)
    for (const auto& t : nfs[j].terms()) mat(rows.at(t.mono), j) = t.coef;
  std::vector<Poly<K>> out;
  for (const auto& v : mat.kernel()) {
    std::vector<Term<K>> terms;
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (!logvec::is_zero(v[j])) terms.push_back({monos[j], v[j]});
    out.push_back(Poly<K>::from_terms(P.nvars, std::move(terms), P.field));
  }
  return out;
}

struct SmoothMemberOptions {
  std::uint64_t seed = 1;
  unsigned retries = 16;
  long range = 5;  // coefficients in [-range, range], widened on retry
  ChartOptions chart{};
};

template <class K>
struct SmoothMember {
  Poly<K> curve;
  std::vector<long> coefficients;
  unsigned attempt = 0;
  SingularityProfile union_profile;
  std::vector<std::string> rejected;  // reasons for earlier draws
};

/// First seeded combination of the basis that is smooth, shares no
/// component with Q, and keeps every singularity of Q*C quasihomogeneous.
template <class K>
SmoothMember<K> find_smooth_member(const std::vector<Poly<K>>& basis, const Poly<K>& Q,
                                   const SmoothMemberOptions& opts = {}) {
  if (basis.empty()) throw HypothesisError("nonempty_linear_system", "empty linear system");
  SeededDraws draws(opts.seed);
  SmoothMember<K> out;
  for (unsigned attempt = 0; attempt < opts.retries; ++attempt) {
    long range = opts.range * (1 + static_cast<long>(attempt) / 4);
    std::vector<long> coeffs;
    Poly<K> C(Q.nvars(), Q.field());
    for (const auto& b : basis) {
      coeffs.push_back(basis.size() == 1 ? 1 : draws.uniform(-range, range));
      C += Q.field().from_int(coeffs.back()) * b;
    }
    auto reject = [&](const std::string& why) { out.rejected.push_back("draw " + std::to_string(attempt) + ": " + why); };
    if (C.is_zero()) {
      reject("zero combination");
      continue;
    }
    if (!is_smooth(C)) {
      reject("singular member");
      continue;
    }
    try {
      require_no_common_component(C, Q);
    } catch (const HypothesisError&) {
      reject("shares a component with the arrangement");
      continue;
    }
    auto profile = singularity_profile(C * Q, opts.chart);
    if (!profile.quasihomogeneous_all) {
      reject("union has a non-quasihomogeneous singularity");
      continue;
    }
    out.curve = C;
    out.coefficients = coeffs;
    out.attempt = attempt;
    out.union_profile = profile;
    return out;
  }
  std::string last = out.rejected.empty() ? "none" : out.rejected.back();
  throw RetryExhaustedError("no certified member after " + std::to_string(opts.retries) + " draws (last: " + last + ")");
}

}  // namespace logvec
