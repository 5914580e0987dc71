#include "logtangent/logtangent.hpp"

#include <sstream>

namespace logvec {

CokernelData cokernel_from_series(const HilbertSeries& d0_arrangement, const HilbertSeries& d0_union, int n,
                                  long long k, int t_min, int t_max) {
  if (d0_arrangement.vars() != 3 || d0_union.vars() != 3)
    throw std::invalid_argument("D0 series must live over three variables");
  if (n < 1) throw std::invalid_argument("curve degree must be positive");
  CokernelData c;
  c.n = n;
  c.genus = genus_smooth(n);
  c.k = k;
  c.numerator = d0_union.numerator() - d0_arrangement.numerator().shifted(n);
  c.hp_slope = n;
  c.hp_constant = 3LL * (1 - c.genus) - n - k;
  c.t_min = t_min;
  if (t_max < t_min) t_max = std::max(t_min, 2 * n + static_cast<int>(k / n) + 2);
  auto s = c.series();
  for (int t = t_min; t <= t_max; ++t) c.hilbert_function.push_back(s.value(t));
  return c;
}

namespace {

std::string str(long long v) { return std::to_string(v); }

}  // namespace

DegreeIdentity degree_identity(int n, long long k) {
  DegreeIdentity d;
  d.via_degree = 3LL * n - static_cast<long long>(n) * n - k;
  d.via_genus = 2 - 2LL * genus_smooth(n) - k;
  d.pass = d.via_degree == d.via_genus;
  return d;
}

std::vector<Check> theorem_main_check(const CokernelData& c) {
  std::vector<Check> out;
  auto s = c.series();
  auto hp = s.hilbert_polynomial();
  Rational slope = hp.size() > 1 ? hp[1] : Rational(0);
  Rational constant = hp.empty() ? Rational(0) : hp[0];
  bool linear = hp.size() <= 2;

  out.push_back({"hilbert_polynomial_slope", linear && slope == Rational(static_cast<long>(c.hp_slope)),
                 "computed " + slope.get_str() + ", expected " + str(c.hp_slope)});
  out.push_back({"hilbert_polynomial_constant", linear && constant == Rational(static_cast<long>(c.hp_constant)),
                 "computed " + constant.get_str() + ", expected " + str(c.hp_constant)});

  auto deg = degree_identity(c.n, c.k);
  out.push_back({"degree_identity", deg.pass, "3n - n^2 - k = " + str(deg.via_degree) + ", 2 - 2g - k = " + str(deg.via_genus)});

  // Windows in exact arithmetic: t < n - 2 + k/n  <=>  n t < n(n - 2) + k.
  const long long n = c.n;
  long long first = c.t_min;
  long long last = c.t_min + static_cast<long long>(c.hilbert_function.size()) - 1;
  bool nonneg = true, low = true, high = true;
  std::ostringstream low_detail, high_detail;
  for (long long t = first; t <= last; ++t) {
    long long v = c.hilbert_function[static_cast<std::size_t>(t - first)];
    if (v < 0) nonneg = false;
    if (n * t < n * (n - 2) + c.k && v != 0) {
      low = false;
      low_detail << " HF(" << t << ") = " << v;
    }
    if (n * t > n * (2 * n - 4) + c.k && v != c.hp(static_cast<int>(t))) {
      high = false;
      high_detail << " HF(" << t << ") = " << v << " vs HP = " << c.hp(static_cast<int>(t));
    }
  }
  out.push_back({"hilbert_function_nonnegative", nonneg, "t in [" + str(first) + ", " + str(last) + "]"});
  out.push_back({"vanishing_below_window", low,
                 low ? "HF(t) = 0 for n t < n(n - 2) + k" : "nonzero values:" + low_detail.str()});
  out.push_back({"polynomial_above_window", high,
                 high ? "HF(t) = HP(t) for n t > n(2n - 4) + k" : "mismatch:" + high_detail.str()});
  return out;
}

AdditionPrediction predict_addition(const std::vector<int>& a_degrees, int n, const LaurentPoly& coker_numerator) {
  if (a_degrees.size() != 2) throw std::invalid_argument("prediction needs D0(A) free with two degrees");
  HilbertSeries coker(coker_numerator, 3);
  int horizon = coker_numerator.is_zero() ? 0 : coker_numerator.max_exponent() + 3;
  for (int t = 0; t <= horizon; ++t)
    if (coker.value(t) < 0) throw std::invalid_argument("cokernel numerator gives a negative Hilbert function");

  AdditionPrediction p;
  p.numerator = LaurentPoly::monomial(a_degrees[0] + n) + LaurentPoly::monomial(a_degrees[1] + n) + coker_numerator;
  long long total = 0;
  bool nonneg = true;
  for (auto [e, c] : p.numerator.coeffs()) {
    total += c;
    if (c < 0) nonneg = false;
  }
  if (nonneg && total == 2) {
    p.is_free = true;
    for (auto [e, c] : p.numerator.coeffs())
      for (long long i = 0; i < c; ++i) p.d0_degrees.push_back(e);
  }
  return p;
}

RegularityData regularity_bound_check(int reg_arrangement, int reg_union, int n, long long k) {
  RegularityData r;
  r.reg_arrangement = reg_arrangement;
  r.reg_union = reg_union;
  Rational a(reg_arrangement + n);
  Rational b = Rational(2L * n - 4) + Rational(static_cast<long>(k), static_cast<long>(n));
  b.canonicalize();
  r.bound = a > b ? a : b;
  r.pass = Rational(reg_union) <= r.bound;
  return r;
}

}  // namespace logvec
