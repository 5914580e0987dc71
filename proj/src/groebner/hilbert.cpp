#include "groebner/hilbert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace logvec {

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : coeffs_) {
    long long mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

long long HilbertSeries::value(int t) const {
  long long s = 0;
  for (auto [e, c] : num_.coeffs()) {
    if (t < e) continue;
    if (vars_ == 0)
      s += t == e ? c : 0;
    else
      s += c * binomial(t - e + static_cast<long long>(vars_) - 1, static_cast<long long>(vars_) - 1);
  }
  return s;
}

std::vector<Rational> HilbertSeries::hilbert_polynomial() const {
  std::vector<Rational> poly;
  if (vars_ == 0) return poly;
  std::size_t deg = vars_ - 1;
  poly.assign(deg + 1, Rational(0));
  Rational fact = 1;
  for (std::size_t i = 2; i <= deg; ++i) fact *= static_cast<long>(i);
  for (auto [e, c] : num_.coeffs()) {
    // binomial(t - e + deg, deg) = prod_{j=1..deg} (t - e + j) / deg!
    std::vector<Rational> term{Rational(1)};
    for (std::size_t j = 1; j <= deg; ++j) {
      Rational a = Rational(static_cast<long>(j) - e);
      std::vector<Rational> next(term.size() + 1, Rational(0));
      for (std::size_t k = 0; k < term.size(); ++k) {
        next[k] += term[k] * a;
        next[k + 1] += term[k];
      }
      term = std::move(next);
    }
    for (std::size_t k = 0; k < term.size(); ++k) poly[k] += Rational(static_cast<long>(c)) * term[k] / fact;
  }
  while (!poly.empty() && sgn(poly.back()) == 0) poly.pop_back();
  return poly;
}

Rational HilbertSeries::hilbert_polynomial_at(int t) const {
  auto hp = hilbert_polynomial();
  Rational v = 0;
  for (std::size_t k = hp.size(); k-- > 0;) v = v * t + hp[k];
  return v;
}

int HilbertSeries::regularity_index() const {
  if (num_.is_zero()) return 0;
  int hi = num_.max_exponent();
  int lo = num_.min_exponent() - static_cast<int>(vars_) - 1;
  for (int t = hi; t >= lo; --t)
    if (Rational(static_cast<long>(value(t))) != hilbert_polynomial_at(t)) return t + 1;
  return lo;
}

LaurentPoly HilbertSeries::reduced_numerator(std::size_t k) const {
  LaurentPoly p = num_;
  for (std::size_t r = 0; r < k; ++r) {
    if (p.is_zero()) return p;
    if (p.evaluate_at_one() != 0) throw std::domain_error("(1-t) does not divide the numerator");
    LaurentPoly q;
    long long run = 0;
    for (int e = p.min_exponent(); e < p.max_exponent(); ++e) {
      run += p.coefficient(e);
      q.add(e, run);
    }
    p = q;
  }
  return p;
}

int HilbertSeries::krull_dimension() const {
  if (num_.is_zero()) return -1;
  std::size_t order = 0;
  LaurentPoly p = num_;
  while (order < vars_ && p.evaluate_at_one() == 0) {
    p = HilbertSeries(p, 1).reduced_numerator(1);
    ++order;
  }
  return static_cast<int>(vars_ - order);
}

long long HilbertSeries::multiplicity() const {
  int d = krull_dimension();
  if (d < 0) return 0;
  return reduced_numerator(vars_ - static_cast<std::size_t>(d)).evaluate_at_one();
}

std::string HilbertSeries::to_string() const {
  return "(" + num_.to_string() + ")/(1-t)^" + std::to_string(vars_);
}

namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.deg != b.deg ? a.deg < b.deg : lex_cmp(a, b) > 0;
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

LaurentPoly numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  minimalize(gens);
  if (gens.empty()) return LaurentPoly::monomial(0);
  if (gens.front().deg == 0) return {};
  // find a non-coprime pair
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (coprime(gens[a], gens[b])) continue;
      std::size_t var = 0;
      while (gens[a].exp[var] == 0 || gens[b].exp[var] == 0) ++var;
      unsigned e = std::min(gens[a].exp[var], gens[b].exp[var]);
      Monomial pivot = Monomial::variable(var, e);
      std::vector<Monomial> with = gens;
      with.push_back(pivot);
      std::vector<Monomial> colon;
      colon.reserve(gens.size());
      for (const auto& m : gens) {
        Monomial q = m;
        unsigned drop = std::min<unsigned>(q.exp[var], e);
        q.exp[var] = static_cast<std::uint16_t>(q.exp[var] - drop);
        q.deg -= drop;
        colon.push_back(q);
      }
      return numerator_rec(std::move(with), nvars) +
             numerator_rec(std::move(colon), nvars).shifted(static_cast<int>(e));
    }
  // pairwise coprime: a regular sequence
  LaurentPoly r = LaurentPoly::monomial(0);
  for (const auto& m : gens) r = r * (LaurentPoly::monomial(0) - LaurentPoly::monomial(static_cast<int>(m.deg)));
  return r;
}

}  // namespace

LaurentPoly monomial_ideal_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  return numerator_rec(std::move(gens), nvars);
}

}  // namespace logvec
