#include <doctest.h>

#include "logtangent/logtangent.hpp"
#include "polycore/parser.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace logvec;
using logvec::testing::Gen;
namespace oracle = logvec::testing;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

Polynomial product(const std::vector<Polynomial>& fs) {
  Polynomial p = Polynomial::constant(3, 1L);
  for (const auto& f : fs) p *= f;
  return p;
}

long long binom2(long long a) { return a < 2 ? 0 : a * (a - 1) / 2; }

/// dim D0_t = 3 dim S_t - dim J_{t + d - 1}, from 0 -> D0 -> S^3 -> J(d - 1) -> 0.
long long d0_dimension_oracle(const Polynomial& F, int t) {
  int d = F.total_degree();
  std::vector<Polynomial> J{differentiate(F, 0), differentiate(F, 1), differentiate(F, 2)};
  J.erase(std::remove_if(J.begin(), J.end(), [](const Polynomial& p) { return p.is_zero(); }), J.end());
  long long s_t = binom2(t + 2), s_big = binom2(t + d + 1);
  return 3 * s_t - (s_big - oracle::hilbert_function_by_rank(J, t + d - 1));
}

CokernelData cokernel_of(const Polynomial& A, const Polynomial& C, long long k) {
  auto DA = d0_module(A), DU = d0_module(A * C);
  return cokernel_from_series(hilbert_series(DA.d0), hilbert_series(DU.d0), C.total_degree(), k);
}

}  // namespace

TEST_CASE("D0 of standard arrangements") {
  CHECK(d0_module(P("x*y*z*(x-y)*(x-z)*(y-z)")).degrees == std::vector<int>{2, 3});
  CHECK(d0_module(P("x*y*z*(x^2-y^2)*(x^2-z^2)*(y^2-z^2)")).degrees == std::vector<int>{3, 5});
  CHECK(d0_module(P("x*y*z")).degrees == std::vector<int>{1, 1});
  CHECK(d0_module(P("x*y")).degrees == std::vector<int>{0, 1});
  auto conic = d0_module(P("x^2 + y^2 - z^2"));
  CHECK(conic.degrees == std::vector<int>{1, 1, 1});
  CHECK_FALSE(freeness(conic).is_free);
}

TEST_CASE("freeness certificates") {
  auto A3 = freeness(P("x*y*z*(x-y)*(x-z)*(y-z)"));
  CHECK(A3.is_free);
  CHECK(A3.exponents == std::vector<int>{1, 2, 3});
  REQUIRE(A3.saito_constant.has_value());
  CHECK(*A3.saito_constant != 0);

  auto generic = freeness(P("x*y*z*(x + y + z)"));
  CHECK_FALSE(generic.is_free);
  CHECK(generic.generator_count == 3);
  CHECK(generic.betti == std::vector<std::size_t>{3, 1});
}

TEST_CASE("D0 generators annihilate F and Saito's criterion holds") {
  Gen g(41);
  const auto E = Vec<Rational>{P("x"), P("y"), P("z")};
  for (int i = 0; i < 25; ++i) {
    auto F = product(g.arrangement(4));
    auto D = d0_module(F);
    for (const auto& theta : D.d0.gens) CHECK(apply_derivation(theta, F).is_zero());
    auto cert = freeness(D);
    if (D.d0.gens.size() == 2) {
      REQUIRE(cert.is_free);
      auto det = determinant3(E, D.d0.gens[0], D.d0.gens[1]);
      CHECK(det == Polynomial::constant(3, *cert.saito_constant) * F);
      CHECK(1 + D.degrees[0] + D.degrees[1] == F.total_degree());
    } else {
      CHECK_FALSE(cert.is_free);
      CHECK(cert.betti.size() == 2);
    }
    auto hs = hilbert_series(D.d0);
    for (int t = 0; t <= 6; ++t) CHECK(hs.value(t) == d0_dimension_oracle(F, t));
  }
}

TEST_CASE("D0 hypotheses") {
  CHECK_THROWS_AS(d0_module(P("x^2*y")), HypothesisError);
  CHECK_THROWS_AS(d0_module(P("x + 1")), HypothesisError);
  CHECK_THROWS_AS(d0_module(Polynomial::constant(3, 4L)), HypothesisError);
}

TEST_CASE("D0 over Z/p") {
  Field<ModP> f{32003};
  auto D = d0_module(map_to_field(P("x*y*z*(x-y)*(x-z)*(y-z)"), f));
  CHECK(D.degrees == std::vector<int>{2, 3});
  CHECK(freeness(D).is_free);
}

TEST_CASE("adding a line to a line") {
  auto c = cokernel_of(P("x"), P("y"), 1);
  for (int t = 0; t <= 6; ++t) CHECK(c.hf(t) == t + 1);
  for (const auto& check : theorem_main_check(c)) CHECK_MESSAGE(check.pass, check.name << ": " << check.detail);
  auto pred = predict_addition(d0_module(P("x")).degrees, 1, c.numerator);
  CHECK(pred.is_free);
  CHECK(pred.d0_degrees == std::vector<int>{0, 1});
  CHECK(pred.d0_degrees == d0_module(P("x*y")).degrees);
}

TEST_CASE("closing a triangle") {
  auto c = cokernel_of(P("x*y"), P("z"), 2);
  for (int t = 0; t <= 6; ++t) CHECK(c.hf(t) == t);
  for (const auto& check : theorem_main_check(c)) CHECK_MESSAGE(check.pass, check.name << ": " << check.detail);
  auto pred = predict_addition({0, 1}, 1, c.numerator);
  CHECK(pred.is_free);
  CHECK(pred.d0_degrees == std::vector<int>{1, 1});
}

TEST_CASE("a wrong intersection count fails the Hilbert polynomial check") {
  auto c = cokernel_of(P("x*y"), P("z"), 3);
  bool constant_ok = true;
  for (const auto& check : theorem_main_check(c))
    if (check.name == "hilbert_polynomial_constant") constant_ok = check.pass;
  CHECK_FALSE(constant_ok);
}

TEST_CASE("prediction rejects impossible numerators") {
  LaurentPoly bad;
  bad.add(0, -5);
  CHECK_THROWS_AS(predict_addition({0, 0}, 1, bad), std::invalid_argument);
}

TEST_CASE("degree identity") {
  CHECK(degree_identity(1, 1).via_degree == 1);
  CHECK(degree_identity(3, 7).via_degree == -7);
  CHECK(degree_identity(4, 13).via_degree == -17);
  for (int n = 1; n <= 12; ++n)
    for (long long k = 0; k <= 40; k += 7) CHECK(degree_identity(n, k).pass);
}

TEST_CASE("regularity bound") {
  auto r = regularity_bound_check(3, 4, 3, 7);
  CHECK(r.bound == 6);
  CHECK(r.pass);
  CHECK_FALSE(regularity_bound_check(3, 7, 3, 7).pass);
  auto frac = regularity_bound_check(0, 3, 2, 5);
  CHECK(frac.bound == Rational(5, 2));
  CHECK_FALSE(frac.pass);
  CHECK(regularity(d0_module(P("x*y*z*(x-y)*(x-z)*(y-z)")).d0) == 3);
}

TEST_CASE("curves through singular points") {
  auto s = CurveSingularities<Rational>::compute(P("x*y*z*(x-y)*(x-z)*(y-z)"), {});
  auto P7 = s.points_ideal();
  auto via_ideal = curves_through(P7, 3);
  auto via_chart = s.forms_through_points(3);
  REQUIRE(via_ideal.size() == 3);
  REQUIRE(via_chart.size() == 3);
  auto monos = monomials_of_degree(3);
  Matrix<Rational> m(6, monos.size());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      m(i, j) = via_ideal[i].coefficient(monos[j]);
      m(i + 3, j) = via_chart[i].coefficient(monos[j]);
    }
  CHECK(m.rank() == 3);
  CHECK(curves_through(P7, 2).empty());
}

TEST_CASE("smooth member of a linear system") {
  auto Q = P("x*y*z*(x-y)*(x-z)*(y-z)");
  auto s = CurveSingularities<Rational>::compute(Q, {});
  auto basis = s.forms_through_points(3);
  auto member = find_smooth_member(basis, Q, {});
  CHECK(is_smooth(member.curve));
  CHECK(member.coefficients.size() == 3);
  CHECK(member.union_profile.quasihomogeneous_all);
  std::vector<std::vector<Rational>> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  for (const auto& p : pts) CHECK(member.curve.evaluate(p) == 0);
  CHECK_THROWS_AS(find_smooth_member(std::vector<Polynomial>{}, Q, {}), HypothesisError);
  // Only singular members: the pencil of line pairs through a point.
  SmoothMemberOptions few;
  few.retries = 3;
  CHECK_THROWS_AS(find_smooth_member(std::vector<Polynomial>{P("x^2"), P("x*y"), P("y^2")}, P("z"), few),
                  RetryExhaustedError);
}
