#include <doctest.h>

#include <cstdlib>

#include "groebner/groebner.hpp"
#include "polycore/parser.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace logvec;
using logvec::testing::Gen;
namespace oracle = logvec::testing;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<Polynomial> jacobian(const Polynomial& F) {
  return {differentiate(F, 0), differentiate(F, 1), differentiate(F, 2)};
}

/// Buchberger's criterion checked with plain division, plus reducedness.
template <class K>
void check_reduced_basis(const std::vector<Poly<K>>& input, const std::vector<Poly<K>>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j)
      CHECK(oracle::divide_remainder(oracle::s_polynomial(gb[i], gb[j]), gb).is_zero());
  for (const auto& f : input) CHECK(oracle::divide_remainder(f, gb).is_zero());
  for (std::size_t i = 0; i < gb.size(); ++i) {
    CHECK(is_one(gb[i].leading().coef));
    std::vector<Poly<K>> others;
    for (std::size_t j = 0; j < gb.size(); ++j)
      if (j != i) others.push_back(gb[j]);
    CHECK(oracle::divide_remainder(gb[i], others) == gb[i]);
  }
}

}  // namespace

TEST_CASE("textbook basis") {
  auto gb = groebner_basis<Rational>({P("x^3 - 2*x*y"), P("x^2*y - 2*y^2 + x")});
  REQUIRE(gb.size() == 3);
  std::vector<Polynomial> expected{P("x^2"), P("x*y"), P("y^2 - 1/2*x")};
  for (const auto& e : expected) CHECK(std::find(gb.begin(), gb.end(), e) != gb.end());
}

TEST_CASE("random ideals over Q satisfy Buchberger's criterion") {
  Gen g(21);
  for (int i = 0; i < 120; ++i) {
    std::vector<Polynomial> gens;
    int k = static_cast<int>(g.integer(1, 3));
    for (int j = 0; j < k; ++j) gens.push_back(g.poly<Rational>(3, 3, 3, 4));
    if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    check_reduced_basis(gens, groebner_basis(gens));
  }
}

TEST_CASE("random homogeneous ideals over Z/p satisfy Buchberger's criterion") {
  Gen g(22);
  Field<ModP> f{32003};
  for (int i = 0; i < 80; ++i) {
    std::vector<Poly<ModP>> gens;
    int k = static_cast<int>(g.integer(2, 4));
    for (int j = 0; j < k; ++j) gens.push_back(g.form<ModP>(3, static_cast<int>(g.integer(1, 4)), 4, 1000, f));
    if (std::all_of(gens.begin(), gens.end(), [](const Poly<ModP>& p) { return p.is_zero(); })) continue;
    check_reduced_basis(gens, groebner_basis(gens));
  }
}

TEST_CASE("lex and elimination orders") {
  // x = t^2, y = t^3 eliminated to y^2 - x^3 (variables t, x, y).
  auto t = P("x"), x = P("y"), y = P("z");
  auto gb = groebner_basis<Rational>({x - t * t, y - t * t * t}, MonomialOrder::elimination(1));
  bool found = false;
  for (const auto& p : gb) {
    bool free_of_t = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& term) { return term.mono.exp[0] == 0; });
    if (free_of_t) {
      CHECK(p == x * x * x - y * y);
      found = true;
    }
  }
  CHECK(found);
  auto lex = groebner_basis<Rational>({P("x^2 + y^2 + z^2 - 1"), P("x - y"), P("y - z")}, MonomialOrder::lex());
  CHECK(std::find(lex.begin(), lex.end(), P("z^2 - 1/3")) != lex.end());
}

TEST_CASE("syzygies annihilate the generators") {
  Gen g(23);
  for (int i = 0; i < 30; ++i) {
    std::vector<Polynomial> gens;
    int k = static_cast<int>(g.integer(2, 4));
    for (int j = 0; j < k; ++j) gens.push_back(g.form<Rational>(3, static_cast<int>(g.integer(1, 3)), 3, 3));
    if (std::any_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    auto syz = syzygies(gens);
    for (const auto& v : syz.gens) {
      Polynomial s(3);
      for (std::size_t j = 0; j < gens.size(); ++j) s += v[j] * gens[j];
      CHECK(s.is_zero());
    }
    // The Koszul relation g_1 e_0 - g_0 e_1 lies in the syzygy module.
    GroebnerBasis<Rational> gb(3, ModuleOrder{MonomialOrder::grevlex(), ModuleOrderKind::term_over_position, syz.shifts, 0});
    for (const auto& v : syz.gens) gb.add(v);
    gb.compute();
    Vec<Rational> koszul(gens.size(), Polynomial(3));
    koszul[0] = gens[1];
    koszul[1] = -gens[0];
    CHECK(gb.contains(koszul));
  }
}

TEST_CASE("Koszul complex of the maximal ideal") {
  auto res = free_resolution(irrelevant_ideal<Rational>(3));
  CHECK(res.betti_numbers() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(res.degrees[3] == std::vector<int>{3});
  CHECK(res.regularity() == 0);
}

TEST_CASE("Hilbert series of monomial ideals against counting") {
  Gen g(24);
  for (int i = 0; i < 100; ++i) {
    std::vector<Monomial> gens;
    int k = static_cast<int>(g.integer(1, 5));
    for (int j = 0; j < k; ++j) {
      Monomial m = g.monomial(3, 5);
      if (!m.is_one()) gens.push_back(m);
    }
    if (gens.empty()) continue;
    HilbertSeries hs(monomial_ideal_numerator(gens, 3), 3);
    for (int t = 0; t <= 12; ++t) CHECK(hs.value(t) == oracle::standard_monomials_in_degree(gens, 3, t));
  }
}

TEST_CASE("Hilbert series from the staircase and from a resolution agree") {
  Gen g(25);
  for (int i = 0; i < 30; ++i) {
    std::vector<Polynomial> gens;
    int k = static_cast<int>(g.integer(1, 4));
    for (int j = 0; j < k; ++j) gens.push_back(g.form<Rational>(3, static_cast<int>(g.integer(1, 3)), 3, 3));
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); }), gens.end());
    if (gens.empty()) continue;
    auto I = GradedIdeal<Rational>::of(gens);
    auto hs = hilbert_series(I);
    CHECK(hs == free_resolution(I).hilbert_series());
    for (int t = 0; t <= 8; ++t) CHECK(hs.value(t) == oracle::hilbert_function_by_rank(gens, t));
  }
}

TEST_CASE("Jacobian ideal of the braid arrangement") {
  auto F = P("x*y*z*(x-y)*(x-z)*(y-z)");
  auto J = jacobian(F);
  auto hs = hilbert_series(GradedIdeal<Rational>::of(J));
  LaurentPoly expected;
  expected.add(0, 1);
  expected.add(5, -3);
  expected.add(7, 1);
  expected.add(8, 1);
  CHECK(hs.numerator() == expected);
  for (int t = 0; t <= 14; ++t) CHECK(hs.value(t) == oracle::hilbert_function_by_rank(J, t));
  CHECK(projective_degree(GradedIdeal<Rational>::of(J)) == 19);
  CHECK(hs.hilbert_polynomial_at(20) == 19);
}

TEST_CASE("quotients and saturation") {
  auto I = GradedIdeal<Rational>::of({P("x*y"), P("x*z")});
  auto Q = quotient(I, GradedIdeal<Rational>::of({P("x")}));
  auto gbQ = GroebnerBasis<Rational>::of(Q);
  CHECK(ideal_contains(gbQ, GradedIdeal<Rational>::of({P("y"), P("z")})));
  CHECK_FALSE(gbQ.contains(P("x")));

  // x * m^2 saturates to (x).
  std::vector<Polynomial> gens;
  for (const auto& m : oracle::monomials_up_to(3, 2, true))
    gens.push_back(P("x") * Polynomial::monomial(3, m, Rational(1)));
  auto S = saturate(GradedIdeal<Rational>::of(gens));
  auto gbS = GroebnerBasis<Rational>::of(S);
  CHECK(gbS.contains(P("x")));
  CHECK(gbS.polys().size() == 1);
}

TEST_CASE("projective degree of point schemes") {
  CHECK(projective_degree(GradedIdeal<Rational>::of({P("x*y"), P("z")})) == 2);
  CHECK(projective_degree(GradedIdeal<Rational>::of({P("x^2"), P("y^3")})) == 6);
  CHECK(projective_degree(irrelevant_ideal<Rational>(3)) == 0);
  CHECK_THROWS_AS(projective_degree(GradedIdeal<Rational>::of({P("x")})), std::domain_error);
}

TEST_CASE("normal forms over Z/p match Q") {
  Gen g(26);
  Field<ModP> f{32003};
  for (int i = 0; i < 20; ++i) {
    std::vector<Polynomial> gens{g.form<Rational>(3, 2, 3, 3), g.form<Rational>(3, 2, 3, 3)};
    if (gens[0].is_zero() || gens[1].is_zero()) continue;
    auto p = g.poly<Rational>(3, 4, 5, 5);
    auto nf = normal_form(p, gens);
    std::vector<Poly<ModP>> mod;
    for (const auto& q : gens) mod.push_back(map_to_field(q, f));
    try {
      CHECK(normal_form(map_to_field(p, f), mod) == map_to_field(nf, f));
    } catch (const std::domain_error&) {
    }
  }
}

TEST_CASE("critical pair limit from the environment") {
  auto J = jacobian(P("x*y*z*(x-y)*(x-z)*(y-z)*(x-2*y+3*z)"));
  ::setenv("LOGVEC_MAX_PAIRS", "1", 1);
  CHECK_THROWS_AS(groebner_basis(J), ResourceLimitError);
  ::setenv("LOGVEC_MAX_PAIRS", "not a number", 1);
  CHECK_NOTHROW(groebner_basis(J));
  ::unsetenv("LOGVEC_MAX_PAIRS");
}
