#include <doctest.h>

#include "polycore/format.hpp"
#include "polycore/parser.hpp"
#include "polycore/univariate.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace logvec;
using logvec::testing::Gen;

TEST_CASE("parse and print simple forms") {
  auto p = parse_polynomial("(x - y)^2");
  CHECK(to_string(p) == "x^2 - 2*x*y + y^2");
  CHECK(parse_polynomial("3/6*x") == parse_polynomial("1/2*x"));
  CHECK(to_string(parse_polynomial("0*x + 0")) == "0");
  CHECK(parse_polynomial("-x + x").is_zero());
  CHECK(parse_polynomial("x*y # trailing comment") == parse_polynomial("y*x"));
  CHECK(parse_polynomial("2^10") == Polynomial::constant(3, 1024L));
  CHECK(to_string(parse_polynomial("-1/3*z^2 + 7")) == "-1/3*z^2 + 7");
}

TEST_CASE("parse errors carry positions") {
  auto expect_error = [](const char* text, std::size_t line, std::size_t column) {
    try {
      parse_polynomial(text);
      FAIL("no error for " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  expect_error("x +* y", 1, 4);
  expect_error("x + w", 1, 5);
  expect_error("(x + y", 1, 1);
  expect_error("x\n  + )", 2, 5);
  expect_error("", 1, 1);
  expect_error("x/2", 1, 2);
  expect_error("1/0*x", 1, 3);
}

TEST_CASE("custom variable names") {
  auto p = parse_polynomial("a*b - c", {"a", "b", "c"});
  CHECK(to_string(p, {"a", "b", "c"}) == "a*b - c");
  CHECK_THROWS_AS(parse_polynomial("x", {"a", "b", "c"}), ParseError);
}

TEST_CASE("print then parse is the identity on random polynomials") {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    auto p = g.poly<Rational>(3, 6, 6, 9);
    if (g.coin()) p = (Rational(1) / g.integer(1, 7)) * p;
    CHECK(parse_polynomial(to_string(p)) == p);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Gen g(12);
  for (int i = 0; i < 100; ++i) {
    auto a = g.poly<Rational>(3, 4, 4, 5), b = g.poly<Rational>(3, 4, 4, 5), c = g.poly<Rational>(3, 3, 3, 5);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("ring axioms modulo p") {
  Gen g(13);
  Field<ModP> f{101};
  for (int i = 0; i < 100; ++i) {
    auto a = g.poly<ModP>(3, 4, 4, 200, f), b = g.poly<ModP>(3, 4, 4, 200, f), c = g.poly<ModP>(3, 3, 3, 200, f);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("Z/p arithmetic") {
  Field<ModP> f{32003};
  for (long v = 1; v < 500; v += 7) {
    ModP a = f.from_int(v);
    CHECK(is_one(a * a.inverse()));
  }
  CHECK(f.from_int(-1).value() == 32002);
  CHECK(lift(f.from_int(-5)) == -5);
  CHECK(lift(f.from_int(16001)) == 16001);
  CHECK(lift(f.from_int(16002)) == -16001);
  CHECK(f.from_rational(Rational(1, 2)) * f.from_int(2) == f.one());
  CHECK_THROWS_AS(f.from_rational(Rational(1, 32003)), std::domain_error);
  CHECK_THROWS_AS(f.zero().inverse(), std::domain_error);
}

TEST_CASE("Euler identity for random forms") {
  Gen g(14);
  for (int i = 0; i < 50; ++i) {
    int d = static_cast<int>(g.integer(1, 6));
    auto F = g.form<Rational>(3, d, 5, 7);
    if (F.is_zero()) continue;
    Polynomial e(3);
    for (std::size_t v = 0; v < 3; ++v) e += Polynomial::variable(3, v) * differentiate(F, v);
    CHECK(e == Polynomial::constant(3, static_cast<long>(d)) * F);
  }
}

TEST_CASE("evaluation is a ring map") {
  Gen g(15);
  for (int i = 0; i < 50; ++i) {
    auto a = g.poly<Rational>(3, 4, 4, 5), b = g.poly<Rational>(3, 4, 4, 5);
    std::vector<Rational> pt{Rational(g.integer(-4, 4)), Rational(g.integer(-4, 4)) / 3, Rational(g.integer(-4, 4))};
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("braid arrangement expands to six terms") {
  std::vector<std::string> factors{"x", "y", "z", "x - y", "x - z", "y - z"};
  std::vector<Polynomial> polys;
  for (const auto& f : factors) polys.push_back(parse_polynomial(f));
  auto dense = logvec::testing::dense_product(polys);
  auto A3 = parse_polynomial("x*y*z*(x-y)*(x-z)*(y-z)");
  CHECK(dense.size() == 6);
  CHECK(A3.size() == 6);
  for (const auto& t : A3.terms()) {
    std::vector<int> e{t.mono.exp[0], t.mono.exp[1], t.mono.exp[2]};
    REQUIRE(dense.count(e) == 1);
    CHECK(dense.at(e) == t.coef);
  }
}

TEST_CASE("homogenize and dehomogenize") {
  Gen g(16);
  for (int i = 0; i < 50; ++i) {
    auto p = g.poly<Rational>(2, 5, 5, 5);
    if (p.is_zero()) continue;
    auto h = homogenize(p);
    CHECK(is_homogeneous(h));
    CHECK(dehomogenize(h, 2) == p);
  }
}

TEST_CASE("linear change of variables composes with its inverse") {
  Matrix<Rational> m = Matrix<Rational>::identity(3);
  m(2, 0) = 3;
  m(2, 1) = -2;
  auto inv = *m.inverse();
  Gen g(17);
  for (int i = 0; i < 20; ++i) {
    auto F = g.form<Rational>(3, 3, 5, 5);
    CHECK(apply_linear_change(apply_linear_change(F, m), inv) == F);
  }
  Matrix<Rational> singular(3, 3);
  CHECK_THROWS_AS(apply_linear_change(Polynomial::variable(3, 0), singular), std::invalid_argument);
}

TEST_CASE("matrix kernel, rank and determinant") {
  Gen g(18);
  for (int i = 0; i < 40; ++i) {
    std::size_t r = static_cast<std::size_t>(g.integer(1, 5)), c = static_cast<std::size_t>(g.integer(1, 5));
    Matrix<Rational> m(r, c);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b) m(a, b) = g.integer(-2, 2);
    auto ker = m.kernel();
    CHECK(ker.size() + m.rank() == c);
    for (const auto& v : ker)
      for (std::size_t a = 0; a < r; ++a) {
        Rational s = 0;
        for (std::size_t b = 0; b < c; ++b) s += m(a, b) * v[b];
        CHECK(s == 0);
      }
  }
  for (int i = 0; i < 20; ++i) {
    Matrix<Rational> a(3, 3), b(3, 3);
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) {
        a(x, y) = g.integer(-3, 3);
        b(x, y) = g.integer(-3, 3);
      }
    CHECK((a * b).determinant() == a.determinant() * b.determinant());
    if (auto inv = a.inverse()) CHECK(a * *inv == Matrix<Rational>::identity(3));
    else CHECK(a.determinant() == 0);
  }
}

TEST_CASE("univariate gcd and squarefree part") {
  Field<Rational> f;
  // (t - 1)^2 (t + 2)
  UPoly<Rational> p({Rational(2), Rational(-3), Rational(0), Rational(1)}, f);
  auto s = p.squarefree_part();
  CHECK(s.degree() == 2);
  CHECK_FALSE(p.is_squarefree());
  CHECK(s.is_squarefree());
  UPoly<Rational> q({Rational(-1), Rational(1)}, f);  // t - 1
  CHECK(gcd(p, q).coeffs() == q.coeffs());
  auto [quo, rem] = p.divmod(q);
  CHECK(rem.is_zero());
  CHECK(quo.degree() == 2);
}
