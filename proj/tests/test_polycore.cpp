#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "musurf/errors.hpp"
#include "musurf/parser.hpp"
#include "musurf/polynomial.hpp"
#include "test_util.hpp"

using namespace musurf;
using testutil::Rng;

namespace {

Polynomial P(const std::string& text) {
  static const std::vector<Var> all{Var::s, Var::t, Var::u, Var::x, Var::y, Var::z, Var::w};
  return parse_poly(text, all);
}

}  // namespace

TEST_CASE("parse: basic forms") {
  Polynomial f = P("s^2*t - 3*u^3");
  CHECK(f.term_count() == 2);
  CHECK(f == Polynomial::term(Monomial::var(Var::s, 2) * Monomial::var(Var::t), rat(1)) +
                 Polynomial::term(Monomial::var(Var::u, 3), rat(-3)));

  CHECK(P("0").is_zero());
  CHECK(P("0").term_count() == 0);

  // like terms collect
  CHECK(P("1/2*s*t + 1/2*s*t") == P("s*t"));
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_AS(P("s +"), ParseError);
  CHECK_THROWS_AS(P("s^"), ParseError);
  CHECK_THROWS_AS(P("(s"), ParseError);
  try {
    parse_poly("s + q", vars_st());
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  // declared ring is enforced
  CHECK_THROWS_AS(parse_poly("s + x", vars_st()), ParseError);
}

TEST_CASE("arith: spec examples") {
  CHECK(P("(s+t)*(s-t)") == P("s^2 - t^2"));
  Polynomial f = P("3*s^2*t - t + 1/2");
  CHECK((f + f * rat(-1)).is_zero());
  CHECK(P("(s^2+t^2+u^2)*s*t") == P("s^3*t + s*t^3 + s*t*u^2"));
}

TEST_CASE("derivative") {
  CHECK(P("s^2*t").derivative(Var::s) == P("2*s*t"));
  CHECK(P("x^2*w - y^2*z").derivative(Var::x, 2) == P("2*w"));
  CHECK(P("s^2").derivative(Var::u).is_zero());
}

TEST_CASE("homogenize / dehomogenize") {
  CHECK(P("s^2 + t - 1").homogenize(Var::u) == P("s^2 + t*u - u^2"));
  CHECK(P("s^2 + t*u - u^2").dehomogenize(Var::u) == P("s^2 + t - 1"));
  CHECK(P("s*t").homogenize(Var::u, 3) == P("s*t*u"));
  CHECK_THROWS_AS(P("s*t*u").homogenize(Var::w, 1), AlgebraError);
  CHECK_THROWS_AS(P("s*u").homogenize(Var::u), AlgebraError);
}

TEST_CASE("multi_gcd: examples") {
  std::vector<Polynomial> a{P("s*t"), P("s*u"), P("s^2")};
  CHECK(multi_gcd(a) == P("s"));

  // Roman-surface validity: the pairwise route is the oracle.
  CHECK(poly_gcd(P("s*u"), P("t*u")) == P("u"));
  CHECK(poly_gcd(P("u"), P("s*t")).is_constant());
  std::vector<Polynomial> roman{P("s*u"), P("t*u"), P("s*t"), P("s^2+t^2+u^2")};
  CHECK(multi_gcd(roman) == P("1"));

  std::vector<Polynomial> with_zero{P("2*s*t + 4*t^2"), Polynomial::zero()};
  CHECK(multi_gcd(with_zero) == P("s*t + 2*t^2"));

  std::vector<Polynomial> zeros{Polynomial::zero(), Polynomial::zero()};
  CHECK_THROWS_AS(multi_gcd(zeros), AlgebraError);
}

TEST_CASE("evaluate") {
  CHECK(P("s^2 + t^2").evaluate({{Var::s, rat(1)}, {Var::t, rat(2)}}) == rat(5));
  CHECK(Polynomial::zero().evaluate({}) == rat(0));
  CHECK(P("x^2*w - y^2*z").evaluate(
            {{Var::x, rat(0)}, {Var::y, rat(0)}, {Var::z, rat(1)}, {Var::w, rat(1)}}) == rat(0));
  CHECK_THROWS_AS(P("s + t").evaluate({{Var::s, rat(1)}}), AlgebraError);
}

TEST_CASE("property: ring axioms") {
  Rng rng(2024);
  for (int i = 0; i < 40; ++i) {
    Polynomial f = testutil::random_poly(rng, vars_stu());
    Polynomial g = testutil::random_poly(rng, vars_stu());
    Polynomial h = testutil::random_poly(rng, vars_stu());
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
  }
}

TEST_CASE("property: Leibniz rule") {
  Rng rng(77);
  for (int i = 0; i < 40; ++i) {
    Polynomial f = testutil::random_poly(rng, vars_st());
    Polynomial g = testutil::random_poly(rng, vars_st());
    Polynomial lhs = (f * g).derivative(Var::s);
    Polynomial rhs = f.derivative(Var::s) * g + f * g.derivative(Var::s);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("property: homogenize round trip") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    Polynomial f = testutil::random_poly(rng, vars_st());
    CHECK(f.homogenize(Var::u).dehomogenize(Var::u) == f);
    if (!f.is_zero()) CHECK(f.homogenize(Var::u).is_homogeneous());
  }
}

TEST_CASE("property: gcd divides inputs, cofactors coprime") {
  Rng rng(5150);
  for (int i = 0; i < 25; ++i) {
    Polynomial f = testutil::random_nonzero_poly(rng, vars_st(), 4, 3, 5);
    Polynomial g = testutil::random_nonzero_poly(rng, vars_st(), 4, 3, 5);
    Polynomial h = testutil::random_nonzero_poly(rng, vars_st(), 3, 2, 3);
    std::vector<Polynomial> input{f * h, g * h};
    Polynomial d = multi_gcd(input);
    auto q1 = (f * h).divide_exact(d);
    auto q2 = (g * h).divide_exact(d);
    REQUIRE(q1.has_value());
    REQUIRE(q2.has_value());
    // h divides the gcd
    CHECK(d.divide_exact(poly_gcd(d, h)).has_value());
    CHECK(poly_gcd(d, h) == h.monic(MonomialOrder::grevlex(vars_st())));
    // cofactors have gcd 1
    std::vector<Polynomial> cof{*q1, *q2};
    CHECK(multi_gcd(cof).is_constant());
  }
}

TEST_CASE("property: parse(print(f)) == f") {
  Rng rng(314159);
  static const std::vector<Var> all{Var::s, Var::t, Var::u, Var::x, Var::y, Var::z, Var::w};
  for (int i = 0; i < 60; ++i) {
    Polynomial f = testutil::random_poly(rng, all, 6, 4, 20);
    CHECK(parse_poly(f.str(), all) == f);
  }
}
