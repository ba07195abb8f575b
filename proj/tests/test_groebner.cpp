#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "musurf/errors.hpp"
#include "musurf/groebner.hpp"
#include "musurf/parser.hpp"
#include "test_util.hpp"

using namespace musurf;
using testutil::Rng;

namespace {

Polynomial P(const std::string& text) {
  static const std::vector<Var> all{Var::s, Var::t, Var::u, Var::x, Var::y, Var::z, Var::w};
  return parse_poly(text, all);
}

IdealBasis gb_st(std::vector<Polynomial> gens) {
  return groebner_basis(std::move(gens), MonomialOrder::grevlex(vars_st()));
}

bool contains(const IdealBasis& b, const Polynomial& f) {
  return std::find(b.gens.begin(), b.gens.end(), f) != b.gens.end();
}

}  // namespace

TEST_CASE("groebner_basis: examples") {
  IdealBasis b1 = gb_st({P("s"), P("t")});
  CHECK(b1.gens.size() == 2);
  CHECK(contains(b1, P("s")));
  CHECK(contains(b1, P("t")));

  IdealBasis b2 = gb_st({P("s - t"), P("s + t")});
  CHECK(contains(b2, P("s")));
  CHECK(contains(b2, P("t")));

  IdealBasis b3 = gb_st({P("s^2*t - 1"), P("s*t^2 - 1")});
  CHECK(contains(b3, P("s - t")));
  CHECK(verify_groebner(b3));

  IdealBasis zero = gb_st({Polynomial::zero()});
  CHECK(zero.gens.empty());
  CHECK(zero.is_groebner);
}

TEST_CASE("groebner_basis: reduced basis is unique under shuffles") {
  Rng rng(99);
  std::vector<Polynomial> gens{P("s^2 + t^2 - 1"), P("s*t - 2"), P("s^3 - t"), P("2*t^3 - s + 5")};
  IdealBasis ref = gb_st(gens);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Polynomial> shuffled = gens;
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.range(0, static_cast<long>(i - 1))]);
    // also rescale: the ideal is unchanged
    shuffled[0] = shuffled[0] * rat(3, 7);
    IdealBasis again = gb_st(shuffled);
    CHECK(again.gens == ref.gens);
  }
}

TEST_CASE("normal_form: examples") {
  IdealBasis b = gb_st({P("s")});
  CHECK(normal_form(P("s^2"), b).is_zero());

  IdealBasis b2 = gb_st({P("s - t")});
  CHECK(normal_form(P("s + t"), b2) == P("2*t"));

  IdealBasis b3 = gb_st({P("s"), P("t")});
  CHECK(normal_form(P("1"), b3) == P("1"));

  IdealBasis raw{{P("s - t"), P("s + t")}, MonomialOrder::grevlex(vars_st()), false, {}};
  CHECK_THROWS_AS(normal_form(P("s"), raw), AlgebraError);
}

TEST_CASE("colength: examples") {
  CHECK(colength(gb_st({P("s"), P("t")})) == 1);
  CHECK(colength(gb_st({P("s^2"), P("t^3")})) == 6);
  // two conics meeting only at the origin: Bezout oracle 2*2
  CHECK(colength(gb_st({P("s^2 + t^2"), P("s*t")})) == 2 * 2);
  // not zero-dimensional
  CHECK(!colength(gb_st({P("s")})).has_value());
  // unit ideal
  CHECK(colength(gb_st({P("s"), P("t"), P("1")})) == 0);
  // zero ideal
  CHECK(!colength(gb_st({Polynomial::zero()})).has_value());
}

TEST_CASE("colength: independent of monomial order") {
  Rng rng(1234);
  for (int i = 0; i < 8; ++i) {
    // random zero-dimensional ideal: pure powers plus noise
    std::vector<Polynomial> gens{
        Polynomial::variable(Var::s, static_cast<unsigned>(rng.range(1, 4))) +
            testutil::random_poly(rng, vars_st(), 2, 2, 3),
        Polynomial::variable(Var::t, static_cast<unsigned>(rng.range(1, 4))) +
            testutil::random_poly(rng, vars_st(), 2, 2, 3)};
    auto c1 = colength(groebner_basis(gens, MonomialOrder::grevlex(vars_st())));
    auto c2 = colength(groebner_basis(gens, MonomialOrder::lex(vars_st())));
    if (c1.has_value() && c2.has_value()) CHECK(*c1 == *c2);
  }
}

TEST_CASE("colon_saturate: examples and idempotence") {
  IdealBasis i1 = gb_st({P("s*t")});
  std::vector<Polynomial> by_t{P("t")};
  IdealBasis s1 = colon_saturate(i1, by_t);
  CHECK(s1.gens == gb_st({P("s")}).gens);

  IdealBasis i2 = gb_st({P("s^2*t"), P("s*t^2")});
  std::vector<Polynomial> by_st{P("s*t")};
  IdealBasis s2 = colon_saturate(i2, by_st);
  REQUIRE(s2.gens.size() == 1);
  CHECK(s2.gens[0] == P("1"));
  CHECK(in_ideal(P("1"), s2));

  std::vector<Var> ring_su{Var::s, Var::u};
  IdealBasis i3 = groebner_basis({P("s")}, MonomialOrder::grevlex(ring_su));
  std::vector<Polynomial> by_u{P("u")};
  IdealBasis s3 = colon_saturate(i3, by_u);
  CHECK(s3.gens == groebner_basis({P("s")}, MonomialOrder::grevlex(ring_su)).gens);

  // idempotence
  IdealBasis twice = colon_saturate(s1, by_t);
  CHECK(twice.gens == s1.gens);

  // saturation by a multi-generator ideal removes exactly the common locus:
  // <s*t> : <s,t>^inf keeps both axes, so it is <s*t> itself...
  std::vector<Polynomial> by_ideal{P("s"), P("t")};
  IdealBasis s4 = colon_saturate(i1, by_ideal);
  CHECK(s4.gens == i1.gens);
  // ...while the origin-primary part dissolves.
  IdealBasis m2 = gb_st({P("s^2"), P("s*t"), P("t^2")});
  IdealBasis s5 = colon_saturate(m2, by_ideal);
  CHECK(in_ideal(P("1"), s5));
}

TEST_CASE("eliminate: examples") {
  std::vector<Var> keep_xy{Var::x, Var::y};
  IdealBasis e1 = eliminate({P("x - s^2"), P("y - s^3")}, {Var::s}, keep_xy);
  REQUIRE(e1.gens.size() == 1);
  CHECK(e1.gens[0].primitive_part() == P("x^3 - y^2"));

  IdealBasis e2 = eliminate({P("x - s"), P("y - t")}, {Var::s, Var::t}, keep_xy);
  CHECK(e2.gens.empty());

  IdealBasis e3 = eliminate({P("x - s"), P("y - s")}, {Var::s}, keep_xy);
  REQUIRE(e3.gens.size() == 1);
  CHECK(e3.gens[0].primitive_part() == P("x - y"));
}

TEST_CASE("property: S-polynomials of returned bases reduce to zero") {
  Rng rng(4242);
  for (int i = 0; i < 6; ++i) {
    std::vector<Polynomial> gens;
    int n = static_cast<int>(rng.range(2, 4));
    for (int k = 0; k < n; ++k) gens.push_back(testutil::random_nonzero_poly(rng, vars_st(), 4, 3, 5));
    IdealBasis b = gb_st(gens);
    CHECK(verify_groebner(b));
  }
}

TEST_CASE("property: membership is basis-shape independent") {
  Rng rng(31337);
  for (int i = 0; i < 10; ++i) {
    Polynomial f = testutil::random_nonzero_poly(rng, vars_st(), 3, 2, 4);
    Polynomial g = testutil::random_nonzero_poly(rng, vars_st(), 3, 2, 4);
    Polynomial h = testutil::random_poly(rng, vars_st(), 3, 2, 4);
    Polynomial member = f * h + g * (testutil::random_poly(rng, vars_st(), 2, 2, 3));
    IdealBasis b = gb_st({f, g});
    CHECK(in_ideal(member, b));
  }
}
