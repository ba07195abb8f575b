// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "musurf/errors.hpp"
#include "musurf/oracle.hpp"
#include "musurf/parser.hpp"
#include "musurf/singular.hpp"
#include "test_util.hpp"

using namespace musurf;
using testutil::Rng;

namespace {

Polynomial P(const std::string& text) {
  static const std::vector<Var> all{Var::s, Var::t, Var::u, Var::x, Var::y, Var::z, Var::w};
  return parse_poly(text, all);
}

SurfaceParam roman() { return SurfaceParam::make(P("s*u"), P("t*u"), P("s*t"), P("s^2+t^2+u^2")); }
SurfaceParam whitney() { return SurfaceParam::make(P("s*t"), P("s*u"), P("t^2"), P("u^2")); }
SurfaceParam sphere() {
  return SurfaceParam::make(P("2*s*u"), P("2*t*u"), P("s^2+t^2-u^2"), P("s^2+t^2+u^2"));
}

ProjPoint pt(long x, long y, long z, long w) {
  return ProjPoint::space(rat(x), rat(y), rat(z), rat(w));
}

struct Checker {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

bool proportional(const Polynomial& f, const Polynomial& g) {
  auto q = f.divide_exact(g);
  return q.has_value() && q->is_constant() && q->constant_value() != 0;
}

// ---------------------------------------------------------------------------

void criterion1(Checker& c) {
  SurfaceParam R = roman();
  BasePointReport bp = base_points(R, 0);
  c.require(bp.lambda == 0, "Roman lambda != 0");
  SingularityReport sing = sing_order(R, pt(0, 0, 0, 1), 0);
  c.require(sing.r == 3, "Roman sing_order(0,0,0,1) != 3");
  ImplicitSurface f = implicitize(R);
  c.require(classic_order(f, pt(0, 0, 0, 1)) == 3, "Roman classic_order != 3");
}

void criterion2(Checker& c) {
  SurfaceParam R = roman();
  ProjPoint axis = ProjPoint::space(rat(1, 3), rat(0), rat(0), rat(1));
  SingularityReport sing = sing_order(R, axis, 0);
  c.require(sing.r == 2, "Roman axis sing_order != 2");
  c.require(classic_order(implicitize(R), axis) == 2, "Roman axis classic_order != 2");

  MuBasisResult mu = mu_basis(R, default_degree_bound(R));
  c.require(mu.basis.has_value(), "Roman mu-basis not found");
  if (mu.basis) {
    CountCheck c7 = mu_basis_order(R, axis, *mu.basis, 0);
    c.require(c7.count == 2 && c7.matches_r, "Cor.7 count != 2 at the axis point");
  }
  CountCheck t6 = verify_moving_plane_count(R, axis, special_planes(R)[2], 0);
  c.require(t6.count == 2 && t6.matches_r, "Thm.6 count with L3 != 2");
  if (mu.basis) {
    SeededRng rng(2024);
    for (int i = 0; i < 8; ++i) {
      MovingPlane L = random_following_plane(*mu.basis, rng);
      if (L.incidence_curve(axis).is_zero()) continue;
      CountCheck t6r = verify_moving_plane_count(R, axis, L, 0);
      c.require(t6r.count == 2 && t6r.matches_r, "Thm.6 count with a random plane != 2");
      return;
    }
    c.require(false, "no usable random following plane drawn");
  }
}

void criterion3(Checker& c) {
  SurfaceParam W = whitney();
  BasePointReport bp = base_points(W, 0);
  c.require(bp.lambda == 1, "Whitney lambda != 1");
  c.require(implicit_degree(W, 0) == 3, "Whitney implicit_degree != 3 = 2^2 - 1");
  ImplicitSurface f = implicitize(W);
  c.require(f.degree == 3, "Whitney oracle degree != 3");
  c.require(proportional(f.f, P("x^2*w - y^2*z")), "Whitney implicit equation not ~ x^2*w - y^2*z");
  SingularityReport pinch = sing_order(W, pt(0, 0, 0, 1), 0);
  c.require(pinch.r == 2, "Whitney pinch sing_order != 2");
  c.require(classic_order(f, pt(0, 0, 0, 1)) == 2, "Whitney pinch classic_order != 2");
}

void criterion4(Checker& c) {
  SurfaceParam S = sphere();
  BasePointReport bp = base_points(S, 0);
  c.require(bp.lambda == 2, "sphere lambda != 2");
  c.require(bp.mult.affine_chart == 0 && bp.mult.far_point == 0,
            "sphere base points should sit on the line at infinity");
  c.require(implicit_degree(S, 0) == 2, "sphere implicit_degree != 2");
  SingularityReport center = sing_order(S, pt(0, 0, 0, 1), 0);
  c.require(center.r == 0, "sphere center r != 0");
  // random rational parameter point; its image is on the sphere
  Rng rng(55);
  ProjPoint on = S.image_of(rat(rng.range(-9, 9), 1 + rng.range(0, 3)),
                            rat(rng.range(-9, 9), 1 + rng.range(0, 3)));
  SingularityReport smooth = sing_order(S, on, 0);
  c.require(smooth.r == 1, "random on-sphere point r != 1");
}

void criterion5(Checker& c) {
  const ChartPoint origin{Var::s, Var::t, rat(0), rat(0)};
  std::vector<std::vector<Polynomial>> suite{
      {P("s"), P("t")},
      {P("s^2"), P("s*t"), P("t^2")},
      {P("s"), P("t^3")},
      {P("s^2 + t^2"), P("s*t")},
  };
  for (const auto& ideal : suite) {
    long red = reduction_multiplicity(ideal, origin, 1);
    long hil = hilbert_multiplicity(ideal, origin);
    c.require(red == hil, "reduction != hilbert on a suite ideal");
  }
  for (int k = 1; k <= 3; ++k) {
    std::vector<Polynomial> gens;
    for (int i = 0; i <= k; ++i)
      gens.push_back(Polynomial::term(Monomial::var(Var::s, static_cast<unsigned>(i)) *
                                          Monomial::var(Var::t, static_cast<unsigned>(k - i)),
                                      rat(1)));
    c.require(reduction_multiplicity(gens, origin, 2) == k * k, "e(m^k) != k^2");
  }

  Rng rng(777);
  auto random_vanishing = [&]() {
    while (true) {
      Polynomial f = testutil::random_poly(rng, vars_st(), 4, 3, 5);
      f = f - Polynomial::constant(f.evaluate({{Var::s, rat(0)}, {Var::t, rat(0)}}));
      if (!f.is_zero()) return f;
    }
  };
  auto random_pair = [&]() {
    while (true) {
      std::vector<Polynomial> pair{random_vanishing(), random_vanishing()};
      auto col = local_colength(pair, origin);
      if (col.has_value() && *col > 0) return pair;
    }
  };
  int mono_done = 0;
  while (mono_done < 10) {
    std::vector<Polynomial> ip = random_pair();
    std::vector<Polynomial> jp{
        ip[0] * testutil::random_poly(rng, vars_st(), 2, 1, 3) +
            ip[1] * testutil::random_poly(rng, vars_st(), 2, 1, 3),
        ip[0] * testutil::random_poly(rng, vars_st(), 2, 1, 3) +
            ip[1] * testutil::random_poly(rng, vars_st(), 2, 1, 3)};
    if (!local_colength(jp, origin).has_value()) continue;
    c.require(reduction_multiplicity(jp, origin, 3) >= reduction_multiplicity(ip, origin, 3),
              "monotonicity e(J) >= e(I) failed");
    ++mono_done;
  }
  for (int i = 0; i < 10; ++i) {
    std::vector<Polynomial> pair = random_pair();
    auto col = local_colength(pair, origin);
    c.require(col.has_value() && reduction_multiplicity(pair, origin, 4) == *col,
              "complete-intersection equality e = colength failed");
  }
}

void criterion6(Checker& c) {
  SurfaceParam pl = SurfaceParam::make(P("s"), P("t"), P("1"), P("1"));
  MuBasisResult mu_pl = mu_basis(pl, default_degree_bound(pl));
  c.require(mu_pl.basis.has_value(), "plane mu-basis not found");
  if (mu_pl.basis) {
    auto o = outer_product(mu_pl.basis->p, mu_pl.basis->q, mu_pl.basis->r);
    bool exact = true;
    for (int i = 0; i < 4; ++i) exact = exact && (o[i] == pl.affine[i] * rat(-1));
    c.require(exact, "plane outer product != -1 * P");
  }

  SurfaceParam R = roman();
  MuBasisResult mu_r = mu_basis(R, default_degree_bound(R));
  c.require(mu_r.basis.has_value(), "Roman mu-basis not found");
  if (mu_r.basis) {
    const MuBasis& mu = *mu_r.basis;
    auto o = outer_product(mu.p, mu.q, mu.r);
    bool exact = true;
    for (int i = 0; i < 4; ++i) exact = exact && (o[i] == R.affine[i] * mu.kappa);
    c.require(exact && mu.kappa != 0, "Roman outer product != kappa * P");
    c.require(follows(mu.p, R) && follows(mu.q, R) && follows(mu.r, R),
              "Roman mu-basis member does not follow");
    for (const auto& L : special_planes(R)) {
      auto h = module_membership(L, mu);
      bool reduces = h.has_value();
      if (reduces) {
        for (int i = 0; i < 4; ++i) {
          Polynomial sum =
              (*h)[0] * mu.p.comps[i] + (*h)[1] * mu.q.comps[i] + (*h)[2] * mu.r.comps[i];
          reduces = reduces && (sum == L.comps[i]);
        }
      }
      c.require(reduces, "special plane does not reduce to zero against the mu-basis module");
    }
  }
}

void criterion7(Checker& c) {
  Rng rng(123456);
  auto random_quadratic = [&]() {
    std::vector<Polynomial::Term> terms;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j) {
        long v = rng.range(-3, 3);
        if (v != 0)
          terms.push_back({Monomial::var(Var::s, static_cast<unsigned>(i)) *
                               Monomial::var(Var::t, static_cast<unsigned>(j)),
                           rat(v)});
      }
    return Polynomial::from_terms(std::move(terms));
  };

  int done = 0;
  int attempts = 0;
  while (done < 10 && attempts < 400) {
    ++attempts;
    Polynomial a = random_quadratic(), b = random_quadratic(), c2 = random_quadratic(),
               d = random_quadratic();
    SurfaceParam S;
    BasePointReport bp;
    ImplicitSurface f;
    try {
      S = SurfaceParam::make(a, b, c2, d);
      if (S.degree != 2 || S.content_removed) continue;
      bp = base_points(S, 0);  // rejection sampling on the base locus
      if (bp.lambda != 0) continue;
      f = implicitize(S);
      if (f.degree != 4) continue;  // keep the sweep on generically 1-1 maps
    } catch (const AlgebraError&) {
      continue;
    }

    MuBasisResult mu = mu_basis(S, default_degree_bound(S));

    std::vector<ProjPoint> points;
    points.push_back(S.image_of(rat(rng.range(-5, 5), 1 + rng.range(0, 2)),
                                rat(rng.range(-5, 5), 1 + rng.range(0, 2))));
    points.push_back(S.image_of(rat(rng.range(-5, 5), 1 + rng.range(0, 2)),
                                rat(rng.range(-5, 5), 1 + rng.range(0, 2))));
    while (true) {
      ProjPoint off = pt(rng.range(-4, 4), rng.range(-4, 4), rng.range(-4, 4), 1);
      std::vector<std::pair<Var, Rat>> at{{Var::x, off.coords[0]},
                                          {Var::y, off.coords[1]},
                                          {Var::z, off.coords[2]},
                                          {Var::w, off.coords[3]}};
      if (f.f.evaluate(at) != 0) {
        points.push_back(off);
        break;
      }
    }

    for (const auto& X0 : points) {
      SingularityReport s1, s2;
      try {
        s1 = sing_order_with_lambda(S, X0, 11, 0);
        s2 = sing_order_with_lambda(S, X0, 777777, 0);
      } catch (const AlgebraError& e) {
        c.require(false, std::string("sweep sing_order failed: ") + e.what());
        continue;
      }
      c.require(s1.r == s2.r && s1.total_count == s2.total_count,
                "two seeds disagree on " + X0.str());
      int classic = classic_order(f, X0);
      c.require(s1.r == classic, "sing_order != classic_order at " + X0.str());

      CountCheck t6 = verify_moving_plane_count(S, X0, special_planes(S)[0], 3);
      c.require(t6.matches_r, "Thm.6 mismatch at " + X0.str());
      if (mu.basis) {
        CountCheck c7 = mu_basis_order(S, X0, *mu.basis, 3);
        c.require(c7.matches_r, "Cor.7 mismatch at " + X0.str());
        Polynomial surf = special_planes(S)[1].comps[1] * Polynomial::variable(Var::y) +
                          special_planes(S)[1].comps[3] * Polynomial::variable(Var::w);
        CountCheck t8 = verify_moving_surface_count(S, X0, surf, 3);
        c.require(t8.matches_r, "Thm.8 mismatch at " + X0.str());
      }
    }
    ++done;
  }
  c.require(done == 10, "could not sample 10 base-point-free quadratic surfaces");
}

void criterion8(Checker& c) {
  // outer-product orthogonality and multilinearity on 100 random triples
  Rng rng(31337);
  auto random_plane = [&]() {
    return MovingPlane{{testutil::random_poly(rng, vars_st(), 3, 2, 4),
                        testutil::random_poly(rng, vars_st(), 3, 2, 4),
                        testutil::random_poly(rng, vars_st(), 3, 2, 4),
                        testutil::random_poly(rng, vars_st(), 3, 2, 4)}};
  };
  for (int i = 0; i < 100; ++i) {
    MovingPlane p = random_plane(), q = random_plane(), r = random_plane();
    auto o = outer_product(p, q, r);
    for (const MovingPlane* m : {&p, &q, &r}) {
      Polynomial dot;
      for (int k = 0; k < 4; ++k) dot = dot + o[k] * m->comps[k];
      c.require(dot.is_zero(), "outer-product orthogonality failed");
    }
    MovingPlane p2 = random_plane();
    Rat alpha = rat(rng.range(-4, 4), 1 + (i % 3)), beta = rat(rng.range(-4, 4), 1 + (i % 2));
    MovingPlane combo;
    for (int k = 0; k < 4; ++k) combo.comps[k] = p.comps[k] * alpha + p2.comps[k] * beta;
    auto lhs = outer_product(combo, q, r);
    auto o2 = outer_product(p2, q, r);
    for (int k = 0; k < 4; ++k)
      c.require(lhs[k] == o[k] * alpha + o2[k] * beta, "outer-product multilinearity failed");
  }

  // S-polynomials of emitted Groebner bases reduce to zero
  std::vector<std::vector<Polynomial>> ideals{
      {P("s"), P("t"), P("s*t")},
      {P("s*t"), P("s"), P("t^2")},
      {P("2*s"), P("2*t"), P("s^2 + t^2 - 1")},
      {P("s^2 + t^2"), P("s*t")},
  };
  for (const auto& gens : ideals) {
    IdealBasis gb = groebner_basis(gens, MonomialOrder::grevlex(vars_st()));
    c.require(verify_groebner(gb), "an emitted Groebner basis fails S-polynomial reduction");
  }
  IdealBasis elim = eliminate({P("x - s^2"), P("y - s^3")}, {Var::s}, {Var::x, Var::y});
  c.require(verify_groebner(elim), "elimination basis fails S-polynomial reduction");

  // saturation idempotence
  std::vector<Polynomial> by{P("t")};
  IdealBasis i1 = groebner_basis({P("s*t"), P("t^2")}, MonomialOrder::grevlex(vars_st()));
  IdealBasis once = colon_saturate(i1, by);
  IdealBasis twice = colon_saturate(once, by);
  c.require(once.gens == twice.gens, "saturation is not idempotent");
  c.require(verify_groebner(once), "saturation basis fails S-polynomial reduction");

  // projective and pivot invariance of r on every battery point
  struct Case {
    SurfaceParam surf;
    ProjPoint point;
  };
  std::vector<Case> battery{
      {roman(), pt(0, 0, 0, 1)},
      {roman(), ProjPoint::space(rat(1, 3), rat(0), rat(0), rat(1))},
      {roman(), pt(1, 1, 1, 3)},
      {whitney(), pt(0, 0, 0, 1)},
      {sphere(), pt(0, 0, 0, 1)},
      {sphere(), pt(1, 0, 0, 1)},
  };
  for (const auto& cs : battery) {
    SingularityReport base = sing_order(cs.surf, cs.point, 0);
    SingularityReport scaled = sing_order(cs.surf, cs.point.scaled(rat(-7, 2)), 0);
    c.require(scaled.r == base.r, "projective invariance failed at " + cs.point.str());
    for (int piv = 0; piv < 4; ++piv) {
      if (cs.point.coords[piv] == 0) continue;
      SingularityReport alt = sing_order(cs.surf, cs.point, 0, piv);
      c.require(alt.r == base.r, "pivot invariance failed at " + cs.point.str());
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    std::function<void(Checker&)> run;
  };
  std::vector<Entry> criteria{
      {1, "Roman surface: lambda=0, triple point r=3 by both definitions", criterion1},
      {2, "Roman axis point: r=2 by both definitions, Thm.6 and Cor.7 counts", criterion2},
      {3, "Whitney umbrella: lambda=1, implicit degree 3, pinch point r=2", criterion3},
      {4, "Sphere: lambda=2 via rational colength, center r=0, smooth point r=1", criterion4},
      {5, "Multiplicity engine: reduction = Hilbert, e(m^k)=k^2, monotone, CI equality",
       criterion5},
      {6, "Mu-basis verification: plane kappa=-1 exact, Roman invariants, module reduction",
       criterion6},
      {7, "Randomized equivalence sweep: 10 base-point-free quadratics, 3 points each",
       criterion7},
      {8, "Structural identities: outer product, S-polynomials, saturation, invariance",
       criterion8},
  };

  int failures = 0;
  for (auto& entry : criteria) {
    Checker c;
    try {
      entry.run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s\n", c.ok ? "PASS" : "FAIL", entry.id, entry.label);
    for (const auto& note : c.notes) std::printf("      %s\n", note.c_str());
    if (!c.ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
