#include "musurf/singular.hpp"

#include <algorithm>

#include "musurf/errors.hpp"

namespace musurf {

namespace {

const std::array<Var, 4> kSpaceVars{Var::x, Var::y, Var::z, Var::w};

// Distinct-point count of a zero-dimensional ideal in a 2-variable chart:
// colength of the radical, obtained by adjoining the squarefree parts of the
// univariate eliminants.
long distinct_points(std::vector<Polynomial> gens, Var v1, Var v2) {
  std::vector<Var> ring{v1, v2};
  IdealBasis gb = groebner_basis(gens, MonomialOrder::grevlex(ring));
  auto col = colength(gb);
  if (!col)
    throw AlgebraError(Errc::internal, "distinct_points expects a zero-dimensional ideal");
  if (*col == 0) return 0;

  auto squarefree_eliminant = [&](Var keep, Var drop) {
    IdealBasis e = eliminate(gb.gens, {drop}, {keep});
    if (e.gens.size() != 1)
      throw AlgebraError(Errc::internal, "univariate eliminant is not principal");
    Polynomial f = e.gens[0];
    Polynomial fp = f.derivative(keep);
    if (fp.is_zero()) return f;
    auto q = f.divide_exact(poly_gcd(f, fp));
    return q ? *q : f;
  };

  std::vector<Polynomial> radical = gb.gens;
  radical.push_back(squarefree_eliminant(v1, v2));
  radical.push_back(squarefree_eliminant(v2, v1));
  auto rad_col = colength(groebner_basis(radical, MonomialOrder::grevlex(ring)));
  if (!rad_col) throw AlgebraError(Errc::internal, "radical lost zero-dimensionality");
  return *rad_col;
}

std::vector<Polynomial> difference_curves(const SurfaceParam& P, const ProjPoint& X0,
                                          int pivot) {
  std::vector<Polynomial> curves;
  for (int j = 0; j < 4; ++j) {
    if (j == pivot) continue;
    Polynomial d = P.homogeneous[j] * X0.coords[pivot] - P.homogeneous[pivot] * X0.coords[j];
    if (!d.is_zero()) curves.push_back(d);
  }
  return curves;
}

void check_isolated_fiber(const std::vector<Polynomial>& curves) {
  if (curves.size() < 2)
    throw AlgebraError(Errc::non_isolated_fiber,
                       "fewer than two independent constraints: the fiber is a curve");
  Polynomial g = multi_gcd(curves);
  if (!g.is_constant())
    throw AlgebraError(Errc::non_isolated_fiber,
                       "difference curves share the component " + g.str());
}

long count_with_extra_curve(const SurfaceParam& P, const ProjPoint& X0, int pivot,
                            const Polynomial& extra, std::uint64_t seed) {
  std::vector<Polynomial> curves = difference_curves(P, X0, pivot);
  if (!extra.is_zero()) curves.push_back(extra);
  check_isolated_fiber(curves);
  return total_multiplicity_on_locus(curves, curves, seed).total;
}

void require_base_point_free(const SurfaceParam& P, std::uint64_t seed) {
  BasePointReport bp = base_points(P, seed);
  if (!bp.is_base_point_free)
    throw AlgebraError(Errc::hypothesis_violated,
                       "the surface has base points (lambda = " + std::to_string(bp.lambda) +
                           "); the moving-plane counts assume none");
}

}  // namespace

BasePointReport base_points(const SurfaceParam& P, std::uint64_t seed) {
  BasePointReport out;
  out.seed = seed;

  std::vector<Polynomial> abc{P.homogeneous[0], P.homogeneous[1], P.homogeneous[2]};
  std::vector<Polynomial> abc_nonzero;
  for (const auto& f : abc)
    if (!f.is_zero()) abc_nonzero.push_back(f);
  if (abc_nonzero.size() >= 2) {
    Polynomial g = multi_gcd(abc_nonzero);
    if (!g.is_constant())
      throw AlgebraError(Errc::common_component,
                         "a, b, c share the factor " + g.str() +
                             ": the base locus is not finite-multiplicity");
  } else {
    throw AlgebraError(Errc::common_component,
                       "fewer than two of a, b, c are nonzero: V(a,b,c) is a curve");
  }

  std::vector<Polynomial> locus{P.homogeneous[0], P.homogeneous[1], P.homogeneous[2],
                                P.homogeneous[3]};
  out.mult = total_multiplicity_on_locus(abc, locus, seed);
  out.lambda = out.mult.total;

  // Independent emptiness route: saturate <a,b,c,d> by the irrelevant ideal.
  std::vector<Polynomial> locus_nonzero;
  for (const auto& f : locus)
    if (!f.is_zero()) locus_nonzero.push_back(f);
  out.base_locus = groebner_basis(locus_nonzero, MonomialOrder::grevlex(vars_stu()));
  std::vector<Polynomial> irrelevant{Polynomial::variable(Var::s), Polynomial::variable(Var::t),
                                     Polynomial::variable(Var::u)};
  IdealBasis sat = colon_saturate(out.base_locus, irrelevant);
  out.is_base_point_free = !sat.gens.empty() && sat.gens[0].is_constant();
  if (out.is_base_point_free != (out.lambda == 0))
    throw AlgebraError(Errc::internal,
                       "saturation emptiness disagrees with the multiplicity total");

  // Distinct base points over C, chart by chart.
  long count = 0;
  {
    std::vector<Polynomial> aff;
    for (const auto& f : locus_nonzero) aff.push_back(f.dehomogenize(Var::u));
    count += distinct_points(aff, Var::s, Var::t);
    std::vector<Polynomial> inf;
    for (const auto& f : locus_nonzero) inf.push_back(f.dehomogenize(Var::s));
    inf.push_back(Polynomial::variable(Var::u));
    count += distinct_points(inf, Var::t, Var::u);
    bool far = true;
    for (const auto& f : locus_nonzero)
      if (f.evaluate({{Var::s, rat(0)}, {Var::t, rat(1)}, {Var::u, rat(0)}}) != 0) far = false;
    if (far) count += 1;
  }
  out.set_count = count;
  return out;
}

SingularityReport sing_order_with_lambda(const SurfaceParam& P, const ProjPoint& X0,
                                         std::uint64_t seed, long lambda,
                                         std::optional<int> pivot) {
  if (X0.dim() != 4)
    throw AlgebraError(Errc::invalid_input, "sing_order needs a 4-coordinate point");
  int piv = pivot.value_or(static_cast<int>(X0.pivot_index()));
  if (piv < 0 || piv > 3 || X0.coords[piv] == 0)
    throw AlgebraError(Errc::invalid_input, "pivot coordinate must be nonzero");

  SingularityReport out;
  out.point = X0;
  out.pivot_coordinate = piv;
  out.lambda_used = lambda;
  out.difference_curves = difference_curves(P, X0, piv);
  check_isolated_fiber(out.difference_curves);
  out.mult = total_multiplicity_on_locus(out.difference_curves, out.difference_curves, seed);
  out.total_count = out.mult.total;
  out.r = out.total_count - lambda;
  if (out.r < 0)
    throw AlgebraError(Errc::internal,
                       "count below lambda: total=" + std::to_string(out.total_count) +
                           " lambda=" + std::to_string(lambda));
  return out;
}

SingularityReport sing_order(const SurfaceParam& P, const ProjPoint& X0, std::uint64_t seed,
                             std::optional<int> pivot) {
  BasePointReport bp = base_points(P, seed);
  return sing_order_with_lambda(P, X0, seed, bp.lambda, pivot);
}

long implicit_degree(const SurfaceParam& P, std::uint64_t seed) {
  long n = P.degree;
  return n * n - base_points(P, seed).lambda;
}

CountCheck verify_moving_plane_count(const SurfaceParam& P, const ProjPoint& X0,
                                     const MovingPlane& L, std::uint64_t seed) {
  require_base_point_free(P, seed);
  if (!follows(L, P))
    throw AlgebraError(Errc::not_following, "the plane does not follow the surface");

  SingularityReport sing = sing_order_with_lambda(P, X0, seed, 0);
  CountCheck out;
  out.r = sing.r;
  Polynomial incidence = L.incidence_curve(X0);
  if (incidence.is_zero()) {
    out.vacuous = true;
    out.count = sing.total_count;
  } else {
    out.count =
        count_with_extra_curve(P, X0, sing.pivot_coordinate, incidence, mix_seed(seed, 0x4c));
  }
  out.matches_r = (out.count == sing.r);
  return out;
}

CountCheck mu_basis_order(const SurfaceParam& P, const ProjPoint& X0, const MuBasis& mu,
                          std::uint64_t seed) {
  require_base_point_free(P, seed);
  SingularityReport sing = sing_order_with_lambda(P, X0, seed, 0);

  std::vector<Polynomial> curves;
  bool any_vacuous = false;
  for (const MovingPlane* plane : {&mu.p, &mu.q, &mu.r}) {
    Polynomial g = plane->incidence_curve(X0);
    if (g.is_zero()) {
      any_vacuous = true;
      continue;
    }
    curves.push_back(g);
  }

  CountCheck out;
  out.r = sing.r;
  out.vacuous = any_vacuous;

  // Literal three-curve total, when that system is zero-dimensional at all.
  if (curves.size() >= 2 && multi_gcd(curves).is_constant()) {
    try {
      out.standalone_count =
          total_multiplicity_on_locus(curves, curves, mix_seed(seed, 0x33)).total;
    } catch (const AlgebraError&) {
      // left unset: the literal system resisted counting
    }
  }

  // Counted system: basis incidences plus the special-plane incidences (the
  // difference curves). Its count is r whenever sing_order is defined.
  std::vector<Polynomial> combined = curves;
  for (const auto& d : sing.difference_curves) combined.push_back(d);
  check_isolated_fiber(combined);
  out.count = total_multiplicity_on_locus(combined, combined, mix_seed(seed, 0x6d)).total;
  out.matches_r = (out.count == sing.r);
  out.augmented = !(out.standalone_count && *out.standalone_count == out.count);
  return out;
}

CountCheck verify_moving_surface_count(const SurfaceParam& P, const ProjPoint& X0,
                                       const Polynomial& f, std::uint64_t seed) {
  require_base_point_free(P, seed);
  static const std::vector<Var> allowed{Var::x, Var::y, Var::z, Var::w, Var::s, Var::t, Var::u};
  if (!f.supported_on(allowed))
    throw AlgebraError(Errc::invalid_input, "moving surface must live in (x,y,z,w,s,t,u)");

  // Block-homogenize in (x,y,z,w) by padding with w.
  Polynomial fh = f;
  if (!fh.is_homogeneous_in(vars_xyzw())) {
    int top = 0;
    for (const auto& t : f.terms())
      top = std::max(top, t.mono.degree(vars_xyzw()));
    std::vector<Polynomial::Term> padded;
    for (const auto& t : f.terms()) {
      Monomial m = t.mono;
      m[Var::w] = static_cast<std::uint16_t>(m[Var::w] + top - t.mono.degree(vars_xyzw()));
      padded.push_back({m, t.coeff});
    }
    fh = Polynomial::from_terms(std::move(padded));
  }

  // Follow check: substituting the parametrization must give zero.
  Polynomial residual = fh;
  bool uses_u = fh.uses_var(Var::u);
  for (int i = 0; i < 4; ++i)
    residual = residual.substitute(kSpaceVars[i], uses_u ? P.homogeneous[i] : P.affine[i]);
  if (!residual.is_zero())
    throw AlgebraError(Errc::not_following,
                       "moving surface residual is nonzero: " + residual.str());

  SingularityReport sing = sing_order_with_lambda(P, X0, seed, 0);
  CountCheck out;
  out.r = sing.r;

  Polynomial fourth = fh;
  for (int i = 0; i < 4; ++i) fourth = fourth.substitute(kSpaceVars[i], X0.coords[i]);
  if (fourth.is_zero()) {
    out.vacuous = true;
    out.count = sing.total_count;
  } else {
    if (fourth.uses_var(Var::u)) {
      if (!fourth.is_homogeneous())
        throw AlgebraError(Errc::invalid_input,
                           "moving surface is not homogeneous in (s,t,u) at the point");
    } else {
      fourth = fourth.homogenize(Var::u);
    }
    out.count =
        count_with_extra_curve(P, X0, sing.pivot_coordinate, fourth, mix_seed(seed, 0x4d53));
  }
  out.matches_r = (out.count == sing.r);
  return out;
}

}  // namespace musurf
