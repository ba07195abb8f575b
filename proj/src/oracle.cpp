#include "musurf/oracle.hpp"

#include <algorithm>

#include "musurf/errors.hpp"
#include "musurf/groebner.hpp"

namespace musurf {

namespace {

const std::array<Var, 4> kSpaceVars{Var::x, Var::y, Var::z, Var::w};

Polynomial substitute_surface(const Polynomial& f, const SurfaceParam& P, bool homogeneous_forms) {
  Polynomial g = f;
  for (int i = 0; i < 4; ++i)
    g = g.substitute(kSpaceVars[i], homogeneous_forms ? P.homogeneous[i] : P.affine[i]);
  return g;
}

ImplicitSurface finish(Polynomial f_hat, Var hom_var, const SurfaceParam& P) {
  Polynomial f = f_hat.is_homogeneous() ? f_hat : f_hat.homogenize(hom_var);
  f = f.primitive_part();
  if (!substitute_surface(f, P, false).is_zero())
    throw AlgebraError(Errc::internal, "implicit candidate does not vanish on the surface");

  ImplicitSurface out;
  out.f = f;
  out.degree = f.total_degree();
  for (Var v : kSpaceVars) {
    Polynomial fv = f.derivative(v);
    if (fv.is_zero()) continue;
    if (!poly_gcd(f, fv).is_constant()) {
      out.reducible_suspect = true;
      break;
    }
  }
  return out;
}

}  // namespace

ImplicitSurface implicitize(const SurfaceParam& P) {
  // Pivot: the last nonzero coordinate polynomial, preferring d. The pivot
  // coordinate's variable doubles as the reciprocal unknown and is
  // eliminated together with s,t; the surviving three variables are the
  // affine chart, homogenized back by the pivot variable.
  int pivot = -1;
  for (int i = 3; i >= 0; --i)
    if (!P.affine[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot < 0) throw AlgebraError(Errc::invalid_surface, "zero parametrization");

  const Polynomial& piv = P.affine[pivot];
  std::vector<Polynomial> gens;
  std::vector<Var> keep;
  for (int i = 0; i < 4; ++i) {
    if (i == pivot) continue;
    gens.push_back(piv * Polynomial::variable(kSpaceVars[i]) - P.affine[i]);
    keep.push_back(kSpaceVars[i]);
  }
  gens.push_back(piv * Polynomial::variable(kSpaceVars[pivot]) - Polynomial::constant(Rat(1)));

  IdealBasis elim = eliminate(std::move(gens), {Var::s, Var::t, kSpaceVars[pivot]}, keep);
  if (elim.gens.empty())
    throw AlgebraError(Errc::elimination_not_principal, "elimination ideal is zero");
  if (elim.gens.size() > 1)
    throw AlgebraError(Errc::elimination_not_principal,
                       "elimination ideal needs " + std::to_string(elim.gens.size()) +
                           " generators (degenerate image)");
  if (elim.gens[0].is_constant())
    throw AlgebraError(Errc::elimination_not_principal, "elimination ideal is the unit ideal");

  return finish(elim.gens[0], kSpaceVars[pivot], P);
}

ImplicitSurface implicitize_homogeneous(const SurfaceParam& P) {
  int pivot = -1;
  for (int i = 3; i >= 0; --i)
    if (!P.homogeneous[i].is_zero()) {
      pivot = i;
      break;
    }
  std::vector<Polynomial> minors;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      minors.push_back(Polynomial::variable(kSpaceVars[i]) * P.homogeneous[j] -
                       Polynomial::variable(kSpaceVars[j]) * P.homogeneous[i]);

  // Kill the irrelevant cone and the base-point fibers, then project.
  Polynomial product = Polynomial::variable(Var::s) * Polynomial::variable(Var::t) *
                       Polynomial::variable(Var::u) * P.homogeneous[pivot];
  std::vector<Var> ring{Var::s, Var::t, Var::u, Var::x, Var::y, Var::z, Var::w};
  IdealBasis saturated = saturate_by_poly(minors, ring, product);
  IdealBasis elim = eliminate(saturated.gens, {Var::s, Var::t, Var::u},
                              {Var::x, Var::y, Var::z, Var::w});
  if (elim.gens.empty())
    throw AlgebraError(Errc::elimination_not_principal, "homogeneous elimination ideal is zero");
  Polynomial f = multi_gcd(elim.gens);
  if (f.is_constant())
    throw AlgebraError(Errc::elimination_not_principal,
                       "homogeneous elimination has no hypersurface part");
  return finish(f, Var::w, P);
}

int classic_order(const ImplicitSurface& S, const ProjPoint& X0) {
  if (X0.dim() != 4)
    throw AlgebraError(Errc::invalid_input, "classic_order needs a space point");
  std::vector<std::pair<Var, Rat>> at;
  for (int i = 0; i < 4; ++i) at.emplace_back(kSpaceVars[i], X0.coords[i]);

  std::vector<Polynomial> level{S.f};
  for (int r = 0; r <= S.degree; ++r) {
    for (const auto& g : level)
      if (g.evaluate(at) != 0) return r;
    // next derivative level; duplicates (mixed partials) are harmless here
    std::vector<Polynomial> next;
    for (const auto& g : level)
      for (Var v : kSpaceVars) {
        Polynomial gv = g.derivative(v);
        if (!gv.is_zero()) next.push_back(gv);
      }
    level = std::move(next);
  }
  throw AlgebraError(Errc::internal, "all derivatives vanished up to the degree");
}

}  // namespace musurf
