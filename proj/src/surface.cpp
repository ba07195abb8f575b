#include "musurf/surface.hpp"

#include <algorithm>

#include "musurf/errors.hpp"

namespace musurf {

ProjPoint ProjPoint::space(Rat x, Rat y, Rat z, Rat w) {
  ProjPoint p{{std::move(x), std::move(y), std::move(z), std::move(w)}};
  p.pivot_index();  // validates not all zero
  return p;
}

ProjPoint ProjPoint::param(Rat s, Rat t, Rat u) {
  ProjPoint p{{std::move(s), std::move(t), std::move(u)}};
  p.pivot_index();
  return p;
}

std::size_t ProjPoint::pivot_index() const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) return i;
  throw AlgebraError(Errc::invalid_input, "projective point with all coordinates zero");
}

ProjPoint ProjPoint::normalized() const {
  Rat lead = coords[pivot_index()];
  ProjPoint p = *this;
  for (auto& c : p.coords) c /= lead;
  return p;
}

ProjPoint ProjPoint::scaled(const Rat& alpha) const {
  if (alpha == 0) throw AlgebraError(Errc::invalid_input, "scaling a point by zero");
  ProjPoint p = *this;
  for (auto& c : p.coords) c *= alpha;
  return p;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
  if (coords.size() != o.coords.size()) return false;
  return normalized().coords == o.normalized().coords;
}

std::string ProjPoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += rat_str(coords[i]);
  }
  return out + ")";
}

SurfaceParam SurfaceParam::make(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                                const Polynomial& d) {
  std::array<Polynomial, 4> input{a, b, c, d};
  bool any_nonzero = false;
  bool uses_u = false;
  for (const auto& f : input) {
    if (!f.supported_on(vars_stu()))
      throw AlgebraError(Errc::invalid_surface, "surface polynomials must live in (s,t,u)");
    any_nonzero = any_nonzero || !f.is_zero();
    uses_u = uses_u || f.uses_var(Var::u);
  }
  if (!any_nonzero) throw AlgebraError(Errc::invalid_surface, "(a,b,c,d) = (0,0,0,0)");

  SurfaceParam out;
  if (uses_u) {
    int deg = -1;
    for (const auto& f : input) {
      if (f.is_zero()) continue;
      if (!f.is_homogeneous())
        throw AlgebraError(Errc::invalid_surface,
                           "input uses u but is not homogeneous: " + f.str());
      if (deg >= 0 && f.total_degree() != deg)
        throw AlgebraError(Errc::invalid_surface, "homogeneous inputs of unequal degree");
      deg = f.total_degree();
    }
    for (std::size_t i = 0; i < 4; ++i) out.affine[i] = input[i].dehomogenize(Var::u);
  } else {
    out.affine = input;
  }

  std::vector<Polynomial> nonzero;
  for (const auto& f : out.affine)
    if (!f.is_zero()) nonzero.push_back(f);
  Polynomial g = multi_gcd(nonzero);
  if (!g.is_constant()) {
    for (auto& f : out.affine)
      if (!f.is_zero()) f = *f.divide_exact(g);
    out.content_removed = true;
  }

  int n = 0;
  for (const auto& f : out.affine) n = std::max(n, f.total_degree());
  out.degree = n;
  for (std::size_t i = 0; i < 4; ++i)
    out.homogeneous[i] = out.affine[i].is_zero() ? Polynomial::zero()
                                                 : out.affine[i].homogenize(Var::u, n);
  if (uses_u && !out.content_removed) {
    for (std::size_t i = 0; i < 4; ++i)
      if (!(out.homogeneous[i] == input[i])) out.content_removed = true;  // common u factor
  }
  return out;
}

ProjPoint SurfaceParam::image_of(const Rat& s0, const Rat& t0) const {
  std::vector<std::pair<Var, Rat>> at{{Var::s, s0}, {Var::t, t0}};
  return ProjPoint::space(affine[0].evaluate(at), affine[1].evaluate(at), affine[2].evaluate(at),
                          affine[3].evaluate(at));
}

}  // namespace musurf
