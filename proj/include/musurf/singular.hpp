#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "musurf/movplanes.hpp"
#include "musurf/multiplicity.hpp"
#include "musurf/surface.hpp"

namespace musurf {

// lambda is the total multiplicity of the base locus: the sum over base
// points p of e(<a,b,c>_p, O_p), computed chart by chart with the support
// split against <a,b,c,d>. set_count is the plain number of distinct base
// points over C, reported alongside (the two readings of "number of base
// points").
struct BasePointReport {
  long lambda = 0;
  long set_count = 0;
  bool is_base_point_free = false;
  MultiplicityReport mult;
  IdealBasis base_locus;  // Groebner basis of homogeneous <a,b,c,d>
  std::uint64_t seed = 0;
};

BasePointReport base_points(const SurfaceParam& P, std::uint64_t seed);

struct SingularityReport {
  ProjPoint point;
  long r = 0;            // the order: 0 off-surface, 1 smooth, >= 2 singular
  long lambda_used = 0;
  long total_count = 0;  // = r + lambda
  int pivot_coordinate = 0;
  std::vector<Polynomial> difference_curves;  // homogeneous, zeros dropped
  MultiplicityReport mult;
};

// Order of X0 on P by the parametric count: pick a nonzero pivot coordinate
// (first nonzero unless forced), form the three difference curves, count
// their intersection multiplicity over P^2(C), subtract lambda.
SingularityReport sing_order(const SurfaceParam& P, const ProjPoint& X0, std::uint64_t seed,
                             std::optional<int> pivot = std::nullopt);

// Variant reusing a known lambda (the CLI computes base_points once).
SingularityReport sing_order_with_lambda(const SurfaceParam& P, const ProjPoint& X0,
                                         std::uint64_t seed, long lambda,
                                         std::optional<int> pivot = std::nullopt);

// n^2 - lambda.
long implicit_degree(const SurfaceParam& P, std::uint64_t seed);

struct CountCheck {
  long count = 0;
  bool matches_r = false;
  bool vacuous = false;    // an added curve was identically zero
  bool augmented = false;  // see mu_basis_order
  long r = 0;
  // mu_basis_order only: the literal three-curve total, when that system has
  // finitely many zeros. It can exceed r for a legitimate basis whose
  // incidence curves pick up extra intersections along u = 0.
  std::optional<long> standalone_count;
};

// Three difference curves plus L(s,t,u).X0 = 0: the total must equal r.
// Requires a base-point-free surface and a following plane.
CountCheck verify_moving_plane_count(const SurfaceParam& P, const ProjPoint& X0,
                                     const MovingPlane& L, std::uint64_t seed);

// Incidence count of a verified mu-basis. The affine incidence ideal is
// basis-independent, but homogenizing basis members to a common component
// degree can create extra intersections on the line u = 0 (or even a shared
// u factor), so the literal three-curve total depends on the basis chosen.
// The counted system is therefore the basis incidences together with the
// special-plane incidences (the difference curves) — the six-equation system
// whose count is r — while the literal three-curve total is reported as
// standalone_count when finite; `augmented` flags a discrepancy.
CountCheck mu_basis_order(const SurfaceParam& P, const ProjPoint& X0, const MuBasis& mu,
                          std::uint64_t seed);

// Three difference curves plus the moving surface f evaluated at X0. f lives
// in (x,y,z,w,s,t) or (x,y,z,w,s,t,u); it is block-homogenized in (x,y,z,w)
// and checked to follow P before counting.
CountCheck verify_moving_surface_count(const SurfaceParam& P, const ProjPoint& X0,
                                       const Polynomial& f, std::uint64_t seed);

}  // namespace musurf
