#pragma once

#include <string>

#include "musurf/surface.hpp"

namespace musurf {

// Implicit equation f(x,y,z,w) = 0 of the surface: homogeneous, integer
// coefficients with content 1, positive leading sign in the storage order.
struct ImplicitSurface {
  Polynomial f;
  int degree = 0;
  // A nontrivial gcd of f with one of its partial derivatives hints at a
  // repeated factor (k-to-1 parametrization suspects are flagged, not
  // resolved).
  bool reducible_suspect = false;
};

// Elimination of the parameters from the reciprocal-augmented graph ideal
// (pivot coordinate inverted, by default d). Verifies f(a,b,c,d) == 0
// exactly before returning.
ImplicitSurface implicitize(const SurfaceParam& P);

// Cross-check route through the homogeneous graph: 2x2 minors of
// [[x,y,z,w],[a,b,c,d]], saturated by the irrelevant/pivot product, then
// elimination of (s,t,u). More robust under base points.
ImplicitSurface implicitize_homogeneous(const SurfaceParam& P);

// Smallest r >= 0 such that some order-r partial derivative of f is nonzero
// at X0. 0 = off-surface, 1 = smooth, >= 2 = singular of that order.
int classic_order(const ImplicitSurface& S, const ProjPoint& X0);

}  // namespace musurf
