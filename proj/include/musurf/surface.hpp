#pragma once

#include <array>
#include <string>
#include <vector>

#include "musurf/polynomial.hpp"

namespace musurf {

// Exact-rational homogeneous coordinates: 3 entries for points of the
// parameter plane, 4 for space points. Equality is proportionality; the
// canonical representative normalizes the first nonzero coordinate to 1.
struct ProjPoint {
  std::vector<Rat> coords;

  static ProjPoint space(Rat x, Rat y, Rat z, Rat w);
  static ProjPoint param(Rat s, Rat t, Rat u);

  std::size_t dim() const { return coords.size(); }
  bool is_space_point() const { return coords.size() == 4; }

  // Index of the first nonzero coordinate.
  std::size_t pivot_index() const;
  ProjPoint normalized() const;
  ProjPoint scaled(const Rat& alpha) const;

  bool operator==(const ProjPoint& o) const;
  std::string str() const;
};

// The parametrization quadruple (a,b,c,d), gcd 1, kept in both the affine
// (s,t) form and the homogeneous (s,t,u) form of common degree n.
struct SurfaceParam {
  std::array<Polynomial, 4> affine;       // in (s,t)
  std::array<Polynomial, 4> homogeneous;  // in (s,t,u), all of degree n
  int degree = 0;                         // n
  bool content_removed = false;           // gcd was divided out of the input

  // Accepts affine (s,t) polynomials, or homogeneous (s,t,u) ones of one
  // common degree. Divides out a nontrivial gcd(a,b,c,d) and flags it.
  static SurfaceParam make(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                           const Polynomial& d);

  // Image of a rational parameter point (s0, t0) (affine chart u = 1).
  ProjPoint image_of(const Rat& s0, const Rat& t0) const;
};

}  // namespace musurf
