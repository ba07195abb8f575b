#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "musurf/errors.hpp"
#include "musurf/groebner.hpp"
#include "musurf/rng.hpp"
#include "musurf/surface.hpp"

namespace musurf {

// A moving plane A(s,t)x + B(s,t)y + C(s,t)z + D(s,t)w, stored by its
// affine coefficient quadruple.
struct MovingPlane {
  std::array<Polynomial, 4> comps;  // A, B, C, D in (s,t)

  int degree() const;

  // Component-wise homogenization to a common degree (defaults to degree()).
  std::array<Polynomial, 4> homogeneous(int target = -1) const;

  // A(s,t)a + B b + C c + D d, the residual of the follow condition.
  Polynomial residual_on(const SurfaceParam& P) const;

  // Incidence curve L(s,t,u) . X0, homogeneous in (s,t,u).
  Polynomial incidence_curve(const ProjPoint& X0) const;

  // Divide out the common content of the four components; sign-normalize.
  MovingPlane normalized() const;

  bool operator==(const MovingPlane& o) const = default;
  std::string str() const;
};

bool follows(const MovingPlane& L, const SurfaceParam& P);

// The three tautological planes (-d,0,0,a), (0,-d,0,b), (0,0,-d,c).
std::array<MovingPlane, 3> special_planes(const SurfaceParam& P);

// Rational-vector-space basis of the moving planes of component degree <= k
// following P: the exact nullspace of the coefficient-matching system.
std::vector<MovingPlane> moving_planes_of_degree(const SurfaceParam& P, int k);

// Signed 3x3 minors of the 3x4 matrix with rows p,q,r (+,-,+,- pattern).
std::array<Polynomial, 4> outer_product(const MovingPlane& p, const MovingPlane& q,
                                        const MovingPlane& r);

struct MuBasis {
  MovingPlane p, q, r;
  Rat kappa;  // outer_product(p,q,r) = kappa * (a,b,c,d); normalized to -1
};

struct MuBasisResult {
  std::optional<MuBasis> basis;
  // Diagnostics on failure: the search bound and the lowest-degree plane
  // pool that was examined.
  Errc failure = Errc::degree_bound_exhausted;
  std::string message;
  int searched_degree = -1;
  std::vector<MovingPlane> pool;
};

// Degree-bounded search: enumerate nullspace planes for k = 0..bound,
// greedily test triples of low total degree, accept the first one whose
// outer product is a nonzero constant multiple of (a,b,c,d). The returned
// basis is rescaled so kappa = -1 exactly.
MuBasisResult mu_basis(const SurfaceParam& P, int degree_bound);

inline int default_degree_bound(const SurfaceParam& P) { return 2 * P.degree; }

// Groebner basis of <p.(x,y,z,1), q.(x,y,z,1), r.(x,y,z,1)> in (x,y,z,s,t).
IdealBasis moving_surface_ideal(const MuBasis& mu);

// Membership of f(x,y,z,s,t) in the moving-surface ideal. Valid for
// base-point-free surfaces (caller asserts).
bool in_moving_surface_ideal(const Polynomial& f, const MuBasis& mu);
bool in_moving_surface_ideal(const Polynomial& f, const IdealBasis& ideal);

// Solve L = h1 p + h2 q + h3 r over Q[s,t] with bounded coefficient degrees.
std::optional<std::array<Polynomial, 3>> module_membership(const MovingPlane& L,
                                                           const MuBasis& mu);

// Random plane h1 p + h2 q + h3 r with small polynomial weights; follows P
// by construction.
MovingPlane random_following_plane(const MuBasis& mu, SeededRng& rng, int weight_degree = 1);

}  // namespace musurf
