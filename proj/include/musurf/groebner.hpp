#pragma once

#include <optional>
#include <span>
#include <vector>

#include "musurf/order.hpp"
#include "musurf/polynomial.hpp"

namespace musurf {

// A generating set of an ideal together with its ring (the order's variable
// list). When is_groebner holds, gens is the reduced Groebner basis (monic,
// unique for the ideal and order) and staircase carries the leading
// monomials.
struct IdealBasis {
  std::vector<Polynomial> gens;
  MonomialOrder order;
  bool is_groebner = false;
  std::vector<Monomial> staircase;
};

// Buchberger with the coprime-leading-term and chain criteria, sugar pair
// selection, and integer-content clearing during reductions. Returns the
// reduced basis. The zero ideal yields an empty basis.
IdealBasis groebner_basis(std::vector<Polynomial> gens, MonomialOrder order);

// Unique remainder modulo a Groebner basis; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const IdealBasis& basis);

bool in_ideal(const Polynomial& f, const IdealBasis& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Recomputes every S-polynomial and checks it reduces to zero.
bool verify_groebner(const IdealBasis& basis);

// Number of standard monomials (monomials outside the leading-term
// staircase); nullopt when the quotient is infinite-dimensional. Detection:
// a ring variable with no pure power among the leading terms.
std::optional<long> colength(const IdealBasis& basis);

// Elimination ideal: Groebner basis w.r.t. a block order with `drop` first,
// restricted to the generators free of `drop`. The result lives in `keep`.
IdealBasis eliminate(std::vector<Polynomial> gens, const std::vector<Var>& drop,
                     const std::vector<Var>& keep);

// (gens : f^infinity) via the auxiliary-variable method: adjoin aux, add
// 1 - aux*f, eliminate aux.
IdealBasis saturate_by_poly(std::span<const Polynomial> gens, const std::vector<Var>& ring,
                            const Polynomial& f);

IdealBasis ideal_intersect(std::span<const Polynomial> a, std::span<const Polynomial> b,
                           const std::vector<Var>& ring);

// Saturation (I : J^infinity) of I by the ideal generated by J, computed as
// the intersection of the single-generator saturations. Idempotent.
IdealBasis colon_saturate(const IdealBasis& ideal, std::span<const Polynomial> j_gens);

}  // namespace musurf
