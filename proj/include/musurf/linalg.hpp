#pragma once

#include <optional>
#include <vector>

#include "musurf/rat.hpp"

namespace musurf {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

// Reduced row echelon form in place; returns the pivot column of each row.
std::vector<std::size_t> rref(RatMat& m);

// Basis of the right nullspace of an m x n matrix, canonical w.r.t. RREF
// free-column order. Deterministic.
std::vector<RatVec> nullspace_basis(const RatMat& m, std::size_t cols);

// Any solution of A x = b, or nullopt when inconsistent. Free variables are
// set to zero.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

}  // namespace musurf
