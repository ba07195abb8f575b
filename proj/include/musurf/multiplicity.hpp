#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "musurf/groebner.hpp"
#include "musurf/polynomial.hpp"
#include "musurf/rng.hpp"

namespace musurf {

// Genericity draw parameters: coefficients uniform in [-10^4, 10^4], two
// independent draws must agree, at most five rounds before giving up.
inline constexpr long kGenericCoeffBound = 10000;
inline constexpr int kGenericityRetries = 5;

// A rational point in a two-variable affine chart.
struct ChartPoint {
  Var v1, v2;
  Rat c1, c2;
};

// dim_k of the local quotient O_p / I O_p, by translating p to the origin
// and stabilizing colength(I + m^N) over N. nullopt = INFINITE (the local
// ideal is not m-primary, or the truncation cap was hit; the latter sets
// *cap_hit when a flag is supplied).
std::optional<long> local_colength(std::span<const Polynomial> gens, const ChartPoint& p,
                                   bool* cap_hit = nullptr);

// e(I_p, O_p) via a reduction ideal: the local colength of two generic
// combinations of the generators; two independent draws must agree.
long reduction_multiplicity(std::span<const Polynomial> gens, const ChartPoint& p,
                            std::uint64_t seed);

// e(I_p, O_p) as 2! times the leading Hilbert-Samuel coefficient, read off
// exact values of dim O_p / I^{l+1} by second finite differences.
long hilbert_multiplicity(std::span<const Polynomial> gens, const ChartPoint& p);

struct MultiplicityReport {
  long total = 0;
  long affine_chart = 0;    // chart u = 1
  long infinity_chart = 0;  // chart s = 1 restricted to u = 0
  long far_point = 0;       // the single remaining point (0,1,0)
  bool agreement = false;
  std::uint64_t seed = 0;
  int attempts = 0;
  bool truncation_cap_hit = false;
  std::vector<std::string> draws;  // audit trail of the coefficient draws

  bool operator==(const MultiplicityReport&) const = default;
};

// Sum of e(I_p, O_p) over all common zeros p of `curves` in P^2(C), without
// locating any point: per chart, two generic combinations are split into the
// part supported on the locus and the rest, and rational colengths are
// Galois-stable, so complex points and points at infinity are all counted.
MultiplicityReport projective_total_multiplicity(std::span<const Polynomial> curves,
                                                 std::uint64_t seed);

// Generalized core: combinations are drawn from `combo_sources` but only the
// part supported on V(locus_gens) is counted. projective_total_multiplicity
// is the diagonal case; base-point counting uses sources {a,b,c} against
// locus {a,b,c,d}.
MultiplicityReport total_multiplicity_on_locus(std::span<const Polynomial> combo_sources,
                                               std::span<const Polynomial> locus_gens,
                                               std::uint64_t seed);

}  // namespace musurf
