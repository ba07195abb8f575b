#include "musurf/multiplicity.hpp"

#include <algorithm>
#include <sstream>

#include "musurf/errors.hpp"

namespace musurf {

namespace {

std::vector<Polynomial> drop_zeros(std::span<const Polynomial> fs) {
  std::vector<Polynomial> out;
  for (const auto& f : fs)
    if (!f.is_zero()) out.push_back(f);
  return out;
}

Polynomial translate_to_origin(const Polynomial& f, const ChartPoint& p) {
  Polynomial g = f;
  if (p.c1 != 0) g = g.substitute(p.v1, Polynomial::variable(p.v1) + Polynomial::constant(p.c1));
  if (p.c2 != 0) g = g.substitute(p.v2, Polynomial::variable(p.v2) + Polynomial::constant(p.c2));
  return g;
}

std::vector<Polynomial> maximal_ideal_power(Var v1, Var v2, int n) {
  std::vector<Polynomial> out;
  for (int i = 0; i <= n; ++i)
    out.push_back(Polynomial::term(
        Monomial::var(v1, static_cast<unsigned>(i)) * Monomial::var(v2, static_cast<unsigned>(n - i)),
        Rat(1)));
  return out;
}

bool vanishes_at(const Polynomial& f, const ChartPoint& p) {
  return f.evaluate({{p.v1, p.c1}, {p.v2, p.c2}}) == 0;
}

struct BadDraw {};

// One generic combination, recorded for the audit trail.
Polynomial draw_combo(std::span<const Polynomial> fs, SeededRng& rng, std::string* log) {
  for (int tries = 0; tries < 32; ++tries) {
    Polynomial g;
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < fs.size(); ++i) {
      long c = rng.coeff(kGenericCoeffBound);
      if (i) os << ",";
      os << c;
      g = g + fs[i] * rat(c);
    }
    os << "]";
    if (!g.is_zero()) {
      if (log) *log += os.str();
      return g;
    }
  }
  throw BadDraw{};
}

}  // namespace

std::optional<long> local_colength(std::span<const Polynomial> gens, const ChartPoint& p,
                                   bool* cap_hit) {
  std::vector<Var> ring{p.v1, p.v2};
  std::vector<Polynomial> fs = drop_zeros(gens);
  if (fs.empty()) return std::nullopt;  // zero ideal
  for (const auto& f : fs)
    if (!f.supported_on(ring))
      throw AlgebraError(Errc::invalid_input, "local_colength: generator outside the chart ring");

  // Local unit: the ideal is all of O_p.
  for (const auto& f : fs)
    if (!vanishes_at(f, p)) return 0;

  // Positive-dimensional component through p iff the curves share a factor
  // vanishing there; in that case the quotient is infinite-dimensional.
  Polynomial g = multi_gcd(fs);
  if (!g.is_constant() && vanishes_at(g, p)) return std::nullopt;

  std::vector<Polynomial> shifted;
  shifted.reserve(fs.size());
  for (const auto& f : fs) shifted.push_back(translate_to_origin(f, p));

  // Truncation cap: the local colength is bounded by the Bezout number of
  // two generic combinations.
  long d1 = 1, d2 = 1;
  for (const auto& f : fs) {
    long d = std::max(f.total_degree(), 1);
    if (d >= d1) {
      d2 = d1;
      d1 = d;
    } else {
      d2 = std::max(d2, d);
    }
  }
  long cap = 4 * d1 * d2 + 4;

  MonomialOrder ord = MonomialOrder::grevlex(ring);
  std::optional<long> prev;
  for (long n = 1; n <= cap; ++n) {
    std::vector<Polynomial> trunc = shifted;
    for (auto& m : maximal_ideal_power(p.v1, p.v2, static_cast<int>(n))) trunc.push_back(m);
    auto col = colength(groebner_basis(std::move(trunc), ord));
    if (!col) throw AlgebraError(Errc::internal, "truncated ideal has infinite colength");
    if (prev && *prev == *col) return col;
    prev = col;
  }
  if (cap_hit) *cap_hit = true;
  return std::nullopt;  // cap hit: not m-primary as far as we can tell
}

long reduction_multiplicity(std::span<const Polynomial> gens, const ChartPoint& p,
                            std::uint64_t seed) {
  std::vector<Polynomial> fs = drop_zeros(gens);
  if (fs.empty())
    throw AlgebraError(Errc::non_isolated, "reduction_multiplicity of the zero ideal");
  for (const auto& f : fs)
    if (!vanishes_at(f, p)) return 0;
  Polynomial g = multi_gcd(fs);
  if (!g.is_constant() && vanishes_at(g, p))
    throw AlgebraError(Errc::non_isolated,
                       "generators share a component through the point: " + g.str());

  for (int attempt = 0; attempt < kGenericityRetries; ++attempt) {
    SeededRng rng(mix_seed(seed, 0x7265640000ull + attempt));
    try {
      std::vector<Polynomial> pairA{draw_combo(fs, rng, nullptr), draw_combo(fs, rng, nullptr)};
      std::vector<Polynomial> pairB{draw_combo(fs, rng, nullptr), draw_combo(fs, rng, nullptr)};
      auto ea = local_colength(pairA, p);
      auto eb = local_colength(pairB, p);
      if (!ea || !eb) continue;  // degenerate draw
      if (*ea == *eb) return *ea;
    } catch (const BadDraw&) {
      continue;
    }
  }
  throw AlgebraError(Errc::genericity_failure, "reduction draws failed to agree");
}

long hilbert_multiplicity(std::span<const Polynomial> gens, const ChartPoint& p) {
  std::vector<Polynomial> fs = drop_zeros(gens);
  if (fs.empty())
    throw AlgebraError(Errc::non_isolated, "hilbert_multiplicity of the zero ideal");
  bool unit = false;
  for (const auto& f : fs)
    if (!vanishes_at(f, p)) unit = true;
  if (unit) return 0;
  Polynomial g = multi_gcd(fs);
  if (!g.is_constant() && vanishes_at(g, p))
    throw AlgebraError(Errc::non_isolated,
                       "generators share a component through the point: " + g.str());

  // dim O_p / I^(l+1) for l = 0, 1, ...; stop when the second difference is
  // constant for two consecutive l.
  constexpr int kMaxLevel = 16;
  std::vector<long> dims;
  std::vector<Polynomial> power = fs;  // generators of I^(l+1)
  for (int l = 0; l <= kMaxLevel; ++l) {
    if (l > 0) {
      std::vector<Polynomial> next;
      for (const auto& a : power)
        for (const auto& f : fs) next.push_back(a * f);
      // dedupe exact duplicates to keep the basis lean
      std::sort(next.begin(), next.end(), [](const Polynomial& a, const Polynomial& b) {
        const auto &ta = a.terms(), &tb = b.terms();
        if (ta.size() != tb.size()) return ta.size() < tb.size();
        for (std::size_t i = 0; i < ta.size(); ++i) {
          if (!(ta[i].mono == tb[i].mono)) return storage_less(ta[i].mono, tb[i].mono);
          if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
        }
        return false;
      });
      next.erase(std::unique(next.begin(), next.end()), next.end());
      power = std::move(next);
    }
    auto d = local_colength(power, p);
    if (!d) throw AlgebraError(Errc::non_isolated, "power of the ideal is not m-primary");
    dims.push_back(*d);
    if (dims.size() >= 4) {
      std::size_t k = dims.size();
      long d2a = dims[k - 2] - 2 * dims[k - 3] + dims[k - 4];
      long d2b = dims[k - 1] - 2 * dims[k - 2] + dims[k - 3];
      if (d2a == d2b) return d2a;
    }
  }
  throw AlgebraError(Errc::internal, "Hilbert-Samuel second difference did not stabilize");
}

namespace {

struct ChartTotals {
  long affine = 0;
  long infinity = 0;
  long far_point = 0;
  long total() const { return affine + infinity + far_point; }
  bool operator==(const ChartTotals&) const = default;
};

// Total over the locus points visible in one chart: colength(J) minus the
// colength of the off-locus part (J : K^inf). The saturation uses a single
// generic combination of the locus generators, which removes exactly the
// V(locus) components for generic coefficients; the double-draw agreement
// check guards the draw.
long chart_on_locus_total(std::span<const Polynomial> sources, std::span<const Polynomial> locus,
                          Var v1, Var v2, SeededRng& rng, std::vector<std::string>& draws) {
  std::vector<Polynomial> src = drop_zeros(sources);
  if (src.empty()) return 0;
  std::vector<Var> ring{v1, v2};
  std::string log = "chart(" + std::string(var_name(v1)) + "," + var_name(v2) + "): g=";
  Polynomial g1 = draw_combo(src, rng, &log);
  Polynomial g2 = draw_combo(src, rng, &log);
  IdealBasis j = groebner_basis({g1, g2}, MonomialOrder::grevlex(ring));
  auto col_j = colength(j);
  if (!col_j) throw BadDraw{};  // combinations share a factor
  if (*col_j == 0) {
    draws.push_back(log + " empty");
    return 0;
  }
  std::vector<Polynomial> loc = drop_zeros(locus);
  if (loc.empty()) return *col_j;  // V(0) is everything: nothing is off-locus
  log += " k=";
  Polynomial k_star = draw_combo(loc, rng, &log);
  IdealBasis off = saturate_by_poly(j.gens, ring, k_star);
  auto col_off = colength(off);
  if (!col_off) throw AlgebraError(Errc::internal, "saturation of a zero-dimensional ideal");
  draws.push_back(log);
  return *col_j - *col_off;
}

ChartTotals run_pass(std::span<const Polynomial> sources, std::span<const Polynomial> locus,
                     SeededRng& rng, std::vector<std::string>& draws, bool* cap_hit) {
  ChartTotals out;

  // Chart u = 1: all affine points of the locus.
  std::vector<Polynomial> src_aff, loc_aff;
  for (const auto& f : sources) src_aff.push_back(f.dehomogenize(Var::u));
  for (const auto& f : locus) loc_aff.push_back(f.dehomogenize(Var::u));
  out.affine = chart_on_locus_total(src_aff, loc_aff, Var::s, Var::t, rng, draws);

  // Chart s = 1 restricted to the line u = 0 (the ideal is augmented by u,
  // so affine points already counted above are excluded).
  std::vector<Polynomial> src_inf, loc_inf;
  for (const auto& f : sources) src_inf.push_back(f.dehomogenize(Var::s));
  for (const auto& f : locus) loc_inf.push_back(f.dehomogenize(Var::s));
  loc_inf.push_back(Polynomial::variable(Var::u));
  out.infinity = chart_on_locus_total(src_inf, loc_inf, Var::t, Var::u, rng, draws);

  // The single remaining point (0,1,0), checked directly in the chart t = 1.
  bool far_on_locus = true;
  for (const auto& f : locus) {
    if (f.is_zero()) continue;
    if (f.evaluate({{Var::s, rat(0)}, {Var::t, rat(1)}, {Var::u, rat(0)}}) != 0) {
      far_on_locus = false;
      break;
    }
  }
  if (far_on_locus) {
    std::vector<Polynomial> src_far;
    for (const auto& f : sources) src_far.push_back(f.dehomogenize(Var::t));
    std::vector<Polynomial> fs = drop_zeros(src_far);
    ChartPoint origin{Var::s, Var::u, rat(0), rat(0)};
    bool unit = false;
    for (const auto& f : fs)
      if (!vanishes_at(f, origin)) unit = true;
    if (!fs.empty() && !unit) {
      std::string log = "far(0,1,0): g=";
      Polynomial g1 = draw_combo(fs, rng, &log);
      Polynomial g2 = draw_combo(fs, rng, &log);
      std::vector<Polynomial> pair{g1, g2};
      auto e = local_colength(pair, origin, cap_hit);
      if (!e) throw BadDraw{};  // the combinations picked up a shared factor
      draws.push_back(log);
      out.far_point = *e;
    }
  }
  return out;
}

}  // namespace

MultiplicityReport total_multiplicity_on_locus(std::span<const Polynomial> combo_sources,
                                               std::span<const Polynomial> locus_gens,
                                               std::uint64_t seed) {
  std::vector<Polynomial> sources = drop_zeros(combo_sources);
  std::vector<Polynomial> locus = drop_zeros(locus_gens);
  if (sources.size() < 2)
    throw AlgebraError(Errc::invalid_input, "need at least two curves");
  for (const auto& f : sources) {
    if (!f.supported_on(vars_stu()) || !f.is_homogeneous())
      throw AlgebraError(Errc::invalid_input, "curves must be homogeneous in (s,t,u)");
  }
  for (const auto& f : locus)
    if (!f.supported_on(vars_stu()) || !f.is_homogeneous())
      throw AlgebraError(Errc::invalid_input, "locus generators must be homogeneous in (s,t,u)");
  Polynomial shared = multi_gcd(sources);
  if (!shared.is_constant())
    throw AlgebraError(Errc::common_component, "curves share the factor " + shared.str());

  MultiplicityReport report;
  report.seed = seed;
  for (int attempt = 0; attempt < kGenericityRetries; ++attempt) {
    report.attempts = attempt + 1;
    std::vector<std::string> draws_a, draws_b;
    try {
      SeededRng rng_a(mix_seed(seed, 0xA000 + attempt));
      SeededRng rng_b(mix_seed(seed, 0xB000 + attempt));
      bool cap = false;
      ChartTotals a = run_pass(sources, locus, rng_a, draws_a, &cap);
      ChartTotals b = run_pass(sources, locus, rng_b, draws_b, &cap);
      if (!(a == b)) continue;  // disagreement: redraw
      report.total = a.total();
      report.affine_chart = a.affine;
      report.infinity_chart = a.infinity;
      report.far_point = a.far_point;
      report.agreement = true;
      report.truncation_cap_hit = cap;
      report.draws = draws_a;
      report.draws.insert(report.draws.end(), draws_b.begin(), draws_b.end());
      return report;
    } catch (const BadDraw&) {
      continue;
    }
  }
  throw AlgebraError(Errc::genericity_failure,
                     "generic draws failed to agree after retries");
}

MultiplicityReport projective_total_multiplicity(std::span<const Polynomial> curves,
                                                 std::uint64_t seed) {
  return total_multiplicity_on_locus(curves, curves, seed);
}

}  // namespace musurf
