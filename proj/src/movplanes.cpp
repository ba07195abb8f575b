#include "musurf/movplanes.hpp"

#include <algorithm>
#include <map>

#include "musurf/linalg.hpp"

namespace musurf {

namespace {

// Monomials of total degree <= k in (s,t), descending in the storage order.
std::vector<Monomial> st_monomials_upto(int k) {
  std::vector<Monomial> out;
  for (int d = 0; d <= k; ++d)
    for (int i = d; i >= 0; --i)
      out.push_back(Monomial::var(Var::s, static_cast<unsigned>(i)) *
                    Monomial::var(Var::t, static_cast<unsigned>(d - i)));
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return storage_less(b, a);
  });
  return out;
}

Polynomial det3(const std::array<std::array<const Polynomial*, 3>, 3>& m) {
  auto& a = m;
  return *a[0][0] * (*a[1][1] * *a[2][2] - *a[1][2] * *a[2][1]) -
         *a[0][1] * (*a[1][0] * *a[2][2] - *a[1][2] * *a[2][0]) +
         *a[0][2] * (*a[1][0] * *a[2][1] - *a[1][1] * *a[2][0]);
}

bool plane_less(const MovingPlane& a, const MovingPlane& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i < 4; ++i) {
    const auto& ta = a.comps[i].terms();
    const auto& tb = b.comps[i].terms();
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    for (std::size_t j = 0; j < ta.size(); ++j) {
      if (!(ta[j].mono == tb[j].mono)) return storage_less(tb[j].mono, ta[j].mono);
      if (ta[j].coeff != tb[j].coeff) return ta[j].coeff < tb[j].coeff;
    }
  }
  return false;
}

}  // namespace

int MovingPlane::degree() const {
  int d = -1;
  for (const auto& f : comps) d = std::max(d, f.total_degree());
  return d;
}

std::array<Polynomial, 4> MovingPlane::homogeneous(int target) const {
  int n = target < 0 ? degree() : target;
  std::array<Polynomial, 4> out;
  for (int i = 0; i < 4; ++i)
    out[i] = comps[i].is_zero() ? Polynomial::zero() : comps[i].homogenize(Var::u, n);
  return out;
}

Polynomial MovingPlane::residual_on(const SurfaceParam& P) const {
  Polynomial r;
  for (int i = 0; i < 4; ++i) r = r + comps[i] * P.affine[i];
  return r;
}

Polynomial MovingPlane::incidence_curve(const ProjPoint& X0) const {
  if (X0.dim() != 4)
    throw AlgebraError(Errc::invalid_input, "incidence curve needs a space point");
  auto hom = homogeneous();
  Polynomial g;
  for (int i = 0; i < 4; ++i) g = g + hom[i] * X0.coords[i];
  return g;
}

MovingPlane MovingPlane::normalized() const {
  std::vector<Polynomial> nonzero;
  for (const auto& f : comps)
    if (!f.is_zero()) nonzero.push_back(f);
  if (nonzero.empty()) return *this;
  MovingPlane out = *this;
  Polynomial g = multi_gcd(nonzero);
  if (!g.is_constant())
    for (auto& f : out.comps)
      if (!f.is_zero()) f = *f.divide_exact(g);
  // rational content across all four components, signed by the first
  // nonzero component
  Rat content(0);
  for (const auto& f : out.comps)
    for (const auto& t : f.terms()) {
      Rat c = abs(t.coeff);
      if (content == 0) {
        content = c;
      } else {
        Rat num(gcd(content.get_num(), c.get_num()));
        Rat den(lcm(content.get_den(), c.get_den()));
        content = num / den;
      }
    }
  for (const auto& f : out.comps)
    if (!f.is_zero()) {
      if (f.terms()[0].coeff < 0) content = -content;
      break;
    }
  for (auto& f : out.comps) f = f * (Rat(1) / content);
  return out;
}

std::string MovingPlane::str() const {
  return "(" + comps[0].str() + ", " + comps[1].str() + ", " + comps[2].str() + ", " +
         comps[3].str() + ")";
}

bool follows(const MovingPlane& L, const SurfaceParam& P) { return L.residual_on(P).is_zero(); }

std::array<MovingPlane, 3> special_planes(const SurfaceParam& P) {
  const Polynomial& a = P.affine[0];
  const Polynomial& b = P.affine[1];
  const Polynomial& c = P.affine[2];
  const Polynomial& d = P.affine[3];
  Polynomial zero;
  return {MovingPlane{{-d, zero, zero, a}}, MovingPlane{{zero, -d, zero, b}},
          MovingPlane{{zero, zero, -d, c}}};
}

std::vector<MovingPlane> moving_planes_of_degree(const SurfaceParam& P, int k) {
  if (k < 0) return {};
  std::vector<Monomial> monos = st_monomials_upto(k);
  std::size_t block = monos.size();
  std::vector<Monomial> rows_monos = st_monomials_upto(k + P.degree);
  std::map<Monomial, std::size_t, StorageLess> row_of;
  for (std::size_t r = 0; r < rows_monos.size(); ++r) row_of.emplace(rows_monos[r], r);

  RatMat m(rows_monos.size(), RatVec(4 * block, Rat(0)));
  for (int b = 0; b < 4; ++b) {
    for (std::size_t j = 0; j < block; ++j) {
      Polynomial prod = P.affine[b].mul_term(monos[j], Rat(1));
      for (const auto& t : prod.terms()) m[row_of.at(t.mono)][b * block + j] += t.coeff;
    }
  }

  std::vector<MovingPlane> out;
  for (const auto& v : nullspace_basis(m, 4 * block)) {
    MovingPlane plane;
    for (int b = 0; b < 4; ++b) {
      std::vector<Polynomial::Term> terms;
      for (std::size_t j = 0; j < block; ++j)
        if (v[b * block + j] != 0) terms.push_back({monos[j], v[b * block + j]});
      plane.comps[b] = Polynomial::from_terms(std::move(terms));
    }
    out.push_back(plane);
  }
  return out;
}

std::array<Polynomial, 4> outer_product(const MovingPlane& p, const MovingPlane& q,
                                        const MovingPlane& r) {
  auto minor = [&](int c0, int c1, int c2) {
    return det3({{{&p.comps[c0], &p.comps[c1], &p.comps[c2]},
                  {&q.comps[c0], &q.comps[c1], &q.comps[c2]},
                  {&r.comps[c0], &r.comps[c1], &r.comps[c2]}}});
  };
  return {minor(1, 2, 3), -minor(0, 2, 3), minor(0, 1, 3), -minor(0, 1, 2)};
}

namespace {

// Basis of the relation space { h : sum h_i g_i = 0, deg h_i <= hbound },
// one polynomial vector per basis element.
std::vector<std::vector<Polynomial>> plane_relations(const std::vector<MovingPlane>& gens,
                                                     int hbound) {
  std::vector<Monomial> monos = st_monomials_upto(hbound);
  std::size_t block = monos.size();
  int max_deg = 0;
  for (const auto& g : gens) max_deg = std::max(max_deg, g.degree());
  std::vector<Monomial> rows_monos = st_monomials_upto(hbound + max_deg);
  std::map<Monomial, std::size_t, StorageLess> row_of;
  for (std::size_t r = 0; r < rows_monos.size(); ++r) row_of.emplace(rows_monos[r], r);

  RatMat m(4 * rows_monos.size(), RatVec(gens.size() * block, Rat(0)));
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    for (int comp = 0; comp < 4; ++comp)
      for (std::size_t j = 0; j < block; ++j) {
        Polynomial prod = gens[gi].comps[comp].mul_term(monos[j], Rat(1));
        for (const auto& t : prod.terms())
          m[comp * rows_monos.size() + row_of.at(t.mono)][gi * block + j] += t.coeff;
      }

  std::vector<std::vector<Polynomial>> out;
  for (const auto& v : nullspace_basis(m, gens.size() * block)) {
    std::vector<Polynomial> rel(gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::vector<Polynomial::Term> terms;
      for (std::size_t j = 0; j < block; ++j)
        if (v[gi * block + j] != 0) terms.push_back({monos[j], v[gi * block + j]});
      rel[gi] = Polynomial::from_terms(std::move(terms));
    }
    out.push_back(std::move(rel));
  }
  return out;
}

// Solve sum_i u_i R_i = 1 with u_slot a constant, deg u_j <= ebound.
// Returns the constant gamma = u_slot and the full vector u.
std::optional<std::vector<Polynomial>> comaximal_lift(const std::vector<Polynomial>& rel,
                                                      std::size_t slot, int ebound) {
  std::vector<Monomial> monos = st_monomials_upto(ebound);
  std::size_t block = monos.size();
  int max_deg = 0;
  for (const auto& r : rel) max_deg = std::max(max_deg, r.total_degree());
  std::vector<Monomial> rows_monos = st_monomials_upto(ebound + max_deg);
  std::map<Monomial, std::size_t, StorageLess> row_of;
  for (std::size_t r = 0; r < rows_monos.size(); ++r) row_of.emplace(rows_monos[r], r);

  // columns: one scalar for the slot, a block for every other index
  std::vector<std::size_t> col_base(rel.size(), 0);
  std::size_t ncols = 0;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    col_base[i] = ncols;
    ncols += (i == slot) ? 1 : block;
  }
  RatMat m(rows_monos.size(), RatVec(ncols, Rat(0)));
  RatVec rhs(rows_monos.size(), Rat(0));
  rhs[row_of.at(Monomial::one())] = Rat(1);
  for (std::size_t i = 0; i < rel.size(); ++i) {
    std::size_t width = (i == slot) ? 1 : block;
    for (std::size_t j = 0; j < width; ++j) {
      const Monomial& mono = (i == slot) ? Monomial::one() : monos[j];
      Polynomial prod = rel[i].mul_term(mono, Rat(1));
      for (const auto& t : prod.terms()) m[row_of.at(t.mono)][col_base[i] + j] += t.coeff;
    }
  }
  auto x = solve_linear(m, rhs);
  if (!x) return std::nullopt;
  std::vector<Polynomial> u(rel.size());
  for (std::size_t i = 0; i < rel.size(); ++i) {
    std::size_t width = (i == slot) ? 1 : block;
    std::vector<Polynomial::Term> terms;
    for (std::size_t j = 0; j < width; ++j) {
      const Monomial& mono = (i == slot) ? Monomial::one() : monos[j];
      if ((*x)[col_base[i] + j] != 0) terms.push_back({mono, (*x)[col_base[i] + j]});
    }
    u[i] = Polynomial::from_terms(std::move(terms));
  }
  if (u[slot].is_zero()) return std::nullopt;
  return u;
}

// One round of module degree reduction: subtract a polynomial combination
// of the other generators from the worst one so that its top-degree part
// cancels. Keeps the generated module unchanged, drops members that reduce
// to zero. Returns true when something changed.
bool degree_reduce_once(std::vector<MovingPlane>& gens) {
  std::vector<std::size_t> order(gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return gens[a].degree() > gens[b].degree();
  });

  for (std::size_t idx : order) {
    const MovingPlane& g = gens[idx];
    int d = g.degree();
    if (d <= 0) continue;

    // unknown blocks: h_i of degree <= d - deg(g_i) for the other gens
    struct Block {
      std::size_t gen;
      std::vector<Monomial> monos;
      std::size_t col0;
    };
    std::vector<Block> blocks;
    std::size_t ncols = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i == idx || gens[i].degree() < 0 || gens[i].degree() > d) continue;
      Block b{i, st_monomials_upto(d - gens[i].degree()), ncols};
      ncols += b.monos.size();
      blocks.push_back(std::move(b));
    }
    if (ncols == 0) continue;

    // rows: the degree-d coefficients of the four components
    std::map<std::pair<int, Monomial>, std::size_t,
             decltype([](const auto& a, const auto& b) {
               if (a.first != b.first) return a.first < b.first;
               return storage_less(a.second, b.second);
             })>
        row_of;
    auto row_index = [&](int comp, const Monomial& m) {
      return row_of.emplace(std::make_pair(comp, m), row_of.size()).first->second;
    };
    std::vector<std::pair<std::size_t, Rat>> rhs_entries;
    for (int comp = 0; comp < 4; ++comp)
      for (const auto& t : g.comps[comp].terms())
        if (t.mono.degree() == d) rhs_entries.emplace_back(row_index(comp, t.mono), t.coeff);
    if (rhs_entries.empty()) continue;  // degree is carried by lower components only

    std::vector<std::tuple<std::size_t, std::size_t, Rat>> entries;
    for (const auto& b : blocks)
      for (std::size_t j = 0; j < b.monos.size(); ++j)
        for (int comp = 0; comp < 4; ++comp) {
          Polynomial prod = gens[b.gen].comps[comp].mul_term(b.monos[j], Rat(1));
          for (const auto& t : prod.terms())
            if (t.mono.degree() == d)
              entries.emplace_back(row_index(comp, t.mono), b.col0 + j, t.coeff);
        }

    RatMat m(row_of.size(), RatVec(ncols, Rat(0)));
    RatVec rhs(row_of.size(), Rat(0));
    for (const auto& [r, c, v] : entries) m[r][c] += v;
    for (const auto& [r, v] : rhs_entries) rhs[r] += v;
    auto x = solve_linear(m, rhs);
    if (!x) continue;

    MovingPlane replaced = g;
    for (const auto& b : blocks)
      for (std::size_t j = 0; j < b.monos.size(); ++j) {
        const Rat& coeff = (*x)[b.col0 + j];
        if (coeff == 0) continue;
        for (int comp = 0; comp < 4; ++comp)
          replaced.comps[comp] =
              replaced.comps[comp] - gens[b.gen].comps[comp].mul_term(b.monos[j], coeff);
      }
    bool zero = true;
    for (const auto& f : replaced.comps) zero = zero && f.is_zero();
    if (zero) {
      gens.erase(gens.begin() + static_cast<long>(idx));
    } else {
      if (replaced.degree() >= d) continue;  // no drop; keep the original
      gens[idx] = replaced.normalized();
    }
    return true;
  }
  return false;
}

void degree_reduce(std::vector<MovingPlane>& gens) {
  for (int guard = 0; guard < 256 && degree_reduce_once(gens); ++guard) {
  }
  std::sort(gens.begin(), gens.end(), plane_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

// Reduce a generating set of the syzygy module to three elements: drop
// generators that a relation exposes as redundant, otherwise split off one
// generator along a relation R via a lift u with u.R = 1 and a constant
// entry (then { u_slot g_j - u_j g_slot } generates the same module).
std::vector<MovingPlane> reduce_generators(std::vector<MovingPlane> gens, int degree_cap) {
  degree_reduce(gens);
  for (int guard = 0; guard < 16 && gens.size() > 3; ++guard) {
    int hbound = 0;
    for (const auto& g : gens) hbound = std::max(hbound, g.degree());
    hbound += 2;

    // Scan relation degrees upward; a relation with a constant entry drops
    // that generator outright, so keep looking for one before settling for
    // an elimination along the lowest-degree relation found.
    std::vector<std::vector<Polynomial>> rels;
    bool reduced = false;
    for (int hb = 1; hb <= hbound && !reduced; ++hb) {
      std::vector<std::vector<Polynomial>> found = plane_relations(gens, hb);
      if (rels.empty()) rels = found;
      for (const auto& rel : found) {
        for (std::size_t i = 0; i < gens.size() && !reduced; ++i) {
          if (!rel[i].is_zero() && rel[i].is_constant()) {
            gens.erase(gens.begin() + static_cast<long>(i));
            degree_reduce(gens);
            reduced = true;
          }
        }
        if (reduced) break;
      }
    }
    if (reduced) continue;
    if (rels.empty()) break;

    // Otherwise eliminate along a relation, preferring the cheapest lift.
    for (const auto& rel_raw : rels) {
      std::vector<Polynomial> rel = rel_raw;
      std::vector<Polynomial> nonzero;
      for (const auto& r : rel)
        if (!r.is_zero()) nonzero.push_back(r);
      Polynomial content = multi_gcd(nonzero);
      if (!content.is_constant())
        for (auto& r : rel)
          if (!r.is_zero()) r = *r.divide_exact(content);
      for (int eb = 1; eb <= degree_cap && !reduced; ++eb) {
        for (std::size_t slot = 0; slot < gens.size() && !reduced; ++slot) {
          if (rel[slot].is_zero()) continue;
          auto u = comaximal_lift(rel, slot, eb);
          if (!u) continue;
          Rat gamma = (*u)[slot].constant_value();
          std::vector<MovingPlane> next;
          for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j == slot) continue;
            MovingPlane combo;
            bool zero = true;
            for (int c = 0; c < 4; ++c) {
              combo.comps[c] = gens[j].comps[c] * gamma - (*u)[j] * gens[slot].comps[c];
              zero = zero && combo.comps[c].is_zero();
            }
            if (zero) continue;
            MovingPlane norm = combo.normalized();
            if (std::find(next.begin(), next.end(), norm) == next.end())
              next.push_back(norm);
          }
          if (next.size() < 3) continue;  // degenerate elimination; try another lift
          degree_reduce(next);
          if (next.size() < 3) continue;
          gens = std::move(next);
          reduced = true;
        }
      }
      if (reduced) break;
    }
    if (!reduced) break;
  }
  return gens;
}

// Outer product proportional to (a,b,c,d) by a nonzero constant?
std::optional<Rat> proportionality(const std::array<Polynomial, 4>& outer,
                                   const SurfaceParam& P) {
  std::optional<Rat> kappa;
  for (int i = 0; i < 4; ++i) {
    if (P.affine[i].is_zero()) {
      if (!outer[i].is_zero()) return std::nullopt;
      continue;
    }
    if (!kappa) {
      auto q = outer[i].divide_exact(P.affine[i]);
      if (!q || !q->is_constant()) return std::nullopt;
      Rat k = q->constant_value();
      if (k == 0) return std::nullopt;
      kappa = k;
    } else {
      if (!(outer[i] == P.affine[i] * *kappa)) return std::nullopt;
    }
  }
  return kappa;
}

}  // namespace

MuBasisResult mu_basis(const SurfaceParam& P, int degree_bound) {
  MuBasisResult result;
  std::vector<MovingPlane> pool;
  for (int k = 0; k <= degree_bound; ++k) {
    result.searched_degree = k;
    std::size_t old_size = pool.size();
    std::vector<MovingPlane> batch;
    for (const auto& raw : moving_planes_of_degree(P, k)) {
      MovingPlane plane = raw.normalized();
      if (std::find(pool.begin(), pool.end(), plane) == pool.end() &&
          std::find(batch.begin(), batch.end(), plane) == batch.end())
        batch.push_back(plane);
    }
    std::sort(batch.begin(), batch.end(), plane_less);
    pool.insert(pool.end(), batch.begin(), batch.end());
    if (pool.size() == old_size) continue;

    // Greedy: triples ordered by total degree, then by index. Triples made
    // entirely of previously seen planes were already tested.
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        for (std::size_t l = std::max(j + 1, old_size); l < pool.size(); ++l)
          triples.push_back({i, j, l});
    std::stable_sort(triples.begin(), triples.end(),
                     [&](const auto& a, const auto& b) {
                       int da = pool[a[0]].degree() + pool[a[1]].degree() + pool[a[2]].degree();
                       int db = pool[b[0]].degree() + pool[b[1]].degree() + pool[b[2]].degree();
                       if (da != db) return da < db;
                       return a < b;
                     });
    auto accept = [&](const MovingPlane& p, const MovingPlane& q, MovingPlane r,
                      const Rat& kappa) {
      // Rescale the third member so kappa = -1 exactly.
      Rat scale = Rat(-1) / kappa;
      for (auto& f : r.comps) f = f * scale;
      MuBasis mu{p, q, r, Rat(-1)};
      // Verify both invariants by exact recomputation.
      auto check = proportionality(outer_product(mu.p, mu.q, mu.r), P);
      if (!check || *check != Rat(-1) || !follows(mu.p, P) || !follows(mu.q, P) ||
          !follows(mu.r, P))
        throw AlgebraError(Errc::internal, "mu-basis verification failed");
      result.basis = mu;
    };

    for (const auto& idx : triples) {
      auto kappa = proportionality(outer_product(pool[idx[0]], pool[idx[1]], pool[idx[2]]), P);
      if (!kappa) continue;
      accept(pool[idx[0]], pool[idx[1]], pool[idx[2]], *kappa);
      return result;
    }

    // The pool spans every bounded-degree syzygy but a basis need not appear
    // among its triples: reduce the generating set instead.
    if (pool.size() > 3) {
      std::vector<MovingPlane> reduced = reduce_generators(pool, k + 4);
      if (reduced.size() == 3) {
        std::sort(reduced.begin(), reduced.end(), plane_less);
        auto kappa = proportionality(outer_product(reduced[0], reduced[1], reduced[2]), P);
        if (kappa) {
          accept(reduced[0], reduced[1], reduced[2], *kappa);
          return result;
        }
      }
    }
  }
  result.failure = Errc::degree_bound_exhausted;
  result.message = "no verified triple within degree bound " + std::to_string(degree_bound);
  result.pool = pool;
  return result;
}

IdealBasis moving_surface_ideal(const MuBasis& mu) {
  auto affine_surface = [](const MovingPlane& L) {
    return L.comps[0] * Polynomial::variable(Var::x) + L.comps[1] * Polynomial::variable(Var::y) +
           L.comps[2] * Polynomial::variable(Var::z) + L.comps[3];
  };
  std::vector<Polynomial> gens{affine_surface(mu.p), affine_surface(mu.q), affine_surface(mu.r)};
  return groebner_basis(std::move(gens), MonomialOrder::grevlex(vars_xyzst()));
}

bool in_moving_surface_ideal(const Polynomial& f, const IdealBasis& ideal) {
  if (!f.supported_on(vars_xyzst()))
    throw AlgebraError(Errc::invalid_input, "moving surfaces live in (x,y,z,s,t)");
  return in_ideal(f, ideal);
}

bool in_moving_surface_ideal(const Polynomial& f, const MuBasis& mu) {
  return in_moving_surface_ideal(f, moving_surface_ideal(mu));
}

std::optional<std::array<Polynomial, 3>> module_membership(const MovingPlane& L,
                                                           const MuBasis& mu) {
  const std::array<const MovingPlane*, 3> basis{&mu.p, &mu.q, &mu.r};
  int max_basis_deg = std::max({mu.p.degree(), mu.q.degree(), mu.r.degree(), 0});
  int cap = std::max(L.degree(), 0) + 2 * max_basis_deg + 4;
  for (int bound = 0; bound <= cap; ++bound) {
    std::vector<Monomial> monos = st_monomials_upto(bound);
    std::size_t block = monos.size();
    int row_degree = std::max(bound + max_basis_deg, L.degree());
    std::vector<Monomial> rows_monos = st_monomials_upto(row_degree);
    std::map<Monomial, std::size_t, StorageLess> row_of;
    for (std::size_t r = 0; r < rows_monos.size(); ++r) row_of.emplace(rows_monos[r], r);

    std::size_t rows = 4 * rows_monos.size();
    RatMat m(rows, RatVec(3 * block, Rat(0)));
    RatVec rhs(rows, Rat(0));
    for (int comp = 0; comp < 4; ++comp) {
      for (const auto& t : L.comps[comp].terms())
        rhs[comp * rows_monos.size() + row_of.at(t.mono)] = t.coeff;
      for (int b = 0; b < 3; ++b) {
        for (std::size_t j = 0; j < block; ++j) {
          Polynomial prod = basis[b]->comps[comp].mul_term(monos[j], Rat(1));
          for (const auto& t : prod.terms())
            m[comp * rows_monos.size() + row_of.at(t.mono)][b * block + j] += t.coeff;
        }
      }
    }
    auto x = solve_linear(m, rhs);
    if (!x) continue;
    std::array<Polynomial, 3> h;
    for (int b = 0; b < 3; ++b) {
      std::vector<Polynomial::Term> terms;
      for (std::size_t j = 0; j < block; ++j)
        if ((*x)[b * block + j] != 0) terms.push_back({monos[j], (*x)[b * block + j]});
      h[b] = Polynomial::from_terms(std::move(terms));
    }
    // exact recheck
    bool ok = true;
    for (int comp = 0; comp < 4 && ok; ++comp) {
      Polynomial sum = h[0] * mu.p.comps[comp] + h[1] * mu.q.comps[comp] + h[2] * mu.r.comps[comp];
      ok = (sum == L.comps[comp]);
    }
    if (ok) return h;
  }
  return std::nullopt;
}

MovingPlane random_following_plane(const MuBasis& mu, SeededRng& rng, int weight_degree) {
  auto random_weight = [&]() {
    std::vector<Polynomial::Term> terms;
    for (const auto& m : st_monomials_upto(weight_degree)) {
      long c = rng.coeff(5);
      if (c != 0) terms.push_back({m, rat(c)});
    }
    return Polynomial::from_terms(std::move(terms));
  };
  while (true) {
    Polynomial h1 = random_weight(), h2 = random_weight(), h3 = random_weight();
    MovingPlane L;
    for (int i = 0; i < 4; ++i)
      L.comps[i] = h1 * mu.p.comps[i] + h2 * mu.q.comps[i] + h3 * mu.r.comps[i];
    if (L.degree() >= 0) return L;
  }
}

}  // namespace musurf
