#include "musurf/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <utility>

#include "musurf/errors.hpp"

namespace musurf {

namespace {

struct OrdCmp {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(a, b); }
};

using OrdMap = std::map<Monomial, Rat, OrdCmp>;

OrdMap to_map(const Polynomial& f, const MonomialOrder& ord) {
  OrdMap m(OrdCmp{&ord});
  for (const auto& t : f.terms()) m.emplace(t.mono, t.coeff);
  return m;
}

Polynomial from_map(const OrdMap& m) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(m.size());
  for (const auto& [mono, c] : m) terms.push_back({mono, c});
  return Polynomial::from_terms(std::move(terms));
}

void map_sub_scaled(OrdMap& m, const Polynomial& g, const Monomial& shift, const Rat& c) {
  for (const auto& t : g.terms()) {
    Monomial mono = t.mono * shift;
    Rat delta = t.coeff * c;
    auto it = m.find(mono);
    if (it == m.end()) {
      if (delta != 0) m.emplace(mono, -delta);
    } else {
      it->second -= delta;
      if (it->second == 0) m.erase(it);
    }
  }
}

void map_scale(OrdMap& m, const Rat& c) {
  for (auto& [mono, coeff] : m) coeff *= c;
}

Int map_int_content(const OrdMap& a, const OrdMap& b) {
  Int g(0);
  for (const auto& [mono, c] : a) {
    g = gcd(g, c.get_num());
    if (g == 1) return g;
  }
  for (const auto& [mono, c] : b) {
    g = gcd(g, c.get_num());
    if (g == 1) return g;
  }
  return g;
}

struct GbEntry {
  Polynomial p;  // integer-primitive
  Monomial lm;
  Rat lc;
  int sugar;
};

const GbEntry* find_reducer(const std::vector<GbEntry>& basis, const Monomial& m) {
  for (const auto& e : basis)
    if (e.lm.divides(m)) return &e;
  return nullptr;
}

// Full reduction used while building the basis. Works over integers: every
// elimination step scales the whole remainder by the reducer's leading
// coefficient and strips the common integer content afterwards, so the
// result is the normal form up to a positive rational factor (which is all
// Buchberger needs).
Polynomial reduce_for_basis(const Polynomial& f, const std::vector<GbEntry>& basis,
                            const MonomialOrder& ord, int& sugar) {
  OrdMap work = to_map(f.primitive_part(), ord);
  OrdMap rem(OrdCmp{&ord});
  while (!work.empty()) {
    auto lead = std::prev(work.end());
    const GbEntry* g = find_reducer(basis, lead->first);
    if (!g) {
      rem.emplace(lead->first, lead->second);
      work.erase(lead);
      continue;
    }
    Monomial shift = g->lm.divide_into(lead->first);
    sugar = std::max(sugar, g->sugar + shift.degree());
    Rat head = lead->second;
    if (g->lc != 1) {
      map_scale(work, g->lc);
      map_scale(rem, g->lc);
    }
    map_sub_scaled(work, g->p, shift, head);
    Int content = map_int_content(work, rem);
    if (content > 1) {
      Rat inv(Int(1), content);
      inv.canonicalize();
      map_scale(work, inv);
      map_scale(rem, inv);
    }
  }
  return from_map(rem).primitive_part();
}

Polynomial reduce_exact(const Polynomial& f, const std::vector<GbEntry>& basis,
                        const MonomialOrder& ord) {
  OrdMap work = to_map(f, ord);
  OrdMap rem(OrdCmp{&ord});
  while (!work.empty()) {
    auto lead = std::prev(work.end());
    const GbEntry* g = find_reducer(basis, lead->first);
    if (!g) {
      rem.emplace(lead->first, lead->second);
      work.erase(lead);
      continue;
    }
    Monomial shift = g->lm.divide_into(lead->first);
    map_sub_scaled(work, g->p, shift, lead->second / g->lc);
  }
  return from_map(rem);
}

struct SPair {
  int i, j;
  Monomial lcm;
  int lcm_deg;
  int sugar;
};

struct SPairCmp {
  const MonomialOrder* ord;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
    if (!(a.lcm == b.lcm)) return ord->less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::vector<GbEntry> make_entries(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
  std::vector<GbEntry> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial p = g.primitive_part();
    const auto& lt = p.leading_term(ord);
    out.push_back({p, lt.mono, lt.coeff, p.total_degree()});
  }
  return out;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const auto& lf = f.leading_term(ord);
  const auto& lg = g.leading_term(ord);
  Monomial L = Monomial::lcm(lf.mono, lg.mono);
  return f.mul_term(lf.mono.divide_into(L), Rat(1) / lf.coeff) -
         g.mul_term(lg.mono.divide_into(L), Rat(1) / lg.coeff);
}

IdealBasis groebner_basis(std::vector<Polynomial> gens, MonomialOrder order) {
  for (const auto& g : gens)
    if (!g.supported_on(order.vars))
      throw AlgebraError(Errc::invalid_input, "generator not supported on the ring: " + g.str());

  std::vector<GbEntry> basis = make_entries(gens, order);
  IdealBasis result{{}, order, true, {}};
  if (basis.empty()) return result;

  SPairCmp cmp{&order};
  std::set<SPair, SPairCmp> queue(cmp);
  std::set<std::pair<int, int>> pending;

  auto push_pair = [&](int i, int j) {
    const auto& a = basis[i];
    const auto& b = basis[j];
    Monomial L = Monomial::lcm(a.lm, b.lm);
    int sugar = std::max(a.sugar + L.degree() - a.lm.degree(),
                         b.sugar + L.degree() - b.lm.degree());
    queue.insert(SPair{i, j, L, L.degree(), sugar});
    pending.emplace(i, j);
  };

  for (int j = 1; j < static_cast<int>(basis.size()); ++j)
    for (int i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    SPair pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pair.i, pair.j});

    const auto& a = basis[pair.i];
    const auto& b = basis[pair.j];
    if (a.lm.coprime_with(b.lm)) continue;  // Buchberger's first criterion

    // Chain criterion: a third leading monomial divides the lcm and both
    // connecting pairs are already handled.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].lm.divides(pair.lcm)) continue;
      auto key1 = std::minmax(pair.i, k);
      auto key2 = std::minmax(pair.j, k);
      if (!pending.count({key1.first, key1.second}) && !pending.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial s = s_polynomial(a.p, b.p, order);
    int sugar = pair.sugar;
    Polynomial h = reduce_for_basis(s, basis, order, sugar);
    if (h.is_zero()) continue;
    const auto& lt = h.leading_term(order);
    basis.push_back({h, lt.mono, lt.coeff, sugar});
    int idx = static_cast<int>(basis.size()) - 1;
    for (int i = 0; i < idx; ++i) push_pair(i, idx);
  }

  // Minimalize: drop entries whose leading monomial is divisible by another
  // kept one (ties by index).
  std::vector<int> order_idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = static_cast<int>(i);
  std::sort(order_idx.begin(), order_idx.end(), [&](int i, int j) {
    if (!(basis[i].lm == basis[j].lm)) return order.less(basis[i].lm, basis[j].lm);
    return i < j;
  });
  std::vector<GbEntry> minimal;
  for (int idx : order_idx) {
    bool divisible = false;
    for (const auto& kept : minimal)
      if (kept.lm.divides(basis[idx].lm)) {
        divisible = true;
        break;
      }
    if (!divisible) minimal.push_back(basis[idx]);
  }

  // Inter-reduce tails to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<GbEntry> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = reduce_exact(minimal[i].p, others, order).monic(order);
      if (!(r == minimal[i].p.monic(order))) changed = true;
      Polynomial rp = r;
      const auto& lt = rp.leading_term(order);
      minimal[i] = {rp, lt.mono, lt.coeff, rp.total_degree()};
    }
  }

  for (auto& e : minimal) {
    Polynomial m = e.p.monic(order);
    result.gens.push_back(m);
    result.staircase.push_back(e.lm);
  }
  return result;
}

Polynomial normal_form(const Polynomial& f, const IdealBasis& basis) {
  if (!basis.is_groebner)
    throw AlgebraError(Errc::invalid_input, "normal_form requires a Groebner basis");
  if (!f.supported_on(basis.order.vars))
    throw AlgebraError(Errc::invalid_input, "polynomial not supported on the basis ring");
  auto entries = make_entries(basis.gens, basis.order);
  return reduce_exact(f, entries, basis.order);
}

bool in_ideal(const Polynomial& f, const IdealBasis& basis) {
  return normal_form(f, basis).is_zero();
}

bool verify_groebner(const IdealBasis& basis) {
  if (!basis.is_groebner) return false;
  for (std::size_t i = 0; i < basis.gens.size(); ++i)
    for (std::size_t j = i + 1; j < basis.gens.size(); ++j) {
      Polynomial s = s_polynomial(basis.gens[i], basis.gens[j], basis.order);
      if (!normal_form(s, basis).is_zero()) return false;
    }
  return true;
}

std::optional<long> colength(const IdealBasis& basis) {
  if (!basis.is_groebner)
    throw AlgebraError(Errc::invalid_input, "colength requires a Groebner basis");
  const auto& vars = basis.order.vars;
  for (const auto& g : basis.gens)
    if (!g.is_zero() && g.is_constant()) return 0;
  if (basis.gens.empty()) return vars.empty() ? std::optional<long>(1) : std::nullopt;

  // Finiteness: every ring variable needs a pure power among the leading
  // monomials.
  std::vector<int> bound(vars.size(), -1);
  for (std::size_t vi = 0; vi < vars.size(); ++vi) {
    for (const auto& lm : basis.staircase) {
      bool pure = true;
      for (std::size_t k = 0; k < kVarCount; ++k) {
        Var kv = static_cast<Var>(k);
        if (lm.e[k] != 0 && kv != vars[vi]) {
          pure = false;
          break;
        }
      }
      if (!pure) continue;
      int e = lm[vars[vi]];
      if (bound[vi] < 0 || e < bound[vi]) bound[vi] = e;
    }
    if (bound[vi] < 0) return std::nullopt;
  }

  // Standard monomials live in the box of the minimal pure powers.
  long count = 0;
  Monomial current;
  auto rec = [&](auto&& self, std::size_t vi) -> void {
    if (vi == vars.size()) {
      for (const auto& lm : basis.staircase)
        if (lm.divides(current)) return;
      ++count;
      return;
    }
    for (int e = 0; e < bound[vi]; ++e) {
      current[vars[vi]] = static_cast<std::uint16_t>(e);
      self(self, vi + 1);
    }
    current[vars[vi]] = 0;
  };
  rec(rec, 0);
  return count;
}

IdealBasis eliminate(std::vector<Polynomial> gens, const std::vector<Var>& drop,
                     const std::vector<Var>& keep) {
  IdealBasis gb = groebner_basis(std::move(gens), MonomialOrder::block_elim(drop, keep));
  IdealBasis out{{}, MonomialOrder::grevlex(keep), true, {}};
  for (std::size_t i = 0; i < gb.gens.size(); ++i) {
    bool free_of_drop = true;
    for (Var v : drop)
      if (gb.gens[i].uses_var(v)) {
        free_of_drop = false;
        break;
      }
    if (free_of_drop) {
      out.gens.push_back(gb.gens[i]);
      out.staircase.push_back(gb.gens[i].leading_term(out.order).mono);
    }
  }
  return out;
}

IdealBasis saturate_by_poly(std::span<const Polynomial> gens, const std::vector<Var>& ring,
                            const Polynomial& f) {
  if (f.is_zero())
    throw AlgebraError(Errc::invalid_input, "saturation by the zero polynomial");
  if (f.is_constant()) return groebner_basis({gens.begin(), gens.end()}, MonomialOrder::grevlex(ring));
  std::vector<Polynomial> extended(gens.begin(), gens.end());
  extended.push_back(Polynomial::constant(Rat(1)) - Polynomial::variable(Var::aux) * f);
  return eliminate(std::move(extended), {Var::aux}, ring);
}

IdealBasis ideal_intersect(std::span<const Polynomial> a, std::span<const Polynomial> b,
                           const std::vector<Var>& ring) {
  Polynomial tau = Polynomial::variable(Var::aux);
  Polynomial one_minus = Polynomial::constant(Rat(1)) - tau;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(tau * f);
  for (const auto& g : b) gens.push_back(one_minus * g);
  return eliminate(std::move(gens), {Var::aux}, ring);
}

IdealBasis colon_saturate(const IdealBasis& ideal, std::span<const Polynomial> j_gens) {
  const auto& ring = ideal.order.vars;
  std::vector<Polynomial> nonzero;
  for (const auto& j : j_gens)
    if (!j.is_zero()) nonzero.push_back(j);
  if (nonzero.empty()) return groebner_basis(ideal.gens, ideal.order);

  std::optional<IdealBasis> acc;
  for (const auto& j : nonzero) {
    IdealBasis sat = saturate_by_poly(ideal.gens, ring, j);
    if (!acc) {
      acc = std::move(sat);
    } else {
      acc = ideal_intersect(acc->gens, sat.gens, ring);
    }
  }
  // Normalize to the requested order.
  return groebner_basis(acc->gens, ideal.order);
}

}  // namespace musurf
