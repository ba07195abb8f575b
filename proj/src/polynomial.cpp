#include "musurf/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "musurf/errors.hpp"

namespace musurf {

// ---------------------------------------------------------------------------
// construction

void PolyBuilder::add(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc_.erase(it);
  }
}

Polynomial PolyBuilder::build() {
  Polynomial p;
  p.terms_.reserve(acc_.size());
  for (auto it = acc_.rbegin(); it != acc_.rend(); ++it)
    p.terms_.push_back({it->first, it->second});
  acc_.clear();
  return p;
}

Polynomial Polynomial::constant(Rat c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({Monomial::one(), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(Var v, unsigned k) {
  Polynomial p;
  p.terms_.push_back({Monomial::var(v, k), Rat(1)});
  return p;
}

Polynomial Polynomial::term(Monomial m, Rat c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  PolyBuilder b;
  for (auto& t : terms) b.add(t.mono, t.coeff);
  return b.build();
}

Rat Polynomial::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant())
    throw AlgebraError(Errc::internal, "constant_value on a non-constant polynomial");
  return terms_[0].coeff;
}

// ---------------------------------------------------------------------------
// queries

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::degree_in(Var v) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[v]));
  return d;
}

bool Polynomial::uses_var(Var v) const {
  for (const auto& t : terms_)
    if (t.mono[v] > 0) return true;
  return false;
}

std::vector<Var> Polynomial::vars_used() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    Var v = static_cast<Var>(i);
    if (uses_var(v)) out.push_back(v);
  }
  return out;
}

bool Polynomial::supported_on(std::span<const Var> vars) const {
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (t.mono.e[i] == 0) continue;
      Var v = static_cast<Var>(i);
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
    }
  }
  return true;
}

const Polynomial::Term& Polynomial::leading_term(const MonomialOrder& order) const {
  assert(!terms_.empty());
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.less(best->mono, t.mono)) best = &t;
  return *best;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_[0].mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

bool Polynomial::is_homogeneous_in(std::span<const Var> vars) const {
  if (terms_.empty()) return true;
  int d = terms_[0].mono.degree(vars);
  for (const auto& t : terms_)
    if (t.mono.degree(vars) != d) return false;
  return true;
}

// ---------------------------------------------------------------------------
// arithmetic

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  PolyBuilder b;
  for (const auto& t : terms_) b.add(t.mono, t.coeff);
  for (const auto& t : o.terms_) b.add(t.mono, t.coeff);
  return b.build();
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  PolyBuilder b;
  for (const auto& t : terms_) b.add(t.mono, t.coeff);
  for (const auto& t : o.terms_) b.add(t.mono, -t.coeff);
  return b.build();
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  PolyBuilder b;
  for (const auto& a : terms_)
    for (const auto& c : o.terms_) b.add(a.mono * c.mono, a.coeff * c.coeff);
  return b.build();
}

Polynomial Polynomial::operator*(const Rat& c) const {
  if (c == 0) return Polynomial();
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rat& c) const {
  if (c == 0) return Polynomial();
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = Polynomial::constant(Rat(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

Polynomial Polynomial::derivative(Var v, unsigned order) const {
  Polynomial cur = *this;
  for (unsigned i = 0; i < order; ++i) {
    PolyBuilder b;
    for (const auto& t : cur.terms_) {
      int e = t.mono[v];
      if (e == 0) continue;
      Monomial m = t.mono;
      m[v] = static_cast<std::uint16_t>(e - 1);
      b.add(m, t.coeff * Rat(e));
    }
    cur = b.build();
    if (cur.is_zero()) break;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// substitution

std::map<int, Polynomial> Polynomial::coeffs_in(Var v) const {
  std::map<int, Polynomial> out;
  std::map<int, PolyBuilder> builders;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int e = m[v];
    m[v] = 0;
    builders[e].add(m, t.coeff);
  }
  for (auto& [e, b] : builders) out.emplace(e, b.build());
  return out;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& g) const {
  if (!uses_var(v)) return *this;
  auto coeffs = coeffs_in(v);
  // Horner from the highest power down.
  Polynomial acc;
  int prev = -1;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (prev >= 0) {
      for (int i = 0; i < prev - it->first; ++i) acc = acc * g;
    }
    acc = acc + it->second;
    prev = it->first;
  }
  for (int i = 0; i < prev; ++i) acc = acc * g;
  return acc;
}

Polynomial Polynomial::substitute(Var v, const Rat& value) const {
  return substitute(v, Polynomial::constant(value));
}

Rat Polynomial::evaluate(const std::vector<std::pair<Var, Rat>>& assignment) const {
  auto lookup = [&](Var v) -> const Rat* {
    for (const auto& [av, val] : assignment)
      if (av == v) return &val;
    return nullptr;
  };
  for (Var v : vars_used())
    if (!lookup(v))
      throw AlgebraError(Errc::invalid_input,
                         std::string("evaluate: missing assignment for ") + var_name(v));
  Rat sum(0);
  for (const auto& t : terms_) {
    Rat term = t.coeff;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      int e = t.mono.e[i];
      if (e == 0) continue;
      const Rat* val = lookup(static_cast<Var>(i));
      Rat p(1);
      for (int k = 0; k < e; ++k) p *= *val;
      term *= p;
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::homogenize(Var v, std::optional<int> target) const {
  if (uses_var(v))
    throw AlgebraError(Errc::invalid_input,
                       std::string("homogenize: variable ") + var_name(v) + " already occurs");
  if (is_zero()) return *this;
  int d = total_degree();
  int goal = target.value_or(d);
  if (goal < d)
    throw AlgebraError(Errc::invalid_input, "homogenize: target degree below polynomial degree");
  Polynomial p = *this;
  for (auto& t : p.terms_) t.mono[v] = static_cast<std::uint16_t>(goal - t.mono.degree());
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return storage_less(b.mono, a.mono); });
  return p;
}

Polynomial Polynomial::dehomogenize(Var v, const Rat& value) const {
  return substitute(v, value);
}

// ---------------------------------------------------------------------------
// normalization

Rat Polynomial::content() const {
  if (terms_.empty()) return Rat(0);
  Int num(0), den(1);
  for (const auto& t : terms_) {
    num = gcd(num, t.coeff.get_num());
    den = lcm(den, t.coeff.get_den());
  }
  Rat c(num, den);
  c.canonicalize();
  // Leading coefficient (storage order = first stored term) fixes the sign.
  if (terms_[0].coeff < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  Rat c = content();
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff /= c;
  return p;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  Rat lc = leading_term(order).coeff;
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff /= lc;
  return p;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& g) const {
  if (g.is_zero()) return std::nullopt;
  static const MonomialOrder kStorage =
      MonomialOrder::grevlex({Var::s, Var::t, Var::u, Var::x, Var::y, Var::z, Var::w, Var::aux});
  const Term& lg = g.leading_term(kStorage);
  Polynomial rem = *this;
  PolyBuilder quot;
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term(kStorage);
    if (!lg.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = lg.mono.divide_into(lr.mono);
    Rat c = lr.coeff / lg.coeff;
    quot.add(m, c);
    rem = rem - g.mul_term(m, c);
  }
  return quot.build();
}

// ---------------------------------------------------------------------------
// gcd: content/primitive-part recursion with a subresultant PRS

namespace {

// Lowest-priority variable used by either polynomial, if any.
std::optional<Var> last_var(const Polynomial& f, const Polynomial& g) {
  for (std::size_t i = kVarCount; i-- > 0;) {
    Var v = static_cast<Var>(i);
    if (f.uses_var(v) || g.uses_var(v)) return v;
  }
  return std::nullopt;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g);

// Content of f seen as a univariate polynomial in v over Q[rest].
Polynomial content_in(const Polynomial& f, Var v) {
  auto coeffs = f.coeffs_in(v);
  Polynomial c;
  for (const auto& [e, poly] : coeffs) {
    c = c.is_zero() ? poly : gcd_rec(c, poly);
    if (!c.is_zero() && c.is_constant()) return Polynomial::constant(Rat(1));
  }
  return c;
}

// Pseudo-remainder of f by g w.r.t. v: lc(g)^(deg f - deg g + 1) * f mod g.
Polynomial pseudo_rem(Polynomial f, const Polynomial& g, Var v) {
  int dg = g.degree_in(v);
  auto gc = g.coeffs_in(v);
  Polynomial lg = gc.rbegin()->second;
  int df = f.degree_in(v);
  int steps = df - dg + 1;
  int done = 0;
  while (!f.is_zero() && f.degree_in(v) >= dg) {
    auto fc = f.coeffs_in(v);
    int d = fc.rbegin()->first;
    Polynomial lf = fc.rbegin()->second;
    // f := lg*f - lf * v^(d-dg) * g
    f = f * lg - g * lf.mul_term(Monomial::var(v, static_cast<unsigned>(d - dg)), Rat(1));
    ++done;
  }
  // Scale the remainder as if every step multiplied by lg.
  for (int i = done; i < steps; ++i) f = f * lg;
  return f;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(Rat(1));

  auto vopt = last_var(f, g);
  Var v = *vopt;
  if (!f.uses_var(v) || !g.uses_var(v)) {
    // v appears in only one of them: gcd divides the other's content in v.
    const Polynomial& with = f.uses_var(v) ? f : g;
    const Polynomial& without = f.uses_var(v) ? g : f;
    return gcd_rec(content_in(with, v), without);
  }

  Polynomial cf = content_in(f, v);
  Polynomial cg = content_in(g, v);
  Polynomial fp = *f.divide_exact(cf);
  Polynomial gp = *g.divide_exact(cg);
  Polynomial cont = gcd_rec(cf, cg);

  // Subresultant PRS on the primitive parts (Geddes-Czapor-Labahn form).
  Polynomial a = fp, b = gp;
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  Polynomial g1 = Polynomial::constant(Rat(1));
  Polynomial h = Polynomial::constant(Rat(1));
  while (true) {
    int delta = a.degree_in(v) - b.degree_in(v);
    Polynomial r = pseudo_rem(a, b, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      b = Polynomial::constant(Rat(1));
      break;
    }
    a = b;
    Polynomial divisor = g1 * h.pow(static_cast<unsigned>(delta));
    auto q = r.divide_exact(divisor);
    // The subresultant divisions are exact; the primitive part is an exact
    // fallback that changes the PRS only by content.
    b = q ? *q : r.primitive_part();
    g1 = a.coeffs_in(v).rbegin()->second;
    if (delta > 0) {
      Polynomial num = g1.pow(static_cast<unsigned>(delta));
      auto hq = num.divide_exact(h.pow(static_cast<unsigned>(delta - 1)));
      h = hq ? *hq : num.primitive_part();
    }
  }
  Polynomial prim = *b.divide_exact(content_in(b, v));
  return cont * prim;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial r = gcd_rec(f, g);
  if (r.is_zero()) return r;
  static const MonomialOrder kStorage =
      MonomialOrder::grevlex({Var::s, Var::t, Var::u, Var::x, Var::y, Var::z, Var::w, Var::aux});
  return r.monic(kStorage);
}

Polynomial multi_gcd(std::span<const Polynomial> fs) {
  Polynomial g;
  bool any = false;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    any = true;
    g = g.is_zero() ? f : poly_gcd(g, f);
    if (g.is_constant()) break;
  }
  if (!any) throw AlgebraError(Errc::invalid_input, "multi_gcd: all inputs are zero");
  static const MonomialOrder kStorage =
      MonomialOrder::grevlex({Var::s, Var::t, Var::u, Var::x, Var::y, Var::z, Var::w, Var::aux});
  return g.monic(kStorage);
}

// ---------------------------------------------------------------------------
// printing

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = (c == 1);
    if (t.mono.is_one()) {
      out += rat_str(c);
    } else {
      if (!unit) out += rat_str(c) + "*";
      out += monomial_str(t.mono);
    }
  }
  return out;
}

std::string poly_str(const Polynomial& f) { return f.str(); }

}  // namespace musurf
