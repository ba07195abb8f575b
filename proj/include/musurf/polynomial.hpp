#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "musurf/monomial.hpp"
#include "musurf/order.hpp"
#include "musurf/rat.hpp"

namespace musurf {

// Sparse multivariate polynomial with exact rational coefficients over the
// fixed variable universe. Terms are kept sorted descending in the storage
// order; no stored coefficient is zero. The zero polynomial has no terms.
// Values are immutable in spirit: every operation returns a new polynomial.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rat coeff;
  };

  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Rat c);
  static Polynomial variable(Var v, unsigned k = 1);
  static Polynomial term(Monomial m, Rat c);
  static Polynomial from_terms(std::vector<Term> terms);  // collects + normalizes

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rat constant_value() const;  // requires is_constant()

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  int total_degree() const;             // -1 for the zero polynomial
  int degree_in(Var v) const;           // -1 for the zero polynomial
  bool uses_var(Var v) const;
  std::vector<Var> vars_used() const;   // in storage priority order
  bool supported_on(std::span<const Var> vars) const;

  // Leading data w.r.t. an arbitrary order (linear scan).
  const Term& leading_term(const MonomialOrder& order) const;

  bool is_homogeneous() const;
  bool is_homogeneous_in(std::span<const Var> vars) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& c) const;
  friend Polynomial operator*(const Rat& c, const Polynomial& f) { return f * c; }
  bool operator==(const Polynomial& o) const;

  Polynomial mul_term(const Monomial& m, const Rat& c) const;
  Polynomial pow(unsigned k) const;

  // Formal partial derivative, iterated `order` times.
  Polynomial derivative(Var v, unsigned order = 1) const;

  // Substitutions (exact).
  Polynomial substitute(Var v, const Polynomial& g) const;
  Polynomial substitute(Var v, const Rat& value) const;
  Rat evaluate(const std::vector<std::pair<Var, Rat>>& assignment) const;

  // Degree padding with a fresh variable. `target` defaults to the total
  // degree; it is an error if target < total_degree() or if v occurs in f.
  Polynomial homogenize(Var v, std::optional<int> target = std::nullopt) const;
  Polynomial dehomogenize(Var v, const Rat& value = Rat(1)) const;

  // View as univariate in v with polynomial coefficients (degree -> coeff).
  std::map<int, Polynomial> coeffs_in(Var v) const;

  // Rational content (gcd of numerators / lcm of denominators, sign of the
  // storage-leading coefficient). primitive_part() = *this / content(); the
  // result has coprime integer coefficients and positive leading sign.
  Rat content() const;  // 0 for the zero polynomial
  Polynomial primitive_part() const;
  Polynomial monic(const MonomialOrder& order) const;

  // Exact division test: if g divides *this, returns the quotient.
  std::optional<Polynomial> divide_exact(const Polynomial& g) const;

  std::string str() const;

 private:
  std::vector<Term> terms_;  // descending in storage order

  friend class PolyBuilder;
};

// Accumulator used by arithmetic: collects coefficients per monomial, then
// squeezes out zeros and emits sorted terms.
class PolyBuilder {
 public:
  void add(const Monomial& m, const Rat& c);
  Polynomial build();

 private:
  std::map<Monomial, Rat, StorageLess> acc_;
};

// gcd of a list of polynomials, monic-normalized in the storage order.
// Computed by content/primitive-part recursion on the lowest-priority
// present variable with a subresultant remainder sequence.
// Errors if every input is zero.
Polynomial multi_gcd(std::span<const Polynomial> fs);
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

std::string poly_str(const Polynomial& f);

}  // namespace musurf
