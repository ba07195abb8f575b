#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace musurf {

// Fixed variable universe. Parameter-plane variables first, then space
// variables. `aux` is a reserved slot used internally by saturation and
// intersection eliminations; it is never accepted by the parser and never
// printed as part of user-facing results.
enum class Var : std::uint8_t { s = 0, t, u, x, y, z, w, aux };

inline constexpr std::size_t kVarCount = 8;

inline constexpr const char* var_name(Var v) {
  constexpr const char* names[kVarCount] = {"s", "t", "u", "x", "y", "z", "w", "#"};
  return names[static_cast<std::size_t>(v)];
}

std::optional<Var> var_from_name(const std::string& name);

// Common ring shorthands.
const std::vector<Var>& vars_st();      // (s,t)
const std::vector<Var>& vars_stu();     // (s,t,u)
const std::vector<Var>& vars_xyzw();    // (x,y,z,w)
const std::vector<Var>& vars_xyzst();   // (x,y,z,s,t)

// Exponent tuple over the fixed universe. Exponents are small in practice
// (total degree a few hundred at most in truncation loops).
struct Monomial {
  std::array<std::uint16_t, kVarCount> e{};

  static Monomial one() { return Monomial{}; }
  static Monomial var(Var v, unsigned k = 1) {
    Monomial m;
    m.e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(k);
    return m;
  }

  std::uint16_t operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
  std::uint16_t& operator[](Var v) { return e[static_cast<std::size_t>(v)]; }

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  int degree(std::span<const Var> vars) const {
    int d = 0;
    for (Var v : vars) d += (*this)[v];
    return d;
  }

  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kVarCount; ++i)
      r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    return r;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < kVarCount; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  // Requires divides(m) for o==this: quotient m / this.
  Monomial divide_into(const Monomial& m) const {
    Monomial r;
    for (std::size_t i = 0; i < kVarCount; ++i)
      r.e[i] = static_cast<std::uint16_t>(m.e[i] - e[i]);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kVarCount; ++i)
      r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kVarCount; ++i)
      r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    for (std::size_t i = 0; i < kVarCount; ++i)
      if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const = default;
};

// Storage order: graded reverse lexicographic over the full universe with
// priority s > t > u > x > y > z > w > aux. Canonical term order for term
// maps and printing.
bool storage_less(const Monomial& a, const Monomial& b);

struct StorageLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return storage_less(a, b); }
};

std::string monomial_str(const Monomial& m);

}  // namespace musurf
