#include "musurf/monomial.hpp"

#include <string>

namespace musurf {

std::optional<Var> var_from_name(const std::string& name) {
  for (std::size_t i = 0; i + 1 < kVarCount; ++i) {  // aux is not nameable
    Var v = static_cast<Var>(i);
    if (name == var_name(v)) return v;
  }
  return std::nullopt;
}

const std::vector<Var>& vars_st() {
  static const std::vector<Var> v{Var::s, Var::t};
  return v;
}
const std::vector<Var>& vars_stu() {
  static const std::vector<Var> v{Var::s, Var::t, Var::u};
  return v;
}
const std::vector<Var>& vars_xyzw() {
  static const std::vector<Var> v{Var::x, Var::y, Var::z, Var::w};
  return v;
}
const std::vector<Var>& vars_xyzst() {
  static const std::vector<Var> v{Var::x, Var::y, Var::z, Var::s, Var::t};
  return v;
}

bool storage_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Reverse scan: the monomial with the larger exponent in the latest
  // differing variable is the smaller one.
  for (std::size_t i = kVarCount; i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  }
  return false;
}

std::string monomial_str(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(static_cast<Var>(i));
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out;
}

}  // namespace musurf
