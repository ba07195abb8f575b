#include "musurf/order.hpp"

namespace musurf {

namespace {

// grevlex over an ordered slice of the variable list.
bool grevlex_less(const Monomial& a, const Monomial& b, const std::vector<Var>& vars,
                  std::size_t begin, std::size_t end) {
  int da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[vars[i]];
    db += b[vars[i]];
  }
  if (da != db) return da < db;
  for (std::size_t i = end; i-- > begin;) {
    Var v = vars[i];
    if (a[v] != b[v]) return a[v] > b[v];
  }
  return false;
}

bool lex_less(const Monomial& a, const Monomial& b, const std::vector<Var>& vars) {
  for (Var v : vars) {
    if (a[v] != b[v]) return a[v] < b[v];
  }
  return false;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::grevlex:
      return grevlex_less(a, b, vars, 0, vars.size());
    case Kind::lex:
      return lex_less(a, b, vars);
    case Kind::block: {
      int da = 0, db = 0;
      for (std::size_t i = 0; i < block_size; ++i) {
        da += a[vars[i]];
        db += b[vars[i]];
      }
      if (da != db) return da < db;
      if (grevlex_less(a, b, vars, 0, block_size)) return true;
      if (grevlex_less(b, a, vars, 0, block_size)) return false;
      return grevlex_less(a, b, vars, block_size, vars.size());
    }
  }
  return false;
}

}  // namespace musurf
