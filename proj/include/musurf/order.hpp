#pragma once

#include <cstddef>
#include <vector>

#include "musurf/monomial.hpp"

namespace musurf {

// Term order on a ring given by an ordered variable list. The list is the
// ring: Groebner-layer operations only accept polynomials supported on it.
//
//   grevlex  - graded reverse lexicographic over the whole list
//   lex      - lexicographic over the whole list
//   block    - grevlex on the first `block_size` variables, ties broken by
//              grevlex on the rest (an elimination order for the block)
struct MonomialOrder {
  enum class Kind { grevlex, lex, block };

  Kind kind = Kind::grevlex;
  std::vector<Var> vars;
  std::size_t block_size = 0;

  static MonomialOrder grevlex(std::vector<Var> vars) {
    return MonomialOrder{Kind::grevlex, std::move(vars), 0};
  }
  static MonomialOrder lex(std::vector<Var> vars) {
    return MonomialOrder{Kind::lex, std::move(vars), 0};
  }
  static MonomialOrder block_elim(std::vector<Var> elim, const std::vector<Var>& keep) {
    std::size_t n = elim.size();
    for (Var v : keep) elim.push_back(v);
    return MonomialOrder{Kind::block, std::move(elim), n};
  }

  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

  bool operator==(const MonomialOrder& o) const = default;
};

}  // namespace musurf
