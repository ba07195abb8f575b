#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace musurf {

// Exact rational coefficients. All arithmetic in the library is over Q;
// nothing is ever rounded.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p" and "p/q".
Rat rat_parse(const std::string& text);

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline int rat_sign(const Rat& q) { return sgn(q); }

}  // namespace musurf
