#pragma once

#include <cstdint>

namespace musurf {

// Deterministic splitmix64 stream. Used for the genericity draws; kept
// independent of <random> so that identical seeds give identical draws on
// every platform.
struct SeededRng {
  std::uint64_t state;

  explicit SeededRng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [-bound, bound].
  long coeff(long bound) {
    return static_cast<long>(next() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SeededRng r(seed ^ (salt * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
  return r.next();
}

}  // namespace musurf
