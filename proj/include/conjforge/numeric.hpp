#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace conjforge {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Deterministic 64-bit generator; all search loops derive their choices from
// it so that identical inputs reproduce identical outputs on every platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace conjforge
