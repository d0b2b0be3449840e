#pragma once

#include <utility>
#include <vector>

#include "conjforge/polynomial.hpp"

namespace conjforge {

/// Disjoint open rational intervals, sorted ascending, each containing
/// exactly one real root of the polynomial they were derived from. The
/// fixed ascending order is what gives real embeddings their canonical
/// indices everywhere downstream.
struct RootIsolation {
  std::vector<std::pair<Rat, Rat>> intervals;

  std::size_t count() const { return intervals.size(); }
  bool operator==(const RootIsolation&) const = default;
};

// Number of distinct real roots of f (whole line), by a Sturm chain over
// exact rationals. f may have repeated roots; the count is of the
// squarefree part f / gcd(f, f').
unsigned sturm_real_root_count(const IntPolynomial& f);

// Distinct real roots of f inside the open interval (lo, hi). Requires
// f(lo) != 0 and f(hi) != 0.
unsigned sturm_real_root_count_in(const IntPolynomial& f, const Rat& lo,
                                  const Rat& hi);

bool is_squarefree_over_q(const IntPolynomial& f);

// 1 + max_i |c_i| / |lead| — every real root lies strictly inside (-B, B).
Rat cauchy_root_bound(const IntPolynomial& f);

// Bisection refinement until the isolating intervals are disjoint with
// width < 1/64. Throws NotSquarefreeError when gcd(f, f') is nonconstant.
RootIsolation isolate_real_roots(const IntPolynomial& f);

}  // namespace conjforge
