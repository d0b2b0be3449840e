// Test-only oracles, deliberately independent of the library's algorithms:
// grid sign scans instead of Sturm chains, trial division instead of
// distinct-degree splitting, closure tables instead of the oracle under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "conjforge/numeric.hpp"
#include "conjforge/permutation.hpp"
#include "conjforge/polynomial.hpp"

namespace oracles {

using conjforge::Int;
using conjforge::IntPolynomial;
using conjforge::Permutation;
using conjforge::Rat;

// Roots counted by sign changes (and exact zeros) on a dyadic grid over
// the Cauchy bound, refined until the count stabilizes three times in a
// row. Signs at x = j/2^k come from the integer value 2^{kd} f(x).
inline unsigned sign_scan_root_count(const IntPolynomial& f) {
  Int max_coeff(0);
  for (const Int& c : f.coefficients()) {
    Int a = abs(c);
    if (a > max_coeff) max_coeff = a;
  }
  const Int bound = max_coeff + 1;
  const int d = f.degree();

  auto count_at_depth = [&](unsigned k) {
    std::vector<Int> scaled(d + 1);  // scaled[i] = c_i * 2^{k(d-i)}
    for (int i = 0; i <= d; ++i)
      scaled[i] = f.coeff(i) << (k * static_cast<unsigned>(d - i));
    unsigned count = 0;
    int last_nonzero = 0;
    bool zero_since_last = false;
    const Int hi = bound << k;
    for (Int j = -hi; j <= hi; ++j) {
      Int acc = scaled[d];
      for (int i = d - 1; i >= 0; --i) acc = acc * j + scaled[i];
      int s = sgn(acc);
      if (s == 0) {
        ++count;  // exact root on the grid
        zero_since_last = true;
        continue;
      }
      if (last_nonzero != 0 && s != last_nonzero && !zero_since_last) ++count;
      last_nonzero = s;
      zero_since_last = false;
    }
    return count;
  };

  unsigned last = count_at_depth(0);
  unsigned stable = 0;
  for (unsigned k = 1; k <= 12 && stable < 3; ++k) {
    unsigned next = count_at_depth(k);
    if (next == last)
      ++stable;
    else
      stable = 0;
    last = next;
  }
  return last;
}

// --- tiny independent F_p polynomial helpers (trial division only) ---

inline std::vector<std::uint64_t> oracle_reduce(const IntPolynomial& f,
                                                std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (const Int& c : f.coefficients()) {
    Int m = c % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    out.push_back(m.get_ui());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// divides a by b in F_p[X]; returns the quotient when the remainder is
// zero, empty optional otherwise. b monic.
inline bool oracle_divides(const std::vector<std::uint64_t>& b,
                           std::vector<std::uint64_t> a, std::uint64_t p,
                           std::vector<std::uint64_t>* quotient) {
  std::vector<std::uint64_t> q(a.size() >= b.size() ? a.size() - b.size() + 1
                                                    : 0,
                               0);
  while (a.size() >= b.size() && !a.empty()) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t prod =
          static_cast<std::uint64_t>((unsigned __int128)(lead)*b[i] % p);
      a[shift + i] = (a[shift + i] + p - prod) % p;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  if (!a.empty()) return false;
  *quotient = std::move(q);
  return true;
}

// all monic polynomials of the given degree over F_p, ascending
inline std::vector<std::vector<std::uint64_t>> all_monic(std::uint64_t p,
                                                         unsigned degree) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> coeffs(degree + 1, 0);
  coeffs[degree] = 1;
  while (true) {
    out.push_back(coeffs);
    unsigned i = 0;
    for (; i < degree; ++i) {
      if (++coeffs[i] < p) break;
      coeffs[i] = 0;
    }
    if (i == degree) break;
  }
  return out;
}

// Factor degrees of f mod p by exhaustive trial division with monic
// divisors of increasing degree. Returns the sorted multiset.
inline std::vector<unsigned> naive_pattern_mod(const IntPolynomial& f,
                                               std::uint64_t p) {
  std::vector<std::uint64_t> rest = oracle_reduce(f, p);
  std::vector<unsigned> pattern;
  unsigned deg = 1;
  while (rest.size() > 1) {
    bool found = false;
    if (static_cast<unsigned>(rest.size() - 1) < 2 * deg) {
      pattern.push_back(static_cast<unsigned>(rest.size() - 1));
      break;
    }
    for (const auto& divisor : all_monic(p, deg)) {
      std::vector<std::uint64_t> quotient;
      if (oracle_divides(divisor, rest, p, &quotient)) {
        pattern.push_back(deg);
        rest = std::move(quotient);
        found = true;
        break;
      }
    }
    if (!found) ++deg;
  }
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

// discriminant of X^3 + aX^2 + bX + c
inline Int cubic_discriminant(const Int& a, const Int& b, const Int& c) {
  return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b -
         27 * c * c;
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// binomial via Pascal's triangle, independent of GMP's binomial
inline Int pascal_binomial(unsigned n, unsigned k) {
  if (k > n) return Int(0);
  std::vector<Int> row(n + 1, Int(0));
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i; j > 0; --j) row[j] = row[j] + row[j - 1];
  }
  return row[k];
}

// --- independent permutation-group machinery ---

// closure by a multiplication table pass, not the library's BFS
inline std::vector<Permutation> table_closure(
    unsigned n, std::vector<Permutation> elements) {
  elements.push_back(Permutation::identity(n));
  std::set<Permutation> all(elements.begin(), elements.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> snapshot(all.begin(), all.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        if (all.insert(conjforge::compose(a, b)).second) grew = true;
      }
    }
  }
  return {all.begin(), all.end()};
}

// every subgroup of the group generated by the given elements
inline std::vector<std::vector<Permutation>> all_subgroups(
    unsigned n, const std::vector<Permutation>& generators) {
  std::vector<Permutation> group = table_closure(n, generators);
  std::set<std::vector<Permutation>> subgroups;
  subgroups.insert(table_closure(n, {}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Permutation>> snapshot(subgroups.begin(),
                                                   subgroups.end());
    for (const auto& sub : snapshot) {
      for (const auto& g : group) {
        std::vector<Permutation> gens = sub;
        gens.push_back(g);
        if (subgroups.insert(table_closure(n, gens)).second) grew = true;
      }
    }
  }
  return {subgroups.begin(), subgroups.end()};
}

// left translation action of a group on itself, as permutations of element
// indices
inline std::vector<Permutation> cayley_left_action(
    const std::vector<Permutation>& elements) {
  const unsigned m = static_cast<unsigned>(elements.size());
  std::map<Permutation, unsigned> index;
  for (unsigned i = 0; i < m; ++i) index[elements[i]] = i;
  std::vector<Permutation> action;
  action.reserve(m);
  for (const auto& g : elements) {
    std::vector<unsigned> images(m);
    for (unsigned i = 0; i < m; ++i)
      images[i] = index.at(conjforge::compose(g, elements[i]));
    action.push_back(Permutation::from_images(std::move(images)));
  }
  return action;
}

}  // namespace oracles
