#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conjforge/numeric.hpp"
#include "conjforge/polynomial.hpp"

namespace conjforge {

bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime >= n

/// Multiset of irreducible-factor degrees of a squarefree polynomial over
/// F_p, kept sorted ascending. Entries always sum to the degree.
using DegreePattern = std::vector<unsigned>;

// Polynomial over F_p, lowest degree first, coefficients in [0, p).
class ModPoly {
 public:
  explicit ModPoly(std::uint64_t p) : p_(p) {}
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static ModPoly reduce(const IntPolynomial& f, std::uint64_t p);
  static ModPoly x(std::uint64_t p) { return ModPoly(p, {0, 1}); }

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint64_t coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }

  std::uint64_t eval(std::uint64_t x) const;

  ModPoly monic() const;
  ModPoly derivative() const;
  ModPoly operator*(const ModPoly& rhs) const;
  ModPoly operator-(const ModPoly& rhs) const;
  // remainder of *this by monic-normalized divisor
  ModPoly mod(const ModPoly& divisor) const;
  // this^p mod divisor (one Frobenius step when the base is X^{p^i})
  ModPoly pow_mod(const Int& exponent, const ModPoly& divisor) const;

  IntPolynomial to_int_polynomial() const;

  bool operator==(const ModPoly& rhs) const = default;

 private:
  void normalize();
  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> coeffs_;
};

ModPoly gcd(ModPoly a, ModPoly b);  // monic gcd over F_p

bool is_squarefree_mod(const IntPolynomial& f, std::uint64_t p);

// Distinct-degree splitting: multiset of irreducible-factor degrees of
// f mod p. Throws NotPrimeError / NotSquarefreeModPError.
DegreePattern degree_pattern_mod(const IntPolynomial& f, std::uint64_t p);

bool is_irreducible_mod(const IntPolynomial& f, std::uint64_t p);

// Uniform-ish random monic irreducible of the given degree over F_p,
// drawn deterministically from the supplied generator.
IntPolynomial random_monic_irreducible_mod(std::uint64_t p, unsigned degree,
                                           SplitMix64& rng);

// When f mod p is squarefree and splits into linear factors, the sorted
// list of its d distinct roots in [0, p); nullopt otherwise.
std::optional<std::vector<std::uint64_t>> split_residues(const IntPolynomial& f,
                                                         std::uint64_t p);

}  // namespace conjforge
