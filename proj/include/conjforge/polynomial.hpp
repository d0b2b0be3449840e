#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "conjforge/numeric.hpp"

namespace conjforge {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored lowest degree first. The zero polynomial has an
/// empty coefficient vector; any other value keeps its leading coefficient
/// nonzero. Field definers are additionally monic.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(Int c);
  // X^k
  static IntPolynomial monomial(unsigned k);
  // prod (X - r) over the given integer roots; monic by construction.
  static IntPolynomial monic_from_integer_roots(std::span<const Int> roots);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Int& leading() const;
  Int coeff(std::size_t i) const;  // 0 beyond the stored degree
  const std::vector<Int>& coefficients() const { return coeffs_; }

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  IntPolynomial derivative() const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;

  bool operator==(const IntPolynomial& rhs) const = default;

  // Human-readable form like "X^3 - 4*X - 1"; used in messages only.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

}  // namespace conjforge
