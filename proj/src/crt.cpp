#include "conjforge/crt.hpp"

#include <set>
#include <stdexcept>

#include "conjforge/errors.hpp"

namespace conjforge {

IntPolynomial crt_lift(
    const std::vector<std::pair<std::uint64_t, IntPolynomial>>& targets,
    const IntPolynomial& tmpl) {
  if (tmpl.is_zero() || !tmpl.is_monic())
    throw std::invalid_argument("template must be monic");
  const int d = tmpl.degree();
  std::set<std::uint64_t> seen;
  for (const auto& [p, target] : targets) {
    if (!seen.insert(p).second)
      throw std::invalid_argument("duplicate prime in CRT targets");
    if (target.degree() != d)
      throw DegreeMismatchError("CRT target degree " +
                                std::to_string(target.degree()) +
                                " != template degree " + std::to_string(d));
    if (!target.is_monic())
      throw std::invalid_argument("CRT targets must be monic");
  }
  if (targets.empty()) return tmpl;

  Int modulus(1);
  for (const auto& [p, target] : targets)
    modulus *= static_cast<unsigned long>(p);

  std::vector<Int> coeffs(static_cast<std::size_t>(d) + 1, Int(0));
  coeffs[static_cast<std::size_t>(d)] = 1;
  for (int j = 0; j < d; ++j) {
    // combined residue mod the product
    Int residue(0);
    for (const auto& [p, target] : targets) {
      Int pi(static_cast<unsigned long>(p));
      Int others = modulus / pi;
      Int inv;
      if (mpz_invert(inv.get_mpz_t(), others.get_mpz_t(), pi.get_mpz_t()) == 0)
        throw std::invalid_argument("CRT primes are not coprime");
      Int r = target.coeff(static_cast<std::size_t>(j)) % pi;
      if (r < 0) r += pi;
      residue += r * others * inv;
    }
    residue %= modulus;
    if (residue < 0) residue += modulus;

    // representative of the class closest to the template coefficient;
    // ties take the larger value
    const Int t = tmpl.coeff(static_cast<std::size_t>(j));
    Int shift = (residue - t) % modulus;
    if (shift < 0) shift += modulus;
    Int up = t + shift;
    coeffs[static_cast<std::size_t>(j)] =
        (2 * shift <= modulus) ? up : Int(up - modulus);
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace conjforge
