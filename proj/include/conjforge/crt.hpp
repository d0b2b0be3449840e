#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "conjforge/polynomial.hpp"

namespace conjforge {

// Monic g of the template's degree with g congruent to each target mod its
// prime, coefficientwise. Every non-leading coefficient is the member of
// its residue class closest to the template's coefficient; exact ties take
// the larger value. Primes must be distinct, all polynomials monic of one
// degree (DegreeMismatchError otherwise). An empty target list returns the
// template unchanged.
IntPolynomial crt_lift(
    const std::vector<std::pair<std::uint64_t, IntPolynomial>>& targets,
    const IntPolynomial& tmpl);

}  // namespace conjforge
