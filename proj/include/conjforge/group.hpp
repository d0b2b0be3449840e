#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "conjforge/permutation.hpp"

namespace conjforge {

// All elements of <generators>, by closure under composition. Throws when
// the subgroup would exceed max_order elements.
std::vector<Permutation> generated_subgroup(
    unsigned n, const std::vector<Permutation>& generators,
    std::size_t max_order = 1 << 20);

bool group_contains(const std::vector<Permutation>& elements,
                    const Permutation& g);

std::vector<unsigned> orbit_of(const std::vector<Permutation>& elements,
                               unsigned point);

// Setwise-stability test behind the p-adic marking argument. X = {0..n-1}
// must be (part of) a principal homogeneous space for a group containing
// both H = <subgroup_generators> and the element: concretely, no
// non-identity element of <H, element> may fix a point. When that holds,
// "element maps the H-orbit of the representative onto itself" is
// equivalent to membership of the element in H, and the oracle
// double-checks the equivalence by enumeration.
//
// Throws NotNormalizingError when the element fails to normalize H, and
// PrincipalHomogeneityViolatedError when the freeness precondition fails.
bool orbit_marking_oracle(unsigned n,
                          const std::vector<Permutation>& subgroup_generators,
                          const Permutation& normalizer_element,
                          unsigned orbit_representative);

// Size of the orbit of the given subset under all of S_d, by enumeration
// of the d! permutations. Restricted to d <= 8.
std::uint64_t subset_orbit_count(unsigned d, const std::set<unsigned>& subset);

}  // namespace conjforge
