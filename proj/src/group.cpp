#include "conjforge/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "conjforge/errors.hpp"

namespace conjforge {

std::vector<Permutation> generated_subgroup(
    unsigned n, const std::vector<Permutation>& generators,
    std::size_t max_order) {
  for (const Permutation& g : generators) {
    if (g.degree() != n)
      throw std::invalid_argument("generator degree mismatch");
  }
  std::set<Permutation> elements;
  elements.insert(Permutation::identity(n));
  std::vector<Permutation> frontier(elements.begin(), elements.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& e : frontier) {
      for (const Permutation& g : generators) {
        Permutation prod = compose(g, e);
        if (elements.insert(prod).second) {
          if (elements.size() > max_order)
            throw Error("generated subgroup exceeds enumeration cap");
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  return {elements.begin(), elements.end()};
}

bool group_contains(const std::vector<Permutation>& elements,
                    const Permutation& g) {
  return std::find(elements.begin(), elements.end(), g) != elements.end();
}

std::vector<unsigned> orbit_of(const std::vector<Permutation>& elements,
                               unsigned point) {
  std::set<unsigned> orbit;
  for (const Permutation& e : elements) orbit.insert(e(point));
  return {orbit.begin(), orbit.end()};
}

bool orbit_marking_oracle(unsigned n,
                          const std::vector<Permutation>& subgroup_generators,
                          const Permutation& normalizer_element,
                          unsigned orbit_representative) {
  if (normalizer_element.degree() != n)
    throw std::invalid_argument("element degree mismatch");
  if (orbit_representative >= n)
    throw std::invalid_argument("orbit representative out of range");

  std::vector<Permutation> subgroup = generated_subgroup(n, subgroup_generators);
  const Permutation inverse = normalizer_element.inverse();
  for (const Permutation& g : subgroup_generators) {
    Permutation conj = compose(compose(normalizer_element, g), inverse);
    if (!group_contains(subgroup, conj)) throw NotNormalizingError();
  }

  // Freeness of <H, element> is the checkable consequence of X sitting
  // inside a principal homogeneous space for a group containing both.
  std::vector<Permutation> joined_generators = subgroup_generators;
  joined_generators.push_back(normalizer_element);
  for (const Permutation& u : generated_subgroup(n, joined_generators)) {
    if (u.is_identity()) continue;
    for (unsigned i = 0; i < n; ++i) {
      if (u(i) == i)
        throw PrincipalHomogeneityViolatedError(
            "subgroup orbits are not principal: a non-identity element of "
            "the joined group fixes point " +
            std::to_string(i + 1));
    }
  }

  std::vector<unsigned> orbit = orbit_of(subgroup, orbit_representative);
  bool stable = true;
  for (unsigned v : orbit) {
    if (!std::binary_search(orbit.begin(), orbit.end(),
                            normalizer_element(v))) {
      stable = false;
      break;
    }
  }
  // With the preconditions verified, setwise stability is equivalent to
  // membership; enumeration double-checks the implication.
  if (stable && !group_contains(subgroup, normalizer_element))
    throw Error("orbit-marking contradiction: stable orbit under a "
                "non-member of the subgroup");
  return stable;
}

std::uint64_t subset_orbit_count(unsigned d, const std::set<unsigned>& subset) {
  if (d == 0 || d > 8)
    throw std::invalid_argument("brute-force orbit count needs 1 <= d <= 8");
  for (unsigned v : subset) {
    if (v >= d) throw std::invalid_argument("subset element out of range");
  }
  std::vector<unsigned> images(d);
  for (unsigned i = 0; i < d; ++i) images[i] = i;
  std::set<std::uint32_t> masks;
  do {
    std::uint32_t mask = 0;
    for (unsigned v : subset) mask |= 1u << images[v];
    masks.insert(mask);
  } while (std::next_permutation(images.begin(), images.end()));
  return masks.size();
}

}  // namespace conjforge
