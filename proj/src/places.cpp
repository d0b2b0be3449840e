#include "conjforge/places.hpp"

#include <stdexcept>

namespace conjforge {

std::string to_string(const FinitePlace& v) {
  return std::to_string(v.p) + ":" + std::to_string(v.slot + 1);
}

bool preserves_subset(const Permutation& pi, const std::set<unsigned>& subset) {
  for (unsigned s : subset) {
    if (s >= pi.degree())
      throw std::invalid_argument("subset element out of range");
    if (!subset.contains(pi(s))) return false;
  }
  return true;
}

const char* to_string(Realizability r) {
  switch (r) {
    case Realizability::FullSymmetric:
      return "full-symmetric";
    case Realizability::TransitivityOnly:
      return "transitivity-only";
  }
  return "?";
}

Realizability realizability_note(const TotallyRealField& field) {
  if (field.aut_certificate || field.degree <= 1)
    return Realizability::FullSymmetric;
  return Realizability::TransitivityOnly;
}

}  // namespace conjforge
