#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>

#include "conjforge/field.hpp"
#include "conjforge/permutation.hpp"

namespace conjforge {

// Real places are indexed 0..d-1 by the ascending order of the field's
// isolating intervals (1-based in serialized form).

/// A p-adic place of a field in which p splits completely: the prime and
/// the slot of its residue in the ascending order of the split witness.
struct FinitePlace {
  std::uint64_t p = 0;
  unsigned slot = 0;

  bool operator==(const FinitePlace&) const = default;
  auto operator<=>(const FinitePlace&) const = default;
};

std::string to_string(const FinitePlace& v);  // "11:1", slot 1-based

/// Permutation of real places induced by a field automorphism of C, acting
/// as pi(v) = tau o v. Finite places are always fixed, which is why the
/// type carries no finite-place action. Conjugation pulls local data back
/// along pi: the value at v of the conjugate is the original value at
/// pi(v).
using PlacePermutation = Permutation;

// pi(S) = S (equivalently pi^{-1}(S) = S).
bool preserves_subset(const Permutation& pi, const std::set<unsigned>& subset);

enum class Realizability {
  // The field carries an S_d certificate, so the Galois closure permutes
  // the real embeddings fully: every place permutation is induced by some
  // automorphism of C.
  FullSymmetric,
  // Only transitivity of the Aut(C)-action on real places is guaranteed;
  // whether a given permutation is realizable is not decided here.
  TransitivityOnly,
};

const char* to_string(Realizability r);

Realizability realizability_note(const TotallyRealField& field);

}  // namespace conjforge
