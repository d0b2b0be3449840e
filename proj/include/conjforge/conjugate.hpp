#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conjforge/forms.hpp"
#include "conjforge/permutation.hpp"
#include "conjforge/places.hpp"

namespace conjforge {

// The conjugate datum under a place permutation pi: real-place local data
// pulled back along pi (value at v = original value at pi(v)), finite data
// copied unchanged.
ShimuraDatumDescriptor conjugate_datum(const ShimuraDatumDescriptor& d,
                                       const Permutation& pi);

// Lexicographically smallest transposition exchanging two real places with
// non-isomorphic local data; nullopt when all local data agree.
std::optional<Permutation> propose_tau(const ShimuraDatumDescriptor& d);

/// Marked p-adic place: the claim that its local type differs from the
/// type at every other place above p, so any field automorphism fixing the
/// finite local data fixes this place and is therefore the identity.
struct MarkingRecord {
  std::uint64_t p = 0;
  unsigned marked_slot = 0;

  bool operator==(const MarkingRecord&) const = default;
};

// Local-type tag per slot (0..d-1) at the places above p, derived from the
// datum's finite data. Quaternionic: "ramified"/"unramified"; unitary and
// type D: the stored mark or "unmarked".
std::vector<std::string> finite_tags_at(const ShimuraDatumDescriptor& d,
                                        std::uint64_t p);

// True iff the marked place's tag differs from every other tag. Throws
// MissingSplitWitnessError when the field has no witness for marking.p.
bool verify_marking(const TotallyRealField& field, const MarkingRecord& marking,
                    const std::vector<std::string>& place_tags);

enum class AutControl { None, CertifiedTrivialAut, FiniteMarking };
const char* to_string(AutControl a);

struct CertificateChecks {
  unsigned rank_value = 0;
  bool rank_ok = false;
  bool partition_moved = false;
  AutControl aut_control = AutControl::None;
  std::optional<FinitePlace> marking_place;
  Realizability realizability = Realizability::TransitivityOnly;
  bool realizability_asserted = false;

  bool operator==(const CertificateChecks&) const = default;
};

enum class Verdict { Granted, Refused };
const char* to_string(Verdict v);

/// Machine-checkable record that the super-rigidity argument applies to
/// the pair (datum, conjugate): rank at least 2, the permutation moves the
/// real-place partition into local-isomorphism classes, the field admits
/// no automorphism that could undo the move (trivial-Aut certificate or a
/// verified finite marking), and the permutation is realizable. Granted
/// means the fundamental groups of the two quotients are not isomorphic.
struct RigidityCertificate {
  ShimuraDatumDescriptor datum;
  Permutation permutation = Permutation::identity(0);
  ShimuraDatumDescriptor conjugate;
  std::optional<MarkingRecord> marking_input;
  CertificateChecks checks;
  Verdict verdict = Verdict::Refused;
  std::vector<std::string> refusal_reasons;

  bool operator==(const RigidityCertificate&) const = default;
};

// Runs every check and grants iff all pass; otherwise refuses and lists
// the failing clauses ("rank", "partition_moved", "aut_control",
// "realizability"). Throws InvalidDatumError when the datum fails the
// construction conditions, DegreeMismatchError on a wrong-degree
// permutation.
RigidityCertificate issue_certificate(
    const ShimuraDatumDescriptor& d, const Permutation& pi,
    const std::optional<MarkingRecord>& marking = std::nullopt,
    bool assert_realizable = false);

// Re-issues from the certificate's own inputs and compares everything;
// throws Error on any divergence.
void replay_certificate(const RigidityCertificate& c);

}  // namespace conjforge
