#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "conjforge/field.hpp"
#include "conjforge/numeric.hpp"
#include "conjforge/places.hpp"

namespace conjforge {

using FieldRef = std::shared_ptr<const TotallyRealField>;

// Equal as values; distinct owners of equal fields compare equal.
bool field_equal(const FieldRef& a, const FieldRef& b);

inline constexpr const char* kExistenceAssumption =
    "Borel-Harder existence: an absolutely simple, simply connected group "
    "over the field realizing the prescribed local types (assumed, not "
    "constructed)";

/// Quaternion algebra over the field, as its ramification invariants: the
/// set of definite real places (local invariant 1/2) and the set of
/// ramified finite places. Hilbert reciprocity forces the total count
/// even; at least one real place must stay indefinite.
struct QuaternionDatum {
  FieldRef field;
  std::set<unsigned> ram_infinite;
  std::set<FinitePlace> ram_finite;

  bool operator==(const QuaternionDatum& rhs) const;
};

using Signature = std::pair<unsigned, unsigned>;  // (p_v, q_v), p >= q

/// Special unitary group data from a diagonal hermitian form over a CM
/// extension: one signature (p_v, q_v) with p_v + q_v = n per real place,
/// opaque local-type tags at marked p-adic places (even n only), and a
/// flag recording that the diagonal contains both 1 and -1 often enough to
/// witness isotropy. The CM extension itself is never constructed; only
/// its required splitting behavior is recorded.
struct UnitaryDatum {
  FieldRef field;
  unsigned n = 0;
  std::vector<Signature> signatures;  // indexed by real place
  std::map<FinitePlace, std::string> finite_marks;  // "type-A" / "type-B"
  bool isotropy_witness = false;
  std::string cm_note;

  bool operator==(const UnitaryDatum& rhs) const;
};

/// Skew-hermitian form over a quaternion algebra, type D_n with n >= 5:
/// the indefinite real places carry the rank-2 series, the definite ones
/// the rank-floor(n/2) series. Built with an opposite-sign diagonal pair,
/// which witnesses isotropy unless explicitly disclaimed.
struct TypeDDatum {
  FieldRef field;
  unsigned n = 0;
  std::set<unsigned> s_real;          // indefinite places of the algebra
  std::set<unsigned> s_quaternionic;  // definite places
  std::map<FinitePlace, std::string> finite_marks;
  bool isotropy_witness = true;

  bool operator==(const TypeDDatum& rhs) const;
};

struct ShimuraDatumDescriptor {
  std::variant<QuaternionDatum, UnitaryDatum, TypeDDatum> datum;
  std::string existence_assumption = kExistenceAssumption;

  bool operator==(const ShimuraDatumDescriptor& rhs) const;
};

// Validating constructors; each throws InvalidDatumError naming every
// violated constraint ("reciprocity parity", partition problems, ...).
QuaternionDatum make_quaternion_datum(FieldRef field,
                                      std::set<unsigned> ram_infinite,
                                      std::set<FinitePlace> ram_finite);
UnitaryDatum make_unitary_datum(FieldRef field, unsigned n,
                                std::vector<Signature> signatures,
                                std::map<FinitePlace, std::string> finite_marks,
                                bool isotropy_witness, std::string cm_note = "");
TypeDDatum make_type_d_datum(FieldRef field, unsigned n,
                             std::set<unsigned> s_real,
                             std::set<unsigned> s_quaternionic,
                             std::map<FinitePlace, std::string> finite_marks,
                             bool isotropy_witness = true);

const TotallyRealField& field_of(const ShimuraDatumDescriptor& d);
FieldRef field_ref_of(const ShimuraDatumDescriptor& d);

const char* kind_of(const ShimuraDatumDescriptor& d);  // "quaternionic" | ...

// Sum over real places of the local real ranks:
//   quaternionic  d - |ram_infinite|
//   unitary       sum q_v
//   type D        2 |s_real| + floor(n/2) |s_quaternionic|
unsigned real_rank(const ShimuraDatumDescriptor& d);

// Complex dimension of the associated domain:
//   quaternionic  d - |ram_infinite|
//   unitary       sum p_v q_v
//   type D        |s_real| (2n-2) + |s_quaternionic| n(n-1)/2
unsigned dimension(const ShimuraDatumDescriptor& d);

enum class Compactness { Compact, NoncompactWitnessed, Undetermined };
const char* to_string(Compactness c);

// The known sufficient criteria only; anything they miss is reported
// Undetermined rather than guessed.
Compactness compactness(const ShimuraDatumDescriptor& d);

// Construction conditions: (i) the local real data are not all identical,
// (ii) the real rank is at least 2. Returns one named violation per
// failing condition; empty means both hold.
std::vector<std::string> validate_construction_conditions(
    const ShimuraDatumDescriptor& d);

// Degree of the reflex field of the quaternionic partition: the index in
// S_d of the stabilizer of ram_infinite, i.e. binomial(d, |ram_infinite|).
// For d <= 8 the binomial is cross-checked against a brute-force orbit
// count. Requires an S_d certificate on the field.
Int reflex_degree_quaternionic(const QuaternionDatum& q);

}  // namespace conjforge
