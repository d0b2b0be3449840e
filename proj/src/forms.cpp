#include "conjforge/forms.hpp"

#include <algorithm>
#include <cctype>

#include "conjforge/errors.hpp"
#include "conjforge/group.hpp"

namespace conjforge {

bool field_equal(const FieldRef& a, const FieldRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool QuaternionDatum::operator==(const QuaternionDatum& rhs) const {
  return field_equal(field, rhs.field) && ram_infinite == rhs.ram_infinite &&
         ram_finite == rhs.ram_finite;
}

bool UnitaryDatum::operator==(const UnitaryDatum& rhs) const {
  return field_equal(field, rhs.field) && n == rhs.n &&
         signatures == rhs.signatures && finite_marks == rhs.finite_marks &&
         isotropy_witness == rhs.isotropy_witness && cm_note == rhs.cm_note;
}

bool TypeDDatum::operator==(const TypeDDatum& rhs) const {
  return field_equal(field, rhs.field) && n == rhs.n && s_real == rhs.s_real &&
         s_quaternionic == rhs.s_quaternionic &&
         finite_marks == rhs.finite_marks &&
         isotropy_witness == rhs.isotropy_witness;
}

bool ShimuraDatumDescriptor::operator==(
    const ShimuraDatumDescriptor& rhs) const {
  return datum == rhs.datum && existence_assumption == rhs.existence_assumption;
}

namespace {

void check_field(const FieldRef& field, std::vector<std::string>& violations) {
  if (!field) violations.push_back("missing field reference");
}

void check_real_places(const FieldRef& field, const std::set<unsigned>& places,
                       const char* label,
                       std::vector<std::string>& violations) {
  if (!field) return;
  for (unsigned v : places) {
    if (v >= field->degree) {
      violations.push_back(std::string(label) + " index out of range");
      return;
    }
  }
}

void check_finite_places(const FieldRef& field,
                         const std::set<FinitePlace>& places,
                         std::vector<std::string>& violations) {
  if (!field) return;
  for (const FinitePlace& v : places) {
    const SplitPrimeWitness* w = field->witness_for(v.p);
    if (w == nullptr) {
      violations.push_back("no split-prime witness for p = " +
                           std::to_string(v.p));
      return;
    }
    if (v.slot >= field->degree) {
      violations.push_back("finite place slot out of range at p = " +
                           std::to_string(v.p));
      return;
    }
  }
}

void throw_if_violated(const std::vector<std::string>& violations) {
  if (!violations.empty()) throw InvalidDatumError(violations);
}

// tags travel inside comma/equals-separated lists, so keep them to a safe
// charset
bool valid_tag(const std::string& tag) {
  if (tag.empty()) return false;
  for (char c : tag) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'))
      return false;
  }
  return true;
}

}  // namespace

QuaternionDatum make_quaternion_datum(FieldRef field,
                                      std::set<unsigned> ram_infinite,
                                      std::set<FinitePlace> ram_finite) {
  std::vector<std::string> violations;
  check_field(field, violations);
  check_real_places(field, ram_infinite, "ram_infinite", violations);
  check_finite_places(field, ram_finite, violations);
  if ((ram_infinite.size() + ram_finite.size()) % 2 != 0)
    violations.push_back("reciprocity parity: |ramification set| must be even");
  if (field && ram_infinite.size() >= field->degree)
    violations.push_back("all real places definite: no hermitian domain left");
  throw_if_violated(violations);
  return QuaternionDatum{std::move(field), std::move(ram_infinite),
                         std::move(ram_finite)};
}

UnitaryDatum make_unitary_datum(FieldRef field, unsigned n,
                                std::vector<Signature> signatures,
                                std::map<FinitePlace, std::string> finite_marks,
                                bool isotropy_witness, std::string cm_note) {
  std::vector<std::string> violations;
  check_field(field, violations);
  if (n < 2) violations.push_back("unitary rank n must be >= 2");
  if (field && signatures.size() != field->degree)
    violations.push_back("need one signature per real place");
  for (const auto& [p_v, q_v] : signatures) {
    if (p_v < q_v) violations.push_back("signature must have p >= q");
    if (p_v + q_v != n) violations.push_back("signature entries must sum to n");
  }
  if (!finite_marks.empty() && n % 2 != 0)
    violations.push_back("finite marks are meaningful only for even n");
  std::set<FinitePlace> mark_places;
  for (const auto& [place, tag] : finite_marks) {
    mark_places.insert(place);
    if (tag != "type-A" && tag != "type-B")
      violations.push_back("unitary local type tag must be type-A or type-B");
  }
  check_finite_places(field, mark_places, violations);
  if (cm_note.find('\n') != std::string::npos)
    violations.push_back("cm_note must be a single line");
  if (!finite_marks.empty() && cm_note.empty()) {
    cm_note =
        "CM extension not constructed; required behavior: every marked "
        "p-adic place stays inert (realizable via a compositum with an "
        "imaginary quadratic field)";
  }
  throw_if_violated(violations);
  return UnitaryDatum{std::move(field),        n,
                      std::move(signatures),   std::move(finite_marks),
                      isotropy_witness,        std::move(cm_note)};
}

TypeDDatum make_type_d_datum(FieldRef field, unsigned n,
                             std::set<unsigned> s_real,
                             std::set<unsigned> s_quaternionic,
                             std::map<FinitePlace, std::string> finite_marks,
                             bool isotropy_witness) {
  std::vector<std::string> violations;
  check_field(field, violations);
  if (n < 5) violations.push_back("type D needs n >= 5 (the two series differ)");
  check_real_places(field, s_real, "s_real", violations);
  check_real_places(field, s_quaternionic, "s_quaternionic", violations);
  if (s_real.empty() || s_quaternionic.empty())
    violations.push_back("both real-place parts must be nonempty");
  if (field) {
    std::set<unsigned> all;
    all.insert(s_real.begin(), s_real.end());
    all.insert(s_quaternionic.begin(), s_quaternionic.end());
    if (all.size() != s_real.size() + s_quaternionic.size())
      violations.push_back("s_real and s_quaternionic must be disjoint");
    if (all.size() != field->degree)
      violations.push_back("parts must cover every real place");
  }
  std::set<FinitePlace> mark_places;
  for (const auto& [place, tag] : finite_marks) {
    mark_places.insert(place);
    if (!valid_tag(tag))
      violations.push_back("local type tags are [A-Za-z0-9_-]+");
  }
  check_finite_places(field, mark_places, violations);
  throw_if_violated(violations);
  return TypeDDatum{std::move(field),       n,
                    std::move(s_real),      std::move(s_quaternionic),
                    std::move(finite_marks), isotropy_witness};
}

const TotallyRealField& field_of(const ShimuraDatumDescriptor& d) {
  return *field_ref_of(d);
}

FieldRef field_ref_of(const ShimuraDatumDescriptor& d) {
  return std::visit([](const auto& datum) { return datum.field; }, d.datum);
}

const char* kind_of(const ShimuraDatumDescriptor& d) {
  struct Visitor {
    const char* operator()(const QuaternionDatum&) { return "quaternionic"; }
    const char* operator()(const UnitaryDatum&) { return "unitary"; }
    const char* operator()(const TypeDDatum&) { return "type-d"; }
  };
  return std::visit(Visitor{}, d.datum);
}

unsigned real_rank(const ShimuraDatumDescriptor& d) {
  struct Visitor {
    unsigned operator()(const QuaternionDatum& q) {
      return q.field->degree - static_cast<unsigned>(q.ram_infinite.size());
    }
    unsigned operator()(const UnitaryDatum& u) {
      unsigned sum = 0;
      for (const auto& [p_v, q_v] : u.signatures) sum += q_v;
      return sum;
    }
    unsigned operator()(const TypeDDatum& t) {
      return 2 * static_cast<unsigned>(t.s_real.size()) +
             (t.n / 2) * static_cast<unsigned>(t.s_quaternionic.size());
    }
  };
  return std::visit(Visitor{}, d.datum);
}

unsigned dimension(const ShimuraDatumDescriptor& d) {
  struct Visitor {
    unsigned operator()(const QuaternionDatum& q) {
      return q.field->degree - static_cast<unsigned>(q.ram_infinite.size());
    }
    unsigned operator()(const UnitaryDatum& u) {
      unsigned sum = 0;
      for (const auto& [p_v, q_v] : u.signatures) sum += p_v * q_v;
      return sum;
    }
    unsigned operator()(const TypeDDatum& t) {
      return static_cast<unsigned>(t.s_real.size()) * (2 * t.n - 2) +
             static_cast<unsigned>(t.s_quaternionic.size()) * t.n * (t.n - 1) /
                 2;
    }
  };
  return std::visit(Visitor{}, d.datum);
}

const char* to_string(Compactness c) {
  switch (c) {
    case Compactness::Compact:
      return "compact";
    case Compactness::NoncompactWitnessed:
      return "noncompact-witnessed";
    case Compactness::Undetermined:
      return "undetermined";
  }
  return "?";
}

Compactness compactness(const ShimuraDatumDescriptor& d) {
  struct Visitor {
    Compactness operator()(const QuaternionDatum& q) {
      return q.ram_infinite.empty() ? Compactness::Undetermined
                                    : Compactness::Compact;
    }
    Compactness operator()(const UnitaryDatum& u) {
      bool any_zero = false;
      for (const auto& [p_v, q_v] : u.signatures) any_zero |= (q_v == 0);
      if (any_zero) return Compactness::Compact;
      return u.isotropy_witness ? Compactness::NoncompactWitnessed
                                : Compactness::Undetermined;
    }
    Compactness operator()(const TypeDDatum& t) {
      return t.isotropy_witness ? Compactness::NoncompactWitnessed
                                : Compactness::Undetermined;
    }
  };
  return std::visit(Visitor{}, d.datum);
}

std::vector<std::string> validate_construction_conditions(
    const ShimuraDatumDescriptor& d) {
  std::vector<std::string> violations;
  const bool identical_local_data = std::visit(
      [](const auto& datum) {
        using T = std::decay_t<decltype(datum)>;
        if constexpr (std::is_same_v<T, QuaternionDatum>) {
          return datum.ram_infinite.empty() ||
                 datum.ram_infinite.size() == datum.field->degree;
        } else if constexpr (std::is_same_v<T, UnitaryDatum>) {
          return datum.signatures.empty() ||
                 std::all_of(datum.signatures.begin(), datum.signatures.end(),
                             [&](const Signature& s) {
                               return s == datum.signatures.front();
                             });
        } else {
          return datum.s_real.empty() || datum.s_quaternionic.empty();
        }
      },
      d.datum);
  if (identical_local_data)
    violations.push_back("(i) all real places carry isomorphic local data");
  const unsigned rank = real_rank(d);
  if (rank < 2)
    violations.push_back("(ii) sum of local real ranks is " +
                         std::to_string(rank) + ", needs at least 2");
  return violations;
}

Int reflex_degree_quaternionic(const QuaternionDatum& q) {
  if (!q.field->aut_certificate) throw CertificateRequiredError();
  const unsigned d = q.field->degree;
  const unsigned k = static_cast<unsigned>(q.ram_infinite.size());
  Int by_formula = binomial(d, k);
  if (d <= 8) {
    Int by_orbit(static_cast<unsigned long>(subset_orbit_count(d, q.ram_infinite)));
    if (by_orbit != by_formula)
      throw Error("reflex degree cross-check failed: orbit count " +
                  by_orbit.get_str() + " vs binomial " + by_formula.get_str());
  }
  return by_formula;
}

}  // namespace conjforge
