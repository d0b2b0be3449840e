#include "conjforge/conjugate.hpp"

#include <algorithm>

#include "conjforge/errors.hpp"

namespace conjforge {

namespace {

std::set<unsigned> pull_back(const std::set<unsigned>& subset,
                             const Permutation& pi) {
  std::set<unsigned> out;
  for (unsigned v = 0; v < pi.degree(); ++v) {
    if (subset.contains(pi(v))) out.insert(v);
  }
  return out;
}

}  // namespace

ShimuraDatumDescriptor conjugate_datum(const ShimuraDatumDescriptor& d,
                                       const Permutation& pi) {
  const unsigned degree = field_of(d).degree;
  if (pi.degree() != degree)
    throw DegreeMismatchError("permutation degree " +
                              std::to_string(pi.degree()) +
                              " != field degree " + std::to_string(degree));
  ShimuraDatumDescriptor out = d;
  std::visit(
      [&](auto& datum) {
        using T = std::decay_t<decltype(datum)>;
        if constexpr (std::is_same_v<T, QuaternionDatum>) {
          datum.ram_infinite = pull_back(datum.ram_infinite, pi);
        } else if constexpr (std::is_same_v<T, UnitaryDatum>) {
          std::vector<Signature> moved(datum.signatures.size());
          for (unsigned v = 0; v < degree; ++v)
            moved[v] = datum.signatures[pi(v)];
          datum.signatures = std::move(moved);
        } else {
          datum.s_real = pull_back(datum.s_real, pi);
          datum.s_quaternionic = pull_back(datum.s_quaternionic, pi);
        }
      },
      out.datum);
  return out;
}

std::optional<Permutation> propose_tau(const ShimuraDatumDescriptor& d) {
  const unsigned degree = field_of(d).degree;
  // comparable key for the local datum at a real place
  auto local_key = [&](unsigned v) -> std::pair<unsigned, unsigned> {
    return std::visit(
        [&](const auto& datum) -> std::pair<unsigned, unsigned> {
          using T = std::decay_t<decltype(datum)>;
          if constexpr (std::is_same_v<T, QuaternionDatum>) {
            return {datum.ram_infinite.contains(v) ? 1u : 0u, 0u};
          } else if constexpr (std::is_same_v<T, UnitaryDatum>) {
            return datum.signatures[v];
          } else {
            return {datum.s_quaternionic.contains(v) ? 1u : 0u, 0u};
          }
        },
        d.datum);
  };
  for (unsigned i = 0; i < degree; ++i) {
    for (unsigned j = i + 1; j < degree; ++j) {
      if (local_key(i) != local_key(j))
        return Permutation::transposition(degree, i, j);
    }
  }
  return std::nullopt;
}

std::vector<std::string> finite_tags_at(const ShimuraDatumDescriptor& d,
                                        std::uint64_t p) {
  const unsigned degree = field_of(d).degree;
  std::vector<std::string> tags(degree);
  for (unsigned slot = 0; slot < degree; ++slot) {
    const FinitePlace place{p, slot};
    tags[slot] = std::visit(
        [&](const auto& datum) -> std::string {
          using T = std::decay_t<decltype(datum)>;
          if constexpr (std::is_same_v<T, QuaternionDatum>) {
            return datum.ram_finite.contains(place) ? "ramified" : "unramified";
          } else {
            auto it = datum.finite_marks.find(place);
            return it == datum.finite_marks.end() ? "unmarked" : it->second;
          }
        },
        d.datum);
  }
  return tags;
}

bool verify_marking(const TotallyRealField& field, const MarkingRecord& marking,
                    const std::vector<std::string>& place_tags) {
  if (field.witness_for(marking.p) == nullptr)
    throw MissingSplitWitnessError(marking.p);
  if (marking.marked_slot >= field.degree)
    throw std::invalid_argument("marked slot out of range");
  if (place_tags.size() != field.degree)
    throw std::invalid_argument("need one tag per p-adic place");
  for (unsigned slot = 0; slot < field.degree; ++slot) {
    if (slot == marking.marked_slot) continue;
    if (place_tags[slot] == place_tags[marking.marked_slot]) return false;
  }
  return true;
}

const char* to_string(AutControl a) {
  switch (a) {
    case AutControl::None:
      return "none";
    case AutControl::CertifiedTrivialAut:
      return "certified-trivial-aut";
    case AutControl::FiniteMarking:
      return "finite-marking";
  }
  return "?";
}

const char* to_string(Verdict v) {
  return v == Verdict::Granted ? "granted" : "refused";
}

namespace {

bool partition_moved_by(const ShimuraDatumDescriptor& d,
                        const ShimuraDatumDescriptor& conjugate,
                        const Permutation& pi) {
  return std::visit(
      [&](const auto& datum) {
        using T = std::decay_t<decltype(datum)>;
        if constexpr (std::is_same_v<T, QuaternionDatum>) {
          return !preserves_subset(pi, datum.ram_infinite);
        } else if constexpr (std::is_same_v<T, UnitaryDatum>) {
          const auto& moved = std::get<UnitaryDatum>(conjugate.datum);
          return datum.signatures != moved.signatures;
        } else {
          return !preserves_subset(pi, datum.s_quaternionic);
        }
      },
      d.datum);
}

}  // namespace

RigidityCertificate issue_certificate(const ShimuraDatumDescriptor& d,
                                      const Permutation& pi,
                                      const std::optional<MarkingRecord>& marking,
                                      bool assert_realizable) {
  auto violations = validate_construction_conditions(d);
  if (!violations.empty()) throw InvalidDatumError(violations);

  RigidityCertificate cert;
  cert.datum = d;
  cert.permutation = pi;
  cert.conjugate = conjugate_datum(d, pi);  // also checks the degree
  cert.marking_input = marking;

  const TotallyRealField& field = field_of(d);
  CertificateChecks& checks = cert.checks;
  checks.rank_value = real_rank(d);
  checks.rank_ok = checks.rank_value >= 2;
  checks.partition_moved = partition_moved_by(d, cert.conjugate, pi);

  checks.aut_control = AutControl::None;
  if (field.aut_certificate) {
    checks.aut_control = AutControl::CertifiedTrivialAut;
  } else if (marking) {
    const auto tags = finite_tags_at(d, marking->p);
    if (verify_marking(field, *marking, tags)) {
      checks.aut_control = AutControl::FiniteMarking;
      checks.marking_place = FinitePlace{marking->p, marking->marked_slot};
    }
  }

  checks.realizability = realizability_note(field);
  checks.realizability_asserted = assert_realizable;

  if (!checks.rank_ok) cert.refusal_reasons.push_back("rank");
  if (!checks.partition_moved) cert.refusal_reasons.push_back("partition_moved");
  if (checks.aut_control == AutControl::None)
    cert.refusal_reasons.push_back("aut_control");
  if (checks.realizability != Realizability::FullSymmetric &&
      !checks.realizability_asserted)
    cert.refusal_reasons.push_back("realizability");

  cert.verdict =
      cert.refusal_reasons.empty() ? Verdict::Granted : Verdict::Refused;
  return cert;
}

void replay_certificate(const RigidityCertificate& c) {
  RigidityCertificate fresh =
      issue_certificate(c.datum, c.permutation, c.marking_input,
                        c.checks.realizability_asserted);
  if (!(fresh.conjugate == c.conjugate))
    throw Error("certificate replay failed: conjugate datum mismatch");
  if (!(fresh.checks == c.checks))
    throw Error("certificate replay failed: checks mismatch");
  if (fresh.verdict != c.verdict || fresh.refusal_reasons != c.refusal_reasons)
    throw Error("certificate replay failed: verdict mismatch");
}

}  // namespace conjforge
