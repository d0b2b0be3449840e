#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conjforge/conjugate.hpp"
#include "conjforge/field.hpp"
#include "conjforge/forms.hpp"

namespace conjforge {

/// Nested key-value block, the unit of the certificate file format:
///
///   name {
///     key = value
///     child { ... }
///   }
///
/// Values are raw single-line strings; integers are decimal (arbitrary
/// precision), rationals "n/d", lists comma-separated, indices 1-based.
/// Serialization is canonical, so byte comparison of two serialized
/// documents is a faithful equality test.
struct Node {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<Node> children;

  void add(std::string key, std::string value);
  void add_child(Node child);

  std::optional<std::string> get(const std::string& key) const;
  std::string require(const std::string& key) const;  // ParseError if absent
  std::vector<std::string> get_all(const std::string& key) const;
  const Node* child(const std::string& name) const;
  std::vector<const Node*> children_named(const std::string& name) const;

  bool operator==(const Node&) const = default;
};

std::string serialize(const Node& root);
Node parse_document(const std::string& text);  // throws ParseError

struct Provenance {
  std::string tool;
  std::string version;
  std::optional<std::uint64_t> seed;

  bool operator==(const Provenance&) const = default;
};

Provenance tool_provenance(std::optional<std::uint64_t> seed = std::nullopt);

/// Self-contained document: a field, a datum over its field, a full
/// rigidity certificate, or a marking record, plus provenance. Exactly the
/// member matching `kind` is populated ("field" | "datum" | "certificate"
/// | "marking").
struct Document {
  int schema_version = 0;
  std::string kind;
  Provenance provenance;
  std::optional<TotallyRealField> field;              // kind == field
  std::optional<ShimuraDatumDescriptor> datum;        // kind == datum
  std::optional<RigidityCertificate> certificate;     // kind == certificate
  std::optional<MarkingRecord> marking;               // kind == marking
};

Document make_field_document(TotallyRealField field, Provenance prov);
Document make_datum_document(ShimuraDatumDescriptor datum, Provenance prov);
Document make_certificate_document(RigidityCertificate cert, Provenance prov);
Document make_marking_document(MarkingRecord marking, Provenance prov);

std::string serialize_document(const Document& doc);
// Structural decoding only; semantic replay is a separate step.
Document parse_typed_document(const std::string& text);

// Block-level encoders, exposed for replay and tests.
Node encode_field(const TotallyRealField& field);
TotallyRealField decode_field(const Node& node);
Node encode_datum(const ShimuraDatumDescriptor& datum, const char* block_name);
ShimuraDatumDescriptor decode_datum(const Node& node, FieldRef field);

// Recompute the certificate/datum/field document from its primary inputs
// (definer, witness primes, datum parameters, permutation, marking) and
// return the canonical serialization. Replay = byte comparison with the
// stored text. Throws Error when the stored data cannot be rebuilt.
std::string recompute_document_text(const Document& doc);

}  // namespace conjforge
