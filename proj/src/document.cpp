#include "conjforge/document.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "conjforge/errors.hpp"
#include "conjforge/version.hpp"

namespace conjforge {

void Node::add(std::string key, std::string value) {
  entries.emplace_back(std::move(key), std::move(value));
}

void Node::add_child(Node child) { children.push_back(std::move(child)); }

std::optional<std::string> Node::get(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string Node::require(const std::string& key) const {
  auto v = get(key);
  if (!v) throw ParseError("missing entry '" + key + "' in block '" + name + "'");
  return *v;
}

std::vector<std::string> Node::get_all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries) {
    if (k == key) out.push_back(v);
  }
  return out;
}

const Node* Node::child(const std::string& child_name) const {
  for (const Node& c : children) {
    if (c.name == child_name) return &c;
  }
  return nullptr;
}

std::vector<const Node*> Node::children_named(const std::string& child_name) const {
  std::vector<const Node*> out;
  for (const Node& c : children) {
    if (c.name == child_name) out.push_back(&c);
  }
  return out;
}

namespace {

void write_node(std::string& out, const Node& node, unsigned depth) {
  const std::string indent(2 * depth, ' ');
  out += indent + node.name + " {\n";
  const std::string inner(2 * (depth + 1), ' ');
  for (const auto& [k, v] : node.entries) out += inner + k + " = " + v + "\n";
  for (const Node& c : node.children) write_node(out, c, depth + 1);
  out += indent + "}\n";
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '_' || c == '-'))
      return false;
  }
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos
                                                          : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("expected an unsigned integer, got '" + s + "'");
  return value;
}

unsigned parse_unsigned(const std::string& s) {
  std::uint64_t v = parse_u64(s);
  if (v > 0xffffffffULL) throw ParseError("value out of range: " + s);
  return static_cast<unsigned>(v);
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw ParseError("expected an integer, got an empty value");
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw ParseError("expected an integer, got '" + s + "'");
  }
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("expected a rational, got an empty value");
  try {
    Rat out(s);
    out.canonicalize();
    return out;
  } catch (const std::invalid_argument&) {
    throw ParseError("expected a rational, got '" + s + "'");
  }
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError("expected true/false, got '" + s + "'");
}

FinitePlace parse_finite_place(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.size() != 2) throw ParseError("expected p:slot, got '" + s + "'");
  unsigned slot = parse_unsigned(parts[1]);
  if (slot == 0) throw ParseError("finite place slots are 1-based");
  return FinitePlace{parse_u64(parts[0]), slot - 1};
}

std::string join_u64(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::uint64_t v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string join_pattern(const DegreePattern& pattern) {
  std::string out;
  for (unsigned v : pattern) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string join_places_one_based(const std::set<unsigned>& places) {
  std::string out;
  for (unsigned v : places) {
    if (!out.empty()) out += ',';
    out += std::to_string(v + 1);
  }
  return out;
}

std::set<unsigned> parse_places_one_based(const std::string& s) {
  std::set<unsigned> out;
  for (const std::string& item : split(s, ',')) {
    unsigned v = parse_unsigned(item);
    if (v == 0) throw ParseError("real place indices are 1-based");
    out.insert(v - 1);
  }
  return out;
}

}  // namespace

std::string serialize(const Node& root) {
  std::string out;
  write_node(out, root, 0);
  return out;
}

Node parse_document(const std::string& text) {
  std::vector<Node> stack;
  std::optional<Node> root;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty()) continue;
    const std::string where = " (line " + std::to_string(line_no) + ")";
    if (line == "}") {
      if (stack.empty()) throw ParseError("unmatched '}'" + where);
      Node done = std::move(stack.back());
      stack.pop_back();
      if (stack.empty()) {
        if (root) throw ParseError("multiple top-level blocks" + where);
        root = std::move(done);
      } else {
        stack.back().add_child(std::move(done));
      }
      continue;
    }
    if (line.size() >= 2 && line.back() == '{') {
      std::string name = trim(line.substr(0, line.size() - 1));
      if (!valid_ident(name))
        throw ParseError("bad block name '" + name + "'" + where);
      if (stack.empty() && root)
        throw ParseError("content after the top-level block" + where);
      stack.emplace_back();
      stack.back().name = std::move(name);
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value', block, or '}'" + where);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!valid_ident(key)) throw ParseError("bad key '" + key + "'" + where);
    if (stack.empty())
      throw ParseError("entry outside of any block" + where);
    stack.back().add(std::move(key), std::move(value));
  }
  if (!stack.empty()) throw ParseError("unexpected end of document");
  if (!root) throw ParseError("empty document");
  return std::move(*root);
}

Provenance tool_provenance(std::optional<std::uint64_t> seed) {
  return Provenance{kToolName, kToolVersion, seed};
}

Node encode_field(const TotallyRealField& field) {
  Node node;
  node.name = "field";
  node.add("degree", std::to_string(field.degree));
  std::string definer;
  for (const Int& c : field.definer.coefficients()) {
    if (!definer.empty()) definer += ',';
    definer += c.get_str();
  }
  node.add("definer", definer);
  for (const auto& [lo, hi] : field.embeddings.intervals)
    node.add("root_interval", lo.get_str() + "," + hi.get_str());
  if (field.aut_certificate) {
    const GaloisCertificate& c = *field.aut_certificate;
    Node cert;
    cert.name = "galois_certificate";
    cert.add("p_transitive", std::to_string(c.p_transitive));
    cert.add("pattern_transitive", join_pattern(c.pattern_transitive));
    cert.add("p_cycle", std::to_string(c.p_cycle));
    cert.add("pattern_cycle", join_pattern(c.pattern_cycle));
    cert.add("p_transposition", std::to_string(c.p_transposition));
    cert.add("pattern_transposition", join_pattern(c.pattern_transposition));
    cert.add("conclusion", c.conclusion);
    node.add_child(std::move(cert));
  }
  for (const SplitPrimeWitness& w : field.split_witnesses) {
    Node witness;
    witness.name = "split_witness";
    witness.add("p", std::to_string(w.p));
    witness.add("residues", join_u64(w.residues));
    node.add_child(std::move(witness));
  }
  return node;
}

TotallyRealField decode_field(const Node& node) {
  TotallyRealField field;
  field.degree = parse_unsigned(node.require("degree"));
  std::vector<Int> coeffs;
  for (const std::string& c : split(node.require("definer"), ','))
    coeffs.push_back(parse_int(c));
  field.definer = IntPolynomial(std::move(coeffs));
  if (field.definer.degree() != static_cast<int>(field.degree))
    throw ParseError("definer degree does not match the degree entry");
  for (const std::string& item : node.get_all("root_interval")) {
    auto parts = split(item, ',');
    if (parts.size() != 2) throw ParseError("bad root_interval '" + item + "'");
    field.embeddings.intervals.emplace_back(parse_rat(parts[0]),
                                            parse_rat(parts[1]));
  }
  if (const Node* cert = node.child("galois_certificate")) {
    GaloisCertificate c;
    c.p_transitive = parse_u64(cert->require("p_transitive"));
    c.p_cycle = parse_u64(cert->require("p_cycle"));
    c.p_transposition = parse_u64(cert->require("p_transposition"));
    for (auto [key, out] :
         {std::pair{"pattern_transitive", &c.pattern_transitive},
          std::pair{"pattern_cycle", &c.pattern_cycle},
          std::pair{"pattern_transposition", &c.pattern_transposition}}) {
      for (const std::string& item : split(cert->require(key), ','))
        out->push_back(parse_unsigned(item));
    }
    c.conclusion = cert->require("conclusion");
    field.aut_certificate = std::move(c);
  }
  for (const Node* wnode : node.children_named("split_witness")) {
    SplitPrimeWitness w;
    w.p = parse_u64(wnode->require("p"));
    for (const std::string& item : split(wnode->require("residues"), ','))
      w.residues.push_back(parse_u64(item));
    field.split_witnesses.push_back(std::move(w));
  }
  return field;
}

namespace {

std::string join_finite_places(const std::set<FinitePlace>& places) {
  std::string out;
  for (const FinitePlace& v : places) {
    if (!out.empty()) out += ',';
    out += to_string(v);
  }
  return out;
}

std::string join_marks(const std::map<FinitePlace, std::string>& marks) {
  std::string out;
  for (const auto& [place, tag] : marks) {
    if (!out.empty()) out += ',';
    out += to_string(place) + "=" + tag;
  }
  return out;
}

std::map<FinitePlace, std::string> parse_marks(const std::string& s) {
  std::map<FinitePlace, std::string> out;
  for (const std::string& item : split(s, ',')) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected p:slot=tag, got '" + item + "'");
    out[parse_finite_place(item.substr(0, eq))] = item.substr(eq + 1);
  }
  return out;
}

std::string join_signatures(const std::vector<Signature>& signatures) {
  std::string out;
  for (const auto& [p, q] : signatures) {
    if (!out.empty()) out += ':';
    out += std::to_string(p) + "," + std::to_string(q);
  }
  return out;
}

std::vector<Signature> parse_signatures(const std::string& s) {
  std::vector<Signature> out;
  for (const std::string& item : split(s, ':')) {
    auto parts = split(item, ',');
    if (parts.size() != 2)
      throw ParseError("expected p,q signature, got '" + item + "'");
    out.emplace_back(parse_unsigned(parts[0]), parse_unsigned(parts[1]));
  }
  return out;
}

}  // namespace

Node encode_datum(const ShimuraDatumDescriptor& datum, const char* block_name) {
  Node node;
  node.name = block_name;
  node.add("kind", kind_of(datum));
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, QuaternionDatum>) {
          if (!d.ram_infinite.empty())
            node.add("ram_infinite", join_places_one_based(d.ram_infinite));
          if (!d.ram_finite.empty())
            node.add("ram_finite", join_finite_places(d.ram_finite));
        } else if constexpr (std::is_same_v<T, UnitaryDatum>) {
          node.add("n", std::to_string(d.n));
          node.add("signatures", join_signatures(d.signatures));
          if (!d.finite_marks.empty())
            node.add("finite_marks", join_marks(d.finite_marks));
          node.add("isotropy_witness", d.isotropy_witness ? "true" : "false");
          if (!d.cm_note.empty()) node.add("cm_note", d.cm_note);
        } else {
          node.add("n", std::to_string(d.n));
          node.add("s_real", join_places_one_based(d.s_real));
          node.add("s_quaternionic", join_places_one_based(d.s_quaternionic));
          if (!d.finite_marks.empty())
            node.add("finite_marks", join_marks(d.finite_marks));
          node.add("isotropy_witness", d.isotropy_witness ? "true" : "false");
        }
      },
      datum.datum);
  node.add("existence_assumption", datum.existence_assumption);
  node.add("dimension", std::to_string(dimension(datum)));
  node.add("real_rank", std::to_string(real_rank(datum)));
  node.add("compactness", to_string(compactness(datum)));
  return node;
}

ShimuraDatumDescriptor decode_datum(const Node& node, FieldRef field) {
  const std::string kind = node.require("kind");
  ShimuraDatumDescriptor out;
  if (kind == "quaternionic") {
    std::set<FinitePlace> ram_finite;
    if (auto v = node.get("ram_finite")) {
      for (const std::string& item : split(*v, ','))
        ram_finite.insert(parse_finite_place(item));
    }
    std::set<unsigned> ram_infinite;
    if (auto v = node.get("ram_infinite"))
      ram_infinite = parse_places_one_based(*v);
    out.datum = make_quaternion_datum(std::move(field), std::move(ram_infinite),
                                      std::move(ram_finite));
  } else if (kind == "unitary") {
    std::map<FinitePlace, std::string> marks;
    if (auto v = node.get("finite_marks")) marks = parse_marks(*v);
    out.datum = make_unitary_datum(
        std::move(field), parse_unsigned(node.require("n")),
        parse_signatures(node.require("signatures")), std::move(marks),
        parse_bool(node.require("isotropy_witness")),
        node.get("cm_note").value_or(""));
  } else if (kind == "type-d") {
    std::map<FinitePlace, std::string> marks;
    if (auto v = node.get("finite_marks")) marks = parse_marks(*v);
    std::set<unsigned> s_real, s_quaternionic;
    if (auto v = node.get("s_real")) s_real = parse_places_one_based(*v);
    if (auto v = node.get("s_quaternionic"))
      s_quaternionic = parse_places_one_based(*v);
    out.datum = make_type_d_datum(
        std::move(field), parse_unsigned(node.require("n")), std::move(s_real),
        std::move(s_quaternionic), std::move(marks),
        parse_bool(node.require("isotropy_witness")));
  } else {
    throw ParseError("unknown datum kind '" + kind + "'");
  }
  out.existence_assumption = node.require("existence_assumption");
  return out;
}

namespace {

Node encode_provenance(const Provenance& prov) {
  Node node;
  node.name = "provenance";
  node.add("tool", prov.tool);
  node.add("version", prov.version);
  if (prov.seed) node.add("seed", std::to_string(*prov.seed));
  return node;
}

Provenance decode_provenance(const Node* node) {
  Provenance prov;
  if (node == nullptr) throw ParseError("missing provenance block");
  prov.tool = node->require("tool");
  prov.version = node->require("version");
  if (auto seed = node->get("seed")) prov.seed = parse_u64(*seed);
  return prov;
}

Node encode_marking(const MarkingRecord& marking) {
  Node node;
  node.name = "marking";
  node.add("p", std::to_string(marking.p));
  node.add("slot", std::to_string(marking.marked_slot + 1));
  return node;
}

MarkingRecord decode_marking(const Node& node) {
  MarkingRecord out;
  out.p = parse_u64(node.require("p"));
  unsigned slot = parse_unsigned(node.require("slot"));
  if (slot == 0) throw ParseError("marking slots are 1-based");
  out.marked_slot = slot - 1;
  return out;
}

Node encode_checks(const CertificateChecks& checks) {
  Node node;
  node.name = "checks";
  node.add("rank", std::to_string(checks.rank_value));
  node.add("rank_ok", checks.rank_ok ? "true" : "false");
  node.add("partition_moved", checks.partition_moved ? "true" : "false");
  node.add("aut_control", to_string(checks.aut_control));
  if (checks.marking_place)
    node.add("marking_place", to_string(*checks.marking_place));
  node.add("realizability", to_string(checks.realizability));
  node.add("realizability_asserted",
           checks.realizability_asserted ? "true" : "false");
  return node;
}

CertificateChecks decode_checks(const Node& node) {
  CertificateChecks checks;
  checks.rank_value = parse_unsigned(node.require("rank"));
  checks.rank_ok = parse_bool(node.require("rank_ok"));
  checks.partition_moved = parse_bool(node.require("partition_moved"));
  const std::string aut = node.require("aut_control");
  if (aut == "none") {
    checks.aut_control = AutControl::None;
  } else if (aut == "certified-trivial-aut") {
    checks.aut_control = AutControl::CertifiedTrivialAut;
  } else if (aut == "finite-marking") {
    checks.aut_control = AutControl::FiniteMarking;
  } else {
    throw ParseError("unknown aut_control '" + aut + "'");
  }
  if (auto v = node.get("marking_place"))
    checks.marking_place = parse_finite_place(*v);
  const std::string realizability = node.require("realizability");
  if (realizability == "full-symmetric") {
    checks.realizability = Realizability::FullSymmetric;
  } else if (realizability == "transitivity-only") {
    checks.realizability = Realizability::TransitivityOnly;
  } else {
    throw ParseError("unknown realizability '" + realizability + "'");
  }
  checks.realizability_asserted =
      parse_bool(node.require("realizability_asserted"));
  return checks;
}

}  // namespace

Document make_field_document(TotallyRealField field, Provenance prov) {
  Document doc;
  doc.schema_version = kSchemaVersion;
  doc.kind = "field";
  doc.provenance = std::move(prov);
  doc.field = std::move(field);
  return doc;
}

Document make_datum_document(ShimuraDatumDescriptor datum, Provenance prov) {
  Document doc;
  doc.schema_version = kSchemaVersion;
  doc.kind = "datum";
  doc.provenance = std::move(prov);
  doc.datum = std::move(datum);
  return doc;
}

Document make_certificate_document(RigidityCertificate cert, Provenance prov) {
  Document doc;
  doc.schema_version = kSchemaVersion;
  doc.kind = "certificate";
  doc.provenance = std::move(prov);
  doc.certificate = std::move(cert);
  return doc;
}

Document make_marking_document(MarkingRecord marking, Provenance prov) {
  Document doc;
  doc.schema_version = kSchemaVersion;
  doc.kind = "marking";
  doc.provenance = std::move(prov);
  doc.marking = marking;
  return doc;
}

std::string serialize_document(const Document& doc) {
  Node root;
  root.name = "document";
  root.add("schema_version", std::to_string(doc.schema_version));
  root.add("kind", doc.kind);
  if (doc.kind == "certificate") {
    const RigidityCertificate& cert = *doc.certificate;
    root.add("permutation", cert.permutation.to_one_line());
    root.add("verdict", to_string(cert.verdict));
    if (!cert.refusal_reasons.empty()) {
      std::string reasons;
      for (const std::string& r : cert.refusal_reasons) {
        if (!reasons.empty()) reasons += ',';
        reasons += r;
      }
      root.add("refusal_reasons", reasons);
    }
  }
  root.add_child(encode_provenance(doc.provenance));
  if (doc.kind == "field") {
    root.add_child(encode_field(*doc.field));
  } else if (doc.kind == "datum") {
    root.add_child(encode_field(field_of(*doc.datum)));
    root.add_child(encode_datum(*doc.datum, "datum"));
  } else if (doc.kind == "certificate") {
    const RigidityCertificate& cert = *doc.certificate;
    root.add_child(encode_field(field_of(cert.datum)));
    root.add_child(encode_datum(cert.datum, "datum"));
    if (cert.marking_input) root.add_child(encode_marking(*cert.marking_input));
    root.add_child(encode_datum(cert.conjugate, "conjugate"));
    root.add_child(encode_checks(cert.checks));
  } else if (doc.kind == "marking") {
    root.add_child(encode_marking(*doc.marking));
  } else {
    throw Error("unknown document kind '" + doc.kind + "'");
  }
  return serialize(root);
}

Document parse_typed_document(const std::string& text) {
  Node root = parse_document(text);
  if (root.name != "document")
    throw ParseError("expected a 'document' block, got '" + root.name + "'");
  Document doc;
  doc.schema_version = static_cast<int>(parse_u64(root.require("schema_version")));
  if (doc.schema_version != kSchemaVersion)
    throw ParseError("unsupported schema_version " +
                     std::to_string(doc.schema_version));
  doc.kind = root.require("kind");
  doc.provenance = decode_provenance(root.child("provenance"));
  if (doc.kind == "field") {
    const Node* field = root.child("field");
    if (!field) throw ParseError("field document without a field block");
    doc.field = decode_field(*field);
  } else if (doc.kind == "datum") {
    const Node* field = root.child("field");
    const Node* datum = root.child("datum");
    if (!field || !datum)
      throw ParseError("datum document needs field and datum blocks");
    auto ref = std::make_shared<const TotallyRealField>(decode_field(*field));
    doc.datum = decode_datum(*datum, ref);
  } else if (doc.kind == "certificate") {
    const Node* field = root.child("field");
    const Node* datum = root.child("datum");
    const Node* conjugate = root.child("conjugate");
    const Node* checks = root.child("checks");
    if (!field || !datum || !conjugate || !checks)
      throw ParseError("certificate document is missing a required block");
    auto ref = std::make_shared<const TotallyRealField>(decode_field(*field));
    RigidityCertificate cert;
    cert.datum = decode_datum(*datum, ref);
    cert.conjugate = decode_datum(*conjugate, ref);
    auto perm = Permutation::parse_one_line(root.require("permutation"));
    if (!perm || perm->degree() != ref->degree)
      throw ParseError("bad permutation entry");
    cert.permutation = *perm;
    if (const Node* marking = root.child("marking"))
      cert.marking_input = decode_marking(*marking);
    cert.checks = decode_checks(*checks);
    const std::string verdict = root.require("verdict");
    if (verdict == "granted") {
      cert.verdict = Verdict::Granted;
    } else if (verdict == "refused") {
      cert.verdict = Verdict::Refused;
    } else {
      throw ParseError("unknown verdict '" + verdict + "'");
    }
    if (auto reasons = root.get("refusal_reasons"))
      cert.refusal_reasons = split(*reasons, ',');
    doc.certificate = std::move(cert);
  } else if (doc.kind == "marking") {
    const Node* marking = root.child("marking");
    if (!marking) throw ParseError("marking document without a marking block");
    doc.marking = decode_marking(*marking);
  } else {
    throw ParseError("unknown document kind '" + doc.kind + "'");
  }
  return doc;
}

namespace {

// Same datum over a different owner of the same field.
ShimuraDatumDescriptor rebind_field(const ShimuraDatumDescriptor& d,
                                    FieldRef field) {
  ShimuraDatumDescriptor out = d;
  std::visit([&](auto& datum) { datum.field = std::move(field); }, out.datum);
  return out;
}

}  // namespace

std::string recompute_document_text(const Document& doc) {
  if (doc.kind == "marking") {
    return serialize_document(doc);
  }
  if (doc.kind == "field") {
    TotallyRealField rebuilt = make_field(doc.field->definer,
                                          doc.field->aut_certificate,
                                          doc.field->split_witnesses);
    return serialize_document(make_field_document(std::move(rebuilt),
                                                  doc.provenance));
  }
  if (doc.kind == "datum") {
    const TotallyRealField& stored = field_of(*doc.datum);
    auto rebuilt = std::make_shared<const TotallyRealField>(make_field(
        stored.definer, stored.aut_certificate, stored.split_witnesses));
    return serialize_document(make_datum_document(
        rebind_field(*doc.datum, std::move(rebuilt)), doc.provenance));
  }
  if (doc.kind == "certificate") {
    const RigidityCertificate& cert = *doc.certificate;
    const TotallyRealField& stored = field_of(cert.datum);
    auto rebuilt = std::make_shared<const TotallyRealField>(make_field(
        stored.definer, stored.aut_certificate, stored.split_witnesses));
    RigidityCertificate fresh = issue_certificate(
        rebind_field(cert.datum, rebuilt), cert.permutation, cert.marking_input,
        cert.checks.realizability_asserted);
    return serialize_document(
        make_certificate_document(std::move(fresh), doc.provenance));
  }
  throw Error("unknown document kind '" + doc.kind + "'");
}

}  // namespace conjforge
