// Command-line front end: forge automorphism-free totally real fields,
// attach local-invariant data, conjugate along a place permutation, and
// issue or replay rigidity certificates.
//
// Exit codes: 0 success / certificate granted, 1 refused / replay mismatch /
// search exhausted, 2 invalid input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "conjforge/conjugate.hpp"
#include "conjforge/document.hpp"
#include "conjforge/errors.hpp"
#include "conjforge/field.hpp"
#include "conjforge/forms.hpp"
#include "conjforge/version.hpp"

namespace {

using namespace conjforge;

constexpr int kExitGranted = 0;
constexpr int kExitRefused = 1;
constexpr int kExitInvalid = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::optional<std::uint64_t> budget_override() {
  const char* raw = std::getenv("FORGE_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == nullptr || *end != '\0')
    throw ParseError("FORGE_BUDGET must be a positive integer");
  return value;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    std::size_t comma = s.find(',', pos);
    out.push_back(s.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::set<unsigned> parse_place_list(const std::string& s) {
  std::set<unsigned> out;
  for (const std::string& item : split_list(s)) {
    unsigned long v = std::stoul(item);
    if (v == 0) throw ParseError("real place indices are 1-based");
    out.insert(static_cast<unsigned>(v - 1));
  }
  return out;
}

// "p11:1" (or "11:1"): prime 11, slot 1
FinitePlace parse_finite_place_flag(std::string item) {
  if (!item.empty() && item.front() == 'p') item.erase(item.begin());
  std::size_t colon = item.find(':');
  if (colon == std::string::npos)
    throw ParseError("expected p<prime>:<slot>, got '" + item + "'");
  unsigned long p = std::stoul(item.substr(0, colon));
  unsigned long slot = std::stoul(item.substr(colon + 1));
  if (slot == 0) throw ParseError("finite place slots are 1-based");
  return FinitePlace{p, static_cast<unsigned>(slot - 1)};
}

std::vector<Signature> parse_signatures_flag(const std::string& s) {
  std::vector<Signature> out;
  std::size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    std::size_t colon = s.find(':', pos);
    std::string item = s.substr(
        pos, colon == std::string::npos ? std::string::npos : colon - pos);
    std::size_t comma = item.find(',');
    if (comma == std::string::npos)
      throw ParseError("expected p,q signature, got '" + item + "'");
    out.emplace_back(static_cast<unsigned>(std::stoul(item.substr(0, comma))),
                     static_cast<unsigned>(std::stoul(item.substr(comma + 1))));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  return out;
}

std::map<FinitePlace, std::string> parse_marks_flag(const std::string& s) {
  std::map<FinitePlace, std::string> out;
  for (const std::string& item : split_list(s)) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected p<prime>:<slot>=<tag>, got '" + item + "'");
    out[parse_finite_place_flag(item.substr(0, eq))] = item.substr(eq + 1);
  }
  return out;
}

// Attach split witnesses for every prime the datum mentions, then rebuild
// the field through the validating constructor.
FieldRef field_with_witnesses(const TotallyRealField& field,
                              const std::set<std::uint64_t>& primes) {
  std::vector<SplitPrimeWitness> witnesses = field.split_witnesses;
  for (std::uint64_t p : primes) {
    if (field.witness_for(p) != nullptr) continue;
    auto witness = split_witness_at(field.definer, p);
    if (!witness)
      throw ParseError("prime " + std::to_string(p) +
                       " does not split completely in the field");
    witnesses.push_back(std::move(*witness));
  }
  std::sort(witnesses.begin(), witnesses.end(),
            [](const auto& a, const auto& b) { return a.p < b.p; });
  return std::make_shared<const TotallyRealField>(
      make_field(field.definer, field.aut_certificate, std::move(witnesses)));
}

int cmd_forge_field(unsigned degree, std::uint64_t seed,
                    std::uint64_t prime_bound) {
  ForgeOptions options;
  options.prime_bound = prime_bound;
  if (auto budget = budget_override()) options.doubling_budget = *budget;
  TotallyRealField field = forge_field(degree, seed, options);
  std::cout << serialize_document(
      make_field_document(std::move(field), tool_provenance(seed)));
  return kExitGranted;
}

struct DatumFlags {
  std::string kind;
  std::string field_path;
  std::string ram_infinite;
  std::string ram_finite;
  unsigned n = 0;
  std::string signatures;
  std::string s_real;
  std::string s_quaternionic;
  std::string marks;
  bool isotropy_witness = false;
  bool no_isotropy_witness = false;
  std::string cm_note;
};

int cmd_forge_datum(const DatumFlags& flags) {
  Document field_doc = parse_typed_document(read_file(flags.field_path));
  if (field_doc.kind != "field")
    throw ParseError("'" + flags.field_path + "' is not a field document");
  const TotallyRealField& base = *field_doc.field;

  ShimuraDatumDescriptor descriptor;
  if (flags.kind == "quaternionic") {
    std::set<FinitePlace> ram_finite;
    for (const std::string& item : split_list(flags.ram_finite))
      ram_finite.insert(parse_finite_place_flag(item));
    std::set<std::uint64_t> primes;
    for (const FinitePlace& v : ram_finite) primes.insert(v.p);
    descriptor.datum = make_quaternion_datum(
        field_with_witnesses(base, primes),
        parse_place_list(flags.ram_infinite), std::move(ram_finite));
  } else if (flags.kind == "unitary") {
    auto marks = parse_marks_flag(flags.marks);
    std::set<std::uint64_t> primes;
    for (const auto& [place, tag] : marks) primes.insert(place.p);
    descriptor.datum = make_unitary_datum(
        field_with_witnesses(base, primes), flags.n,
        parse_signatures_flag(flags.signatures), std::move(marks),
        flags.isotropy_witness, flags.cm_note);
  } else if (flags.kind == "type-d") {
    auto marks = parse_marks_flag(flags.marks);
    std::set<std::uint64_t> primes;
    for (const auto& [place, tag] : marks) primes.insert(place.p);
    descriptor.datum = make_type_d_datum(
        field_with_witnesses(base, primes), flags.n,
        parse_place_list(flags.s_real), parse_place_list(flags.s_quaternionic),
        std::move(marks), !flags.no_isotropy_witness);
  } else {
    throw ParseError("unknown datum kind '" + flags.kind + "'");
  }
  std::cout << serialize_document(
      make_datum_document(std::move(descriptor), field_doc.provenance));
  return kExitGranted;
}

int cmd_certify(const std::string& datum_path, const std::string& perm_text,
                bool propose, const std::string& marking_path,
                bool assert_realizable) {
  Document datum_doc = parse_typed_document(read_file(datum_path));
  if (datum_doc.kind != "datum")
    throw ParseError("'" + datum_path + "' is not a datum document");
  const ShimuraDatumDescriptor& descriptor = *datum_doc.datum;
  const unsigned degree = field_of(descriptor).degree;

  Permutation pi = Permutation::identity(degree);
  if (propose) {
    auto suggestion = propose_tau(descriptor);
    if (!suggestion)
      throw ParseError(
          "no usable permutation exists: all real places carry identical "
          "local data");
    pi = *suggestion;
  } else if (perm_text == "identity") {
    // already the identity
  } else {
    auto parsed = Permutation::parse_one_line(perm_text);
    if (!parsed || parsed->degree() != degree)
      throw ParseError("bad permutation '" + perm_text + "' for degree " +
                       std::to_string(degree));
    pi = *parsed;
  }

  std::optional<MarkingRecord> marking;
  if (!marking_path.empty()) {
    Document marking_doc = parse_typed_document(read_file(marking_path));
    if (marking_doc.kind != "marking")
      throw ParseError("'" + marking_path + "' is not a marking document");
    marking = marking_doc.marking;
  }

  RigidityCertificate certificate =
      issue_certificate(descriptor, pi, marking, assert_realizable);
  const Verdict verdict = certificate.verdict;
  std::cout << serialize_document(make_certificate_document(
      std::move(certificate), datum_doc.provenance));
  return verdict == Verdict::Granted ? kExitGranted : kExitRefused;
}

int cmd_replay(const std::string& certificate_path) {
  const std::string stored = read_file(certificate_path);
  Document doc = parse_typed_document(stored);
  std::string recomputed;
  try {
    recomputed = recompute_document_text(doc);
  } catch (const Error& e) {
    std::cerr << "replay failed: " << e.what() << "\n";
    return kExitRefused;
  }
  if (recomputed != stored) {
    std::cerr << "replay mismatch: recomputed document differs from '"
              << certificate_path << "'\n";
    return kExitRefused;
  }
  if (doc.kind == "certificate")
    std::cout << "replay ok: verdict " << to_string(doc.certificate->verdict)
              << "\n";
  else
    std::cout << "replay ok: " << doc.kind << " document\n";
  return kExitGranted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generator and certifier of conjugate Shimura-datum examples"};
  app.require_subcommand(1);
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + kToolVersion);

  auto* forge_field_cmd =
      app.add_subcommand("forge-field",
                         "forge a totally real field with Galois group S_d");
  unsigned degree = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime_bound = 1000;
  forge_field_cmd->add_option("--degree", degree, "field degree (>= 3)")
      ->required()
      ->check(CLI::Range(3u, 16u));
  forge_field_cmd->add_option("--seed", seed, "search seed");
  forge_field_cmd->add_option("--prime-bound", prime_bound,
                              "prime bound for the certification scan")
      ->check(CLI::Range(std::uint64_t(5), std::uint64_t(1) << 40));

  auto* forge_datum_cmd = app.add_subcommand(
      "forge-datum", "build a local-invariant datum over a forged field");
  DatumFlags datum_flags;
  forge_datum_cmd
      ->add_option("--kind", datum_flags.kind,
                   "quaternionic | unitary | type-d")
      ->required()
      ->check(CLI::IsMember({"quaternionic", "unitary", "type-d"}));
  forge_datum_cmd->add_option("--field", datum_flags.field_path,
                              "field document")
      ->required();
  forge_datum_cmd->add_option("--ram-infinite", datum_flags.ram_infinite,
                              "definite real places, e.g. \"1\" or \"1,3\"");
  forge_datum_cmd->add_option("--ram-finite", datum_flags.ram_finite,
                              "ramified finite places, e.g. \"p11:1\"");
  forge_datum_cmd->add_option("--n", datum_flags.n,
                              "rank parameter (unitary / type-d)");
  forge_datum_cmd->add_option("--signatures", datum_flags.signatures,
                              "per-place signatures \"3,1:3,1:2,2\"");
  forge_datum_cmd->add_option("--s-real", datum_flags.s_real,
                              "indefinite real places (type-d)");
  forge_datum_cmd->add_option("--s-quaternionic", datum_flags.s_quaternionic,
                              "definite real places (type-d)");
  forge_datum_cmd->add_option("--marks", datum_flags.marks,
                              "finite local marks \"p11:1=type-B\"");
  forge_datum_cmd->add_flag("--isotropy-witness", datum_flags.isotropy_witness,
                            "diagonal contains +-1 blocks (unitary)");
  forge_datum_cmd->add_flag("--no-isotropy-witness",
                            datum_flags.no_isotropy_witness,
                            "drop the isotropy witness (type-d)");
  forge_datum_cmd->add_option("--cm-note", datum_flags.cm_note,
                              "CM splitting note (unitary)");

  auto* certify_cmd = app.add_subcommand(
      "certify", "conjugate a datum and issue a rigidity certificate");
  std::string datum_path, perm_text, marking_path;
  bool propose = false, assert_realizable = false;
  certify_cmd->add_option("--datum", datum_path, "datum document")->required();
  auto* perm_opt = certify_cmd->add_option(
      "--perm", perm_text, "place permutation \"2,1,3\" or \"identity\"");
  auto* propose_opt = certify_cmd->add_flag(
      "--propose", propose, "use the smallest partition-moving transposition");
  perm_opt->excludes(propose_opt);
  certify_cmd->add_option("--marking", marking_path, "marking document");
  certify_cmd->add_flag("--assert-realizable", assert_realizable,
                        "accept the permutation as realizable without an S_d "
                        "certificate");

  auto* replay_cmd = app.add_subcommand(
      "replay", "recompute a document and compare byte-for-byte");
  std::string certificate_path;
  replay_cmd->add_option("--certificate", certificate_path, "document to check")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (app.got_subcommand(forge_field_cmd))
      return cmd_forge_field(degree, seed, prime_bound);
    if (app.got_subcommand(forge_datum_cmd)) return cmd_forge_datum(datum_flags);
    if (app.got_subcommand(certify_cmd)) {
      if (!propose && perm_text.empty()) {
        std::cerr << "certify needs --perm or --propose\n";
        return kExitInvalid;
      }
      return cmd_certify(datum_path, perm_text, propose, marking_path,
                         assert_realizable);
    }
    if (app.got_subcommand(replay_cmd)) return cmd_replay(certificate_path);
  } catch (const SearchExhaustedError& e) {
    std::cerr << e.what() << "\n";
    return kExitRefused;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidDatumError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
