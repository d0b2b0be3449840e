#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conjforge/modp.hpp"
#include "conjforge/polynomial.hpp"
#include "conjforge/sturm.hpp"

namespace conjforge {

inline constexpr const char* kSymmetricConclusion = "symmetric-group, Aut(F)=1";

/// Replayable witness that the Galois group of a degree-d definer is all of
/// S_d, hence that the field has no automorphism but the identity. Three
/// factor-pattern witnesses: irreducible (transitivity), {1, d-1} (a
/// (d-1)-cycle), and a shape forcing a transposition.
struct GaloisCertificate {
  std::uint64_t p_transitive = 0;
  std::uint64_t p_cycle = 0;
  std::uint64_t p_transposition = 0;
  DegreePattern pattern_transitive;
  DegreePattern pattern_cycle;
  DegreePattern pattern_transposition;
  std::string conclusion = kSymmetricConclusion;

  bool operator==(const GaloisCertificate&) const = default;
};

bool is_transitive_pattern(const DegreePattern& pattern, unsigned d);
bool is_cycle_witness_pattern(const DegreePattern& pattern, unsigned d);
// One part equal to 2, no other even part, and the odd parts either
// pairwise distinct or all equal to 1. Any Frobenius element with such a
// cycle type powers to a transposition.
bool is_transposition_witness_pattern(const DegreePattern& pattern);

/// A completely split rational prime together with the sorted roots of the
/// definer mod p. The ascending residue order is the canonical indexing of
/// the p-adic places.
struct SplitPrimeWitness {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> residues;

  bool operator==(const SplitPrimeWitness&) const = default;
};

struct TotallyRealField {
  unsigned degree = 0;
  IntPolynomial definer;  // monic, irreducible over Q
  RootIsolation embeddings;  // exactly `degree` intervals, ascending
  std::optional<GaloisCertificate> aut_certificate;
  std::vector<SplitPrimeWitness> split_witnesses;

  const SplitPrimeWitness* witness_for(std::uint64_t p) const;

  bool operator==(const TotallyRealField&) const = default;
};

// Validating constructor: checks monicity, total reality (Sturm count =
// degree), isolates embeddings, replays the certificate when present, and
// verifies every split witness. Irreducibility comes from the
// certificate's transitive witness, or from an exact rational-root check
// for degree <= 3; degree >= 4 without a certificate is rejected.
TotallyRealField make_field(IntPolynomial definer,
                            std::optional<GaloisCertificate> certificate,
                            std::vector<SplitPrimeWitness> witnesses = {});

// Scans primes p <= prime_bound with squarefree reduction, collecting the
// first witness of each required pattern. A returned certificate is a
// proof; nullopt only means no witness was found below the bound.
std::optional<GaloisCertificate> certify_symmetric(const IntPolynomial& f,
                                                   std::uint64_t prime_bound);

// Recomputes every witness pattern; throws Error on any mismatch.
void verify_certificate(const IntPolynomial& f, const GaloisCertificate& c);
void verify_split_witness(const IntPolynomial& f, const SplitPrimeWitness& w);

struct ForgeOptions {
  std::uint64_t prime_bound = 1000;    // certification scan bound
  std::uint64_t doubling_budget = 40;  // root-scale doublings before giving up
};

// Forge a degree-d totally real field with Galois group S_d, determined by
// (degree, seed): factor shapes are imposed mod 2, 3, 5 by CRT over a
// template with widely separated integer roots, rescaling until Sturm
// confirms d real roots. Throws SearchExhaustedError past the budget.
TotallyRealField forge_field(unsigned degree, std::uint64_t seed,
                             const ForgeOptions& options = {});

// The {2} + distinct-odd-parts factor shape imposed at the transposition
// witness prime; {1,1,2} for d = 4 where no distinct-odd partition of 2
// exists. Sorted ascending, sums to d.
std::vector<unsigned> transposition_witness_parts(unsigned d);

// Witness at a caller-chosen prime; nullopt when p does not split
// completely (or the reduction is not squarefree).
std::optional<SplitPrimeWitness> split_witness_at(const IntPolynomial& f,
                                                  std::uint64_t p);

// Smallest completely split prime >= start, scanning at most
// prime_budget candidates.
SplitPrimeWitness find_split_prime(const IntPolynomial& f, std::uint64_t start,
                                   std::uint64_t prime_budget = 100000);

}  // namespace conjforge
