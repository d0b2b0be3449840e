#include "conjforge/field.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "conjforge/crt.hpp"
#include "conjforge/errors.hpp"

namespace conjforge {

bool is_transitive_pattern(const DegreePattern& pattern, unsigned d) {
  return pattern.size() == 1 && pattern[0] == d;
}

bool is_cycle_witness_pattern(const DegreePattern& pattern, unsigned d) {
  return d >= 3 && pattern.size() == 2 && pattern[0] == 1 &&
         pattern[1] == d - 1;
}

bool is_transposition_witness_pattern(const DegreePattern& pattern) {
  unsigned twos = 0;
  std::vector<unsigned> odds;
  for (unsigned part : pattern) {
    if (part == 2) {
      ++twos;
    } else if (part % 2 == 0) {
      return false;
    } else {
      odds.push_back(part);
    }
  }
  if (twos != 1) return false;
  const bool all_ones =
      std::all_of(odds.begin(), odds.end(), [](unsigned o) { return o == 1; });
  const bool distinct =
      std::set<unsigned>(odds.begin(), odds.end()).size() == odds.size();
  return distinct || all_ones;
}

const SplitPrimeWitness* TotallyRealField::witness_for(std::uint64_t p) const {
  for (const SplitPrimeWitness& w : split_witnesses) {
    if (w.p == p) return &w;
  }
  return nullptr;
}

namespace {

// Monic integer polynomials of degree 2 or 3 are irreducible over Q exactly
// when they have no integer root dividing the constant term.
bool small_degree_irreducible(const IntPolynomial& f) {
  if (f.degree() == 1) return true;
  const Int c0 = f.coeff(0);
  if (c0 == 0) return false;
  Int bound = abs(c0);
  if (bound > 1000000000000L)
    throw Error("constant term too large for the rational-root check");
  for (Int div(1); div * div <= bound; ++div) {
    if (bound % div != 0) continue;
    Int cof = bound / div;
    for (const Int& r : {Int(div), Int(-div), Int(cof), Int(-cof)}) {
      if (f.eval(r) == 0) return false;
    }
  }
  return true;
}

}  // namespace

void verify_certificate(const IntPolynomial& f, const GaloisCertificate& c) {
  const int d = f.degree();
  if (d < 3) throw Error("certificate replay failed: degree below 3");
  struct Witness {
    std::uint64_t p;
    const DegreePattern* stored;
    bool (*shape)(const DegreePattern&, unsigned);
    const char* name;
  };
  const auto transposition_shape = [](const DegreePattern& pat, unsigned) {
    return is_transposition_witness_pattern(pat);
  };
  const Witness witnesses[] = {
      {c.p_transitive, &c.pattern_transitive,
       [](const DegreePattern& pat, unsigned deg) {
         return is_transitive_pattern(pat, deg);
       },
       "transitive"},
      {c.p_cycle, &c.pattern_cycle,
       [](const DegreePattern& pat, unsigned deg) {
         return is_cycle_witness_pattern(pat, deg);
       },
       "cycle"},
      {c.p_transposition, &c.pattern_transposition, transposition_shape,
       "transposition"},
  };
  for (const Witness& w : witnesses) {
    DegreePattern recomputed;
    try {
      recomputed = degree_pattern_mod(f, w.p);
    } catch (const Error& e) {
      throw Error(std::string("certificate replay failed at the ") + w.name +
                  " witness: " + e.what());
    }
    if (recomputed != *w.stored)
      throw Error(std::string("certificate replay failed: stored ") + w.name +
                  " pattern does not match recomputation at p = " +
                  std::to_string(w.p));
    if (!w.shape(recomputed, static_cast<unsigned>(d)))
      throw Error(std::string("certificate replay failed: ") + w.name +
                  " pattern has the wrong shape at p = " + std::to_string(w.p));
  }
  if (c.conclusion != kSymmetricConclusion)
    throw Error("certificate replay failed: unexpected conclusion");
}

void verify_split_witness(const IntPolynomial& f, const SplitPrimeWitness& w) {
  auto residues = split_residues(f, w.p);
  if (!residues)
    throw Error("split witness replay failed: " + std::to_string(w.p) +
                " does not split completely");
  if (*residues != w.residues)
    throw Error("split witness replay failed: residue mismatch at p = " +
                std::to_string(w.p));
}

TotallyRealField make_field(IntPolynomial definer,
                            std::optional<GaloisCertificate> certificate,
                            std::vector<SplitPrimeWitness> witnesses) {
  if (definer.is_zero() || definer.degree() < 1)
    throw std::invalid_argument("field definer must be nonconstant");
  if (!definer.is_monic())
    throw std::invalid_argument("field definer must be monic");
  const unsigned d = static_cast<unsigned>(definer.degree());
  if (sturm_real_root_count(definer) != d)
    throw Error("definer is not totally real: root count below the degree");
  if (certificate) {
    verify_certificate(definer, *certificate);
  } else if (d <= 3) {
    if (!small_degree_irreducible(definer))
      throw Error("definer is reducible over Q");
  } else {
    throw Error("degree >= 4 field needs a symmetric-group certificate to "
                "witness irreducibility");
  }
  for (const SplitPrimeWitness& w : witnesses)
    verify_split_witness(definer, w);

  TotallyRealField field;
  field.degree = d;
  field.definer = std::move(definer);
  field.embeddings = isolate_real_roots(field.definer);
  field.aut_certificate = std::move(certificate);
  field.split_witnesses = std::move(witnesses);
  return field;
}

std::optional<GaloisCertificate> certify_symmetric(const IntPolynomial& f,
                                                   std::uint64_t prime_bound) {
  if (f.is_zero() || !f.is_monic() || f.degree() < 3)
    throw std::invalid_argument(
        "certification needs a monic polynomial of degree >= 3");
  if (!is_squarefree_over_q(f))
    throw std::invalid_argument("certification needs a squarefree polynomial");
  const unsigned d = static_cast<unsigned>(f.degree());

  GaloisCertificate cert;
  bool have_transitive = false, have_cycle = false, have_transposition = false;
  for (std::uint64_t p = 2; p <= prime_bound; p = next_prime(p + 1)) {
    DegreePattern pattern;
    try {
      pattern = degree_pattern_mod(f, p);
    } catch (const NotSquarefreeModPError&) {
      continue;
    }
    if (!have_transitive && is_transitive_pattern(pattern, d)) {
      cert.p_transitive = p;
      cert.pattern_transitive = pattern;
      have_transitive = true;
    }
    if (!have_cycle && is_cycle_witness_pattern(pattern, d)) {
      cert.p_cycle = p;
      cert.pattern_cycle = pattern;
      have_cycle = true;
    }
    if (!have_transposition && is_transposition_witness_pattern(pattern)) {
      cert.p_transposition = p;
      cert.pattern_transposition = pattern;
      have_transposition = true;
    }
    if (have_transitive && have_cycle && have_transposition) return cert;
  }
  return std::nullopt;
}

std::vector<unsigned> transposition_witness_parts(unsigned d) {
  if (d < 3) throw std::invalid_argument("degree must be >= 3");
  if (d == 4) return {1, 1, 2};
  std::vector<unsigned> parts{2};
  // greedy distinct odd parts 1 + 3 + 5 + ... summing to d - 2, with the
  // remainder folded into the largest part (dropping the 1 when the
  // remainder is odd, to keep every part odd)
  unsigned r = d - 2;
  std::vector<unsigned> odds;
  unsigned next = 1, sum = 0;
  while (sum + next <= r) {
    odds.push_back(next);
    sum += next;
    next += 2;
  }
  unsigned rem = r - sum;
  if (rem != 0) {
    if (rem % 2 == 0) {
      odds.back() += rem;
    } else {
      odds.erase(odds.begin());  // drop the part 1; r == 2 never reaches here
      odds.back() += rem + 1;
    }
  }
  parts.insert(parts.end(), odds.begin(), odds.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

namespace {

// distinct monic irreducibles over F_p with the given factor degrees
std::vector<IntPolynomial> distinct_irreducibles(std::uint64_t p,
                                                 const std::vector<unsigned>& degrees,
                                                 SplitMix64& rng) {
  std::vector<IntPolynomial> out;
  for (unsigned deg : degrees) {
    while (true) {
      IntPolynomial cand = random_monic_irreducible_mod(p, deg, rng);
      if (std::find(out.begin(), out.end(), cand) == out.end()) {
        out.push_back(std::move(cand));
        break;
      }
    }
  }
  return out;
}

IntPolynomial product_mod(std::uint64_t p,
                          const std::vector<IntPolynomial>& factors) {
  ModPoly acc(p, {1});
  for (const IntPolynomial& f : factors) acc = acc * ModPoly::reduce(f, p);
  return acc.to_int_polynomial();
}

}  // namespace

TotallyRealField forge_field(unsigned degree, std::uint64_t seed,
                             const ForgeOptions& options) {
  if (degree < 3)
    throw std::invalid_argument("forged fields need degree >= 3");
  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + degree);

  // factor shapes at the three smallest primes: irreducible mod 2,
  // {1, d-1} mod 3, transposition shape mod 5
  const IntPolynomial f_transitive =
      random_monic_irreducible_mod(2, degree, rng);
  const IntPolynomial f_cycle = product_mod(
      3, {IntPolynomial(std::vector<Int>{
              Int(static_cast<unsigned long>(rng.below(3))), Int(1)}),
          random_monic_irreducible_mod(3, degree - 1, rng)});
  const IntPolynomial f_transposition =
      product_mod(5, distinct_irreducibles(5, transposition_witness_parts(degree), rng));

  const std::vector<std::pair<std::uint64_t, IntPolynomial>> targets = {
      {2, f_transitive}, {3, f_cycle}, {5, f_transposition}};

  Int scale(1);
  for (std::uint64_t iteration = 0; iteration <= options.doubling_budget;
       ++iteration) {
    std::vector<Int> roots;
    roots.reserve(degree);
    for (unsigned i = 1; i <= degree; ++i)
      roots.emplace_back(scale * static_cast<unsigned long>(i));
    IntPolynomial tmpl = IntPolynomial::monic_from_integer_roots(roots);
    IntPolynomial candidate = crt_lift(targets, tmpl);
    if (sturm_real_root_count(candidate) == degree) {
      auto certificate = certify_symmetric(candidate, options.prime_bound);
      if (certificate) return make_field(candidate, std::move(certificate));
    }
    scale *= 2;
  }
  throw SearchExhaustedError(options.doubling_budget);
}

std::optional<SplitPrimeWitness> split_witness_at(const IntPolynomial& f,
                                                  std::uint64_t p) {
  auto residues = split_residues(f, p);
  if (!residues) return std::nullopt;
  return SplitPrimeWitness{p, std::move(*residues)};
}

SplitPrimeWitness find_split_prime(const IntPolynomial& f, std::uint64_t start,
                                   std::uint64_t prime_budget) {
  if (f.is_zero() || !f.is_monic())
    throw std::invalid_argument("split-prime search needs a monic polynomial");
  std::uint64_t p = next_prime(start);
  for (std::uint64_t tried = 0; tried < prime_budget;
       ++tried, p = next_prime(p + 1)) {
    auto witness = split_witness_at(f, p);
    if (witness) return *witness;
  }
  throw SearchExhaustedError(prime_budget);
}

}  // namespace conjforge
