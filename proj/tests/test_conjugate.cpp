#include <doctest.h>

#include "conjforge/conjugate.hpp"
#include "conjforge/errors.hpp"
#include "oracles.hpp"

using namespace conjforge;

namespace {

Permutation perm(std::vector<unsigned> one_based) {
  for (unsigned& v : one_based) --v;
  return Permutation::from_images(std::move(one_based));
}

ShimuraDatumDescriptor wrap(auto datum) {
  ShimuraDatumDescriptor out;
  out.datum = std::move(datum);
  return out;
}

FieldRef certified_with_witness(unsigned degree, std::uint64_t seed,
                                SplitPrimeWitness* witness_out = nullptr) {
  TotallyRealField base = forge_field(degree, seed);
  SplitPrimeWitness witness = find_split_prime(base.definer, 2);
  if (witness_out != nullptr) *witness_out = witness;
  return std::make_shared<const TotallyRealField>(
      make_field(base.definer, base.aut_certificate, {witness}));
}

// the cyclic cubic: totally real, with honest nontrivial automorphisms
FieldRef cyclic_cubic_with_witness(SplitPrimeWitness* witness_out = nullptr) {
  const IntPolynomial f{-1, -3, 0, 1};
  SplitPrimeWitness witness = find_split_prime(f, 2);
  if (witness_out != nullptr) *witness_out = witness;
  return std::make_shared<const TotallyRealField>(
      make_field(f, std::nullopt, {witness}));
}

Permutation random_perm(SplitMix64& rng, unsigned n) {
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = i;
  for (unsigned i = n; i > 1; --i)
    std::swap(images[i - 1], images[static_cast<unsigned>(rng.below(i))]);
  return Permutation::from_images(std::move(images));
}

std::multiset<Signature> signature_multiset(const ShimuraDatumDescriptor& d) {
  const auto& u = std::get<UnitaryDatum>(d.datum);
  return {u.signatures.begin(), u.signatures.end()};
}

}  // namespace

TEST_CASE("conjugation pulls real data back and fixes finite data") {
  SplitPrimeWitness witness;
  FieldRef field = certified_with_witness(3, 0, &witness);
  auto datum =
      wrap(make_quaternion_datum(field, {0}, {FinitePlace{witness.p, 0}}));

  SUBCASE("identity fixes everything") {
    CHECK(conjugate_datum(datum, Permutation::identity(3)) == datum);
  }
  SUBCASE("a transposition moves the definite place") {
    auto moved = conjugate_datum(datum, perm({2, 1, 3}));
    const auto& q = std::get<QuaternionDatum>(moved.datum);
    CHECK(q.ram_infinite == std::set<unsigned>{1});
    CHECK(q.ram_finite ==
          std::get<QuaternionDatum>(datum.datum).ram_finite);
  }
  SUBCASE("degree mismatch is rejected") {
    CHECK_THROWS_AS(conjugate_datum(datum, Permutation::identity(4)),
                    DegreeMismatchError);
  }
}

TEST_CASE("unitary signatures swap under the pullback") {
  auto field = std::make_shared<const TotallyRealField>(
      make_field(IntPolynomial{-2, 0, 1}, std::nullopt));
  auto datum = wrap(make_unitary_datum(field, 4, {{3, 1}, {2, 2}}, {}, true));
  auto moved = conjugate_datum(datum, perm({2, 1}));
  const auto& u = std::get<UnitaryDatum>(moved.datum);
  CHECK(u.signatures == std::vector<Signature>{{2, 2}, {3, 1}});
}

TEST_CASE("conjugation laws and conserved quantities") {
  SplitMix64 rng(1234);
  std::vector<FieldRef> fields;
  for (unsigned d = 3; d <= 7; ++d) fields.push_back(certified_with_witness(d, 0));

  for (int trial = 0; trial < 300; ++trial) {
    FieldRef field = fields[rng.below(fields.size())];
    const unsigned d = field->degree;
    ShimuraDatumDescriptor datum;
    switch (rng.below(3)) {
      case 0: {
        std::set<unsigned> definite;
        while (definite.size() < 2)
          definite.insert(static_cast<unsigned>(rng.below(d)));
        datum = wrap(make_quaternion_datum(field, definite, {}));
        break;
      }
      case 1: {
        unsigned n = 2 + static_cast<unsigned>(rng.below(4));
        std::vector<Signature> signatures;
        for (unsigned v = 0; v < d; ++v) {
          unsigned q = static_cast<unsigned>(rng.below(n / 2 + 1));
          signatures.emplace_back(n - q, q);
        }
        datum = wrap(make_unitary_datum(field, n, signatures, {},
                                        rng.below(2) == 0));
        break;
      }
      default: {
        unsigned n = 5 + static_cast<unsigned>(rng.below(3));
        std::set<unsigned> s_real;
        unsigned size = 1 + static_cast<unsigned>(rng.below(d - 1));
        while (s_real.size() < size)
          s_real.insert(static_cast<unsigned>(rng.below(d)));
        std::set<unsigned> s_quaternionic;
        for (unsigned v = 0; v < d; ++v)
          if (!s_real.contains(v)) s_quaternionic.insert(v);
        datum = wrap(make_type_d_datum(field, n, s_real, s_quaternionic, {}));
        break;
      }
    }
    const Permutation pi = random_perm(rng, d);
    const Permutation rho = random_perm(rng, d);
    const auto conj = conjugate_datum(datum, pi);

    // involution
    CHECK(conjugate_datum(conj, pi.inverse()) == datum);
    // composition under the pullback convention
    CHECK(conjugate_datum(conj, rho) ==
          conjugate_datum(datum, compose(pi, rho)));
    // conserved quantities
    CHECK(dimension(conj) == dimension(datum));
    CHECK(real_rank(conj) == real_rank(datum));
    std::visit(
        [&](const auto& original) {
          using T = std::decay_t<decltype(original)>;
          const auto& moved = std::get<T>(conj.datum);
          if constexpr (std::is_same_v<T, QuaternionDatum>) {
            CHECK(moved.ram_infinite.size() == original.ram_infinite.size());
            CHECK(moved.ram_finite == original.ram_finite);
          } else if constexpr (std::is_same_v<T, UnitaryDatum>) {
            CHECK(signature_multiset(conj) == signature_multiset(datum));
            CHECK(moved.finite_marks == original.finite_marks);
          } else {
            CHECK(moved.s_real.size() == original.s_real.size());
            CHECK(moved.s_quaternionic.size() ==
                  original.s_quaternionic.size());
            CHECK(moved.finite_marks == original.finite_marks);
          }
        },
        datum.datum);
  }
}

TEST_CASE("propose_tau finds the smallest separating transposition") {
  SplitPrimeWitness witness;
  FieldRef field = certified_with_witness(3, 0, &witness);

  auto definite_second =
      wrap(make_quaternion_datum(field, {1}, {FinitePlace{witness.p, 0}}));
  CHECK(propose_tau(definite_second) == perm({2, 1, 3}));

  auto field2 = std::make_shared<const TotallyRealField>(
      make_field(IntPolynomial{-2, 0, 1}, std::nullopt));
  auto equal_signatures =
      wrap(make_unitary_datum(field2, 4, {{2, 2}, {2, 2}}, {}, false));
  CHECK_FALSE(propose_tau(equal_signatures).has_value());

  auto type_d = wrap(make_type_d_datum(field, 5, {0}, {1, 2}, {}));
  CHECK(propose_tau(type_d) == perm({2, 1, 3}));
}

TEST_CASE("marking verification") {
  SplitPrimeWitness witness;
  FieldRef field = certified_with_witness(3, 0, &witness);
  const MarkingRecord marking{witness.p, 0};

  CHECK(verify_marking(*field, marking,
                       {"ramified", "unramified", "unramified"}));
  CHECK_FALSE(verify_marking(*field, marking, {"same", "same", "same"}));
  CHECK_FALSE(
      verify_marking(*field, marking, {"ramified", "unramified", "ramified"}));
  CHECK_THROWS_AS(verify_marking(*field, MarkingRecord{997, 0},
                                 {"a", "b", "c"}),
                  MissingSplitWitnessError);
}

TEST_CASE("certificates: granted and refused paths") {
  SplitPrimeWitness witness;
  FieldRef field = certified_with_witness(3, 0, &witness);
  auto datum =
      wrap(make_quaternion_datum(field, {0}, {FinitePlace{witness.p, 0}}));

  SUBCASE("the flagship quaternionic pair is granted") {
    auto cert = issue_certificate(datum, perm({2, 1, 3}));
    CHECK(cert.verdict == Verdict::Granted);
    CHECK(cert.checks.rank_ok);
    CHECK(cert.checks.rank_value == 2);
    CHECK(cert.checks.partition_moved);
    CHECK(cert.checks.aut_control == AutControl::CertifiedTrivialAut);
    CHECK(cert.checks.realizability == Realizability::FullSymmetric);
    CHECK(cert.refusal_reasons.empty());
    CHECK_NOTHROW(replay_certificate(cert));
  }
  SUBCASE("identity is always refused") {
    auto cert = issue_certificate(datum, Permutation::identity(3));
    CHECK(cert.verdict == Verdict::Refused);
    CHECK(cert.refusal_reasons == std::vector<std::string>{"partition_moved"});
    CHECK_NOTHROW(replay_certificate(cert));
  }
  SUBCASE("a permutation fixing the partition is refused") {
    // (2 3) fixes the definite place v1
    auto cert = issue_certificate(datum, perm({1, 3, 2}));
    CHECK(cert.verdict == Verdict::Refused);
    CHECK(cert.refusal_reasons == std::vector<std::string>{"partition_moved"});
  }
  SUBCASE("invalid data are rejected before certification") {
    auto low_rank = wrap(make_quaternion_datum(field, {0, 1}, {}));
    CHECK_THROWS_AS(issue_certificate(low_rank, perm({2, 1, 3})),
                    InvalidDatumError);
  }
}

TEST_CASE("galois evasion: symmetric finite data with nontrivial Aut(F)") {
  SplitPrimeWitness witness;
  FieldRef cyclic = cyclic_cubic_with_witness(&witness);
  // ramify every place above p: Galois-stable finite data, |ram| = 3+1 even
  auto datum = wrap(make_quaternion_datum(
      cyclic, {0},
      {FinitePlace{witness.p, 0}, FinitePlace{witness.p, 1},
       FinitePlace{witness.p, 2}}));
  const Permutation tau = perm({2, 1, 3});

  SUBCASE("no marking: refused for lack of automorphism control") {
    auto cert = issue_certificate(datum, tau);
    CHECK(cert.verdict == Verdict::Refused);
    REQUIRE(cert.refusal_reasons.size() == 2);
    CHECK(cert.refusal_reasons[0] == "aut_control");
    CHECK(cert.refusal_reasons[1] == "realizability");
    CHECK_NOTHROW(replay_certificate(cert));
  }
  SUBCASE("a duplicated tag cannot serve as a marking") {
    auto cert = issue_certificate(datum, tau, MarkingRecord{witness.p, 0});
    CHECK(cert.verdict == Verdict::Refused);
    CHECK(cert.checks.aut_control == AutControl::None);
  }
  SUBCASE("a genuinely unique mark plus asserted realizability grants") {
    auto marked = wrap(make_quaternion_datum(
        cyclic, {0}, {FinitePlace{witness.p, 0}}));
    auto cert = issue_certificate(marked, tau, MarkingRecord{witness.p, 0},
                                  /*assert_realizable=*/true);
    CHECK(cert.verdict == Verdict::Granted);
    CHECK(cert.checks.aut_control == AutControl::FiniteMarking);
    REQUIRE(cert.checks.marking_place.has_value());
    CHECK(*cert.checks.marking_place == (FinitePlace{witness.p, 0}));
    CHECK_NOTHROW(replay_certificate(cert));
  }
  SUBCASE("without the realizability assertion the marked pair is refused") {
    auto marked = wrap(make_quaternion_datum(
        cyclic, {0}, {FinitePlace{witness.p, 0}}));
    auto cert = issue_certificate(marked, tau, MarkingRecord{witness.p, 0});
    CHECK(cert.verdict == Verdict::Refused);
    CHECK(cert.refusal_reasons == std::vector<std::string>{"realizability"});
  }
}

TEST_CASE("identity is refused for every valid datum") {
  SplitMix64 rng(90210);
  FieldRef field = certified_with_witness(4, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<unsigned> definite;
    while (definite.size() < 2)
      definite.insert(static_cast<unsigned>(rng.below(4)));
    auto datum = wrap(make_quaternion_datum(field, definite, {}));
    auto cert = issue_certificate(datum, Permutation::identity(4));
    CHECK(cert.verdict == Verdict::Refused);
  }
}
