#include <doctest.h>

#include "conjforge/crt.hpp"
#include "conjforge/errors.hpp"
#include "conjforge/modp.hpp"
#include "conjforge/polynomial.hpp"
#include "conjforge/sturm.hpp"
#include "oracles.hpp"

using namespace conjforge;

namespace {

IntPolynomial random_monic(SplitMix64& rng, unsigned degree, long coeff_bound) {
  std::vector<Int> coeffs;
  for (unsigned i = 0; i < degree; ++i) {
    long magnitude = static_cast<long>(rng.below(2 * coeff_bound + 1));
    coeffs.emplace_back(magnitude - coeff_bound);
  }
  coeffs.emplace_back(1);
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("sturm counts on the whole line") {
  CHECK(sturm_real_root_count(IntPolynomial{1, 0, 1}) == 0);   // X^2+1
  CHECK(sturm_real_root_count(IntPolynomial{-2, 0, 1}) == 2);  // X^2-2
  CHECK(sturm_real_root_count(IntPolynomial{-1, -3, 0, 1}) == 3);  // X^3-3X-1
  // repeated roots count once
  IntPolynomial square = IntPolynomial{-2, 0, 1} * IntPolynomial{-2, 0, 1};
  CHECK(sturm_real_root_count(square) == 2);
  CHECK(sturm_real_root_count(IntPolynomial{7}) == 0);
  CHECK_THROWS_AS(sturm_real_root_count(IntPolynomial::zero()),
                  std::invalid_argument);
}

TEST_CASE("root isolation") {
  SUBCASE("X^2 - 2 gives two intervals straddling the square roots") {
    auto isolation = isolate_real_roots(IntPolynomial{-2, 0, 1});
    REQUIRE(isolation.count() == 2);
    const auto& [lo1, hi1] = isolation.intervals[0];
    const auto& [lo2, hi2] = isolation.intervals[1];
    CHECK(lo1 >= Rat(-2));
    CHECK(hi1 <= Rat(0));
    CHECK(lo2 >= Rat(0));
    CHECK(hi2 <= Rat(2));
  }
  SUBCASE("X^3 - 4X - 1 isolates inside (-2,-1), (-1,0), (2,3)") {
    IntPolynomial f{-1, -4, 0, 1};
    auto isolation = isolate_real_roots(f);
    REQUIRE(isolation.count() == 3);
    const std::pair<long, long> enclosures[3] = {{-2, -1}, {-1, 0}, {2, 3}};
    for (int i = 0; i < 3; ++i) {
      const auto& [lo, hi] = isolation.intervals[i];
      CHECK(lo >= Rat(enclosures[i].first));
      CHECK(hi <= Rat(enclosures[i].second));
      // exactly one sign change across each interval
      CHECK(sgn(f.eval(lo)) * sgn(f.eval(hi)) == -1);
    }
  }
  SUBCASE("no real roots gives an empty list") {
    CHECK(isolate_real_roots(IntPolynomial{1, 0, 1}).count() == 0);
  }
  SUBCASE("squarefreeness is a precondition") {
    IntPolynomial square = IntPolynomial{-2, 0, 1} * IntPolynomial{-2, 0, 1};
    CHECK_THROWS_AS(isolate_real_roots(square), NotSquarefreeError);
    CHECK_THROWS_AS(isolate_real_roots(IntPolynomial{0, 0, 1}),
                    NotSquarefreeError);
  }
  SUBCASE("exact rational roots still isolate") {
    // roots 0, 1, 2 hit bisection midpoints
    IntPolynomial f = IntPolynomial{0, 1} * IntPolynomial{-1, 1} *
                      IntPolynomial{-2, 1};
    auto isolation = isolate_real_roots(f);
    REQUIRE(isolation.count() == 3);
    long roots[3] = {0, 1, 2};
    for (int i = 0; i < 3; ++i) {
      const auto& [lo, hi] = isolation.intervals[i];
      CHECK(lo < Rat(roots[i]));
      CHECK(hi > Rat(roots[i]));
      CHECK(hi - lo < Rat(1, 64));
    }
  }
}

TEST_CASE("isolation width and disjointness") {
  SplitMix64 rng(2024);
  unsigned isolated = 0;
  while (isolated < 60) {
    unsigned degree = 1 + static_cast<unsigned>(rng.below(8));
    IntPolynomial f = random_monic(rng, degree, 50);
    if (!is_squarefree_over_q(f)) continue;
    ++isolated;
    auto isolation = isolate_real_roots(f);
    CHECK(isolation.count() == sturm_real_root_count(f));
    for (std::size_t i = 0; i < isolation.count(); ++i) {
      const auto& [lo, hi] = isolation.intervals[i];
      CHECK(lo < hi);
      CHECK(hi - lo < Rat(1, 64));
      CHECK(sturm_real_root_count_in(f, lo, hi) == 1);
      if (i > 0) CHECK(isolation.intervals[i - 1].second <= lo);
    }
  }
}

TEST_CASE("isolation separates a near-double root pair") {
  // X^4 - 2(10X - 1)^2: two of the four real roots are ~0.003 apart near
  // 1/10, far below the 1/64 width cap
  IntPolynomial f{-2, 40, -200, 0, 1};
  REQUIRE(sturm_real_root_count(f) == 4);
  auto isolation = isolate_real_roots(f);
  REQUIRE(isolation.count() == 4);
  unsigned near_tenth = 0;
  for (const auto& [lo, hi] : isolation.intervals) {
    CHECK(sturm_real_root_count_in(f, lo, hi) == 1);
    if (lo > Rat(8, 100) && hi < Rat(12, 100)) ++near_tenth;
  }
  CHECK(near_tenth == 2);
}

TEST_CASE("sturm count agrees with the grid sign-scan oracle") {
  SplitMix64 rng(77);
  unsigned checked = 0;
  while (checked < 40) {
    unsigned degree = 1 + static_cast<unsigned>(rng.below(6));
    IntPolynomial f = random_monic(rng, degree, 9);
    if (!is_squarefree_over_q(f)) continue;
    ++checked;
    CHECK(sturm_real_root_count(f) == oracles::sign_scan_root_count(f));
  }
}

TEST_CASE("degree patterns mod p") {
  CHECK(degree_pattern_mod(IntPolynomial{1, 0, 1}, 3) == DegreePattern{2});
  CHECK(degree_pattern_mod(IntPolynomial{-1, -1, 0, 1}, 2) == DegreePattern{3});
  CHECK(degree_pattern_mod(IntPolynomial{-5, 0, 1}, 11) ==
        DegreePattern{1, 1});
  CHECK_THROWS_AS(degree_pattern_mod(IntPolynomial{1, 0, 1}, 2),
                  NotSquarefreeModPError);
  CHECK_THROWS_AS(degree_pattern_mod(IntPolynomial{1, 0, 1}, 4), NotPrimeError);
}

TEST_CASE("degree patterns sum to the degree and match trial division") {
  SplitMix64 rng(5150);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11};
  unsigned checked = 0;
  while (checked < 60) {
    unsigned degree = 1 + static_cast<unsigned>(rng.below(7));
    IntPolynomial f = random_monic(rng, degree, 30);
    std::uint64_t p = primes[rng.below(5)];
    DegreePattern pattern;
    try {
      pattern = degree_pattern_mod(f, p);
    } catch (const NotSquarefreeModPError&) {
      continue;
    }
    ++checked;
    unsigned sum = 0;
    for (unsigned part : pattern) sum += part;
    CHECK(sum == degree);
    CHECK(pattern == oracles::naive_pattern_mod(f, p));
  }
}

TEST_CASE("split residues") {
  auto residues = split_residues(IntPolynomial{-5, 0, 1}, 11);
  REQUIRE(residues.has_value());
  CHECK(*residues == std::vector<std::uint64_t>{4, 7});
  CHECK_FALSE(split_residues(IntPolynomial{-5, 0, 1}, 7).has_value());
}

TEST_CASE("crt lifting") {
  const IntPolynomial x{0, 1};
  SUBCASE("empty constraint set returns the template") {
    CHECK(crt_lift({}, x) == x);
  }
  SUBCASE("closest representative with ties toward the larger value") {
    // X+1 mod 2 over template X: the odd integers closest to 0 are +-1,
    // and the tie goes up
    IntPolynomial lifted = crt_lift({{2, IntPolynomial{1, 1}}}, x);
    CHECK(lifted == IntPolynomial{1, 1});
  }
  SUBCASE("degree mismatch is rejected") {
    CHECK_THROWS_AS(crt_lift({{2, IntPolynomial{1, 1}}}, IntPolynomial{0, 0, 1}),
                    DegreeMismatchError);
  }
  SUBCASE("non-tie picks the nearer representative") {
    // residue 1 mod 5 with template constant 3: candidates 1 and 6, and 1
    // is nearer
    IntPolynomial lifted = crt_lift({{5, IntPolynomial{1, 1}}},
                                    IntPolynomial{3, 1});
    CHECK(lifted == IntPolynomial{1, 1});
  }
  SUBCASE("lift reduces to every target") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      unsigned degree = 2 + static_cast<unsigned>(rng.below(5));
      IntPolynomial tmpl = random_monic(rng, degree, 1000);
      std::vector<std::pair<std::uint64_t, IntPolynomial>> targets;
      for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
        targets.emplace_back(p, random_monic(rng, degree, 50));
      IntPolynomial lifted = crt_lift(targets, tmpl);
      CHECK(lifted.is_monic());
      CHECK(lifted.degree() == static_cast<int>(degree));
      for (const auto& [p, target] : targets) {
        for (unsigned i = 0; i <= degree; ++i) {
          Int diff = lifted.coeff(i) - target.coeff(i);
          CHECK(diff % static_cast<unsigned long>(p) == 0);
        }
      }
    }
  }
}
