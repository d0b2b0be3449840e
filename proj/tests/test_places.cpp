#include <doctest.h>

#include "conjforge/field.hpp"
#include "conjforge/numeric.hpp"
#include "conjforge/places.hpp"

using namespace conjforge;

namespace {

Permutation perm(std::vector<unsigned> one_based) {
  for (unsigned& v : one_based) --v;
  return Permutation::from_images(std::move(one_based));
}

Permutation random_perm(SplitMix64& rng, unsigned n) {
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = i;
  for (unsigned i = n; i > 1; --i) {
    unsigned j = static_cast<unsigned>(rng.below(i));
    std::swap(images[i - 1], images[j]);
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace

TEST_CASE("composition and inverses") {
  const Permutation id = Permutation::identity(3);
  const Permutation cycle = perm({2, 3, 1});
  CHECK(compose(id, cycle) == cycle);
  CHECK(compose(cycle, cycle.inverse()) == id);
  CHECK(compose(cycle, cycle) == perm({3, 1, 2}));
  CHECK_THROWS_AS(compose(cycle, Permutation::identity(4)),
                  DegreeMismatchError);
}

TEST_CASE("group laws under composition") {
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned n = 1 + static_cast<unsigned>(rng.below(7));
    Permutation a = random_perm(rng, n);
    Permutation b = random_perm(rng, n);
    Permutation c = random_perm(rng, n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(Permutation::identity(n), a) == a);
    CHECK(compose(a, Permutation::identity(n)) == a);
    CHECK(compose(a, a.inverse()) == Permutation::identity(n));
    CHECK(compose(a.inverse(), a) == Permutation::identity(n));
  }
}

TEST_CASE("one-line serialization round-trips") {
  const Permutation pi = perm({2, 1, 3});
  CHECK(pi.to_one_line() == "2,1,3");
  CHECK(Permutation::parse_one_line("2,1,3") == pi);
  CHECK_FALSE(Permutation::parse_one_line("2,2,3").has_value());
  CHECK_FALSE(Permutation::parse_one_line("0,1").has_value());
  CHECK_FALSE(Permutation::parse_one_line("").has_value());
  CHECK_FALSE(Permutation::parse_one_line("a,b").has_value());
}

TEST_CASE("subset preservation") {
  CHECK(preserves_subset(Permutation::identity(5), {0, 3}));
  CHECK_FALSE(preserves_subset(perm({2, 1, 3}), {0}));
  CHECK(preserves_subset(perm({2, 1, 3}), {0, 1}));

  SplitMix64 rng(808);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned n = 1 + static_cast<unsigned>(rng.below(7));
    Permutation pi = random_perm(rng, n);
    std::set<unsigned> subset;
    for (unsigned v = 0; v < n; ++v)
      if (rng.below(2)) subset.insert(v);
    std::set<unsigned> complement;
    for (unsigned v = 0; v < n; ++v)
      if (!subset.contains(v)) complement.insert(v);
    const bool forward = preserves_subset(pi, subset);
    CHECK(forward == preserves_subset(pi.inverse(), subset));
    CHECK(forward == preserves_subset(pi, complement));
  }
}

TEST_CASE("realizability notes") {
  TotallyRealField certified = forge_field(3, 0);
  CHECK(realizability_note(certified) == Realizability::FullSymmetric);

  TotallyRealField quadratic = make_field(IntPolynomial{-2, 0, 1}, std::nullopt);
  CHECK(realizability_note(quadratic) == Realizability::TransitivityOnly);

  TotallyRealField rational = make_field(IntPolynomial{-7, 1}, std::nullopt);
  CHECK(realizability_note(rational) == Realizability::FullSymmetric);
}
