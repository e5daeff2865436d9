#include <doctest.h>

#include <cstdint>

#include "pptri/lemma_sums.hpp"
#include "test_util.hpp"

using namespace pptri;

TEST_CASE("generalized binomials with negative upper index") {
  CHECK(gen_binom_exact(-1, 2) == BigInt(1));
  CHECK(gen_binom_exact(-2, 2) == BigInt(3));
  CHECK(gen_binom_exact(-3, 4) == BigInt(15));
  CHECK(gen_binom_exact(5, 2) == BigInt(10));
  CHECK(gen_binom_exact(0, 0) == BigInt(1));
  CHECK(gen_binom_exact(3, 5) == BigInt(0));
  CHECK(gen_binom(-2, 2, 2) == 1);
  CHECK(gen_binom(-3, 4, 7) == 1);  // 15 mod 7
  CHECK(gen_binom(-1, 1, 5) == 4);  // -1 mod 5
}

TEST_CASE("quadratic splitting classification") {
  auto F7 = FieldCtx::build(7, 1);
  CHECK(quad_split_kind(*F7, 5) == SplitKind::DoubleRoot);   // 1 + 4z = 0
  CHECK(quad_split_kind(*F7, 2) == SplitKind::TwoRoots);     // 1 + 8 = 2, a square
  CHECK(quad_split_kind(*F7, 1) == SplitKind::Irreducible);  // 5 is not a square
  CHECK(thrown_code([&] { quad_split_kind(*F7, 0); }) == ErrorCode::ZeroInput);
  auto F4 = FieldCtx::build(2, 2);
  CHECK(quad_split_kind(*F4, 1) == SplitKind::TwoRoots);     // trace 0
  CHECK(quad_split_kind(*F4, 2) == SplitKind::Irreducible);  // trace 1
}

TEST_CASE("closed forms match termwise sums on small fields") {
  for (const auto& [p, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    auto F = FieldCtx::build(p, m);
    for (LemmaSumId id : kAllLemmaSums)
      for (std::uint32_t z = 1; z < F->q(); ++z) {
        if (!lemma_hypothesis_holds(*F, id, z)) continue;
        CAPTURE(to_string(id));
        CAPTURE(p);
        CAPTURE(m);
        CAPTURE(z);
        CHECK(lemma_sum(*F, id, z) == lemma_closed(*F, id, z));
      }
  }
}

TEST_CASE("double-root closed value of the plain sum") {
  auto F7 = FieldCtx::build(7, 1);
  // At 1 + 4z = 0 the plain sum collapses to 1/2.
  CHECK(lemma_closed(*F7, LemmaSumId::SumLL, 5) == F7->inv(2));
  CHECK(lemma_sum(*F7, LemmaSumId::SumLL, 5) == F7->inv(2));
  CHECK(lemma_closed(*F7, LemmaSumId::SumL1, 2) == 1);
}

TEST_CASE("hypotheses gate the rational closed forms") {
  auto F7 = FieldCtx::build(7, 1);
  // z = 5 is the double root: the forms with denominator 1 + 4z are undefined.
  CHECK(!lemma_hypothesis_holds(*F7, LemmaSumId::SumLLWeighted, 5));
  CHECK(thrown_code([&] { lemma_closed(*F7, LemmaSumId::SumLLWeighted, 5); }) ==
        ErrorCode::HypothesisViolated);
  CHECK(lemma_hypothesis_holds(*F7, LemmaSumId::SumLL, 5));
  CHECK(lemma_hypothesis_holds(*F7, LemmaSumId::SumLL, 1));
  // Irreducible z fails the two-roots hypothesis for the rational forms.
  CHECK(!lemma_hypothesis_holds(*F7, LemmaSumId::SumL1Weighted, 1));
  CHECK(thrown_code([&] { lemma_sum(*F7, LemmaSumId::SumLL, 0); }) ==
        ErrorCode::ZeroInput);
}

TEST_CASE("binary field degenerate cases") {
  auto F2 = FieldCtx::build(2, 1);
  CHECK(lemma_hypothesis_holds(*F2, LemmaSumId::SumLLTriangular, 1));
  CHECK(lemma_sum(*F2, LemmaSumId::SumLLTriangular, 1) == 0);  // 1 + z at z = 1
  CHECK(lemma_closed(*F2, LemmaSumId::SumLLTriangular, 1) == 0);
  CHECK(lemma_hypothesis_holds(*F2, LemmaSumId::SumL1Triangular, 1));
  CHECK(lemma_closed(*F2, LemmaSumId::SumL1Triangular, 1) == 0);
}
