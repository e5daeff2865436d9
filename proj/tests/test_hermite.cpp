#include <doctest.h>

#include <cstdint>

#include "pptri/hermite.hpp"
#include "pptri/lemma_sums.hpp"
#include "test_util.hpp"

using namespace pptri;

TEST_CASE("endpoint exponents") {
  CHECK(endpoint_exponent(7, 0) == 42);  // (q-1) q
  CHECK(endpoint_exponent(7, 1) == 36);  // 1 + (q-2) q
  CHECK(endpoint_exponent(7, 2) == 30);  // 2 + (q-3) q
}

TEST_CASE("power sums vanish off the critical digit line") {
  auto F = FieldCtx::build(5, 1);
  auto E = QuadExtCtx::build(F);
  for (std::uint32_t alpha = 0; alpha < 5; ++alpha)
    for (std::uint32_t beta = 0; beta < 5; ++beta) {
      if (alpha + beta == 4) continue;
      const BigInt s = BigInt(alpha) + BigInt(beta) * 5;
      // 0 and q^2 - 1 are outside the standard exponent range.
      if (s == 0 || s == 24) continue;
      CAPTURE(alpha);
      CAPTURE(beta);
      CHECK(power_sum_direct(*E, {2, 3, 1}, s) == 0);
    }
  // At s = q^2 - 1 a permutation counts its nonzero values: -1 mod p.
  CHECK(power_sum_direct(*E, {3, 0, 1}, BigInt(24)) == E->embed(F->of_int(-1)));
}

TEST_CASE("combinatorial expansion matches direct sums") {
  auto F = FieldCtx::build(5, 1);
  auto E = QuadExtCtx::build(F);
  for (std::uint32_t a = 1; a < 5; ++a)
    for (std::uint32_t alpha = 0; alpha < 5; ++alpha) {
      const std::uint32_t beta = 4 - alpha;
      const BigInt s = BigInt(alpha) + BigInt(beta) * 5;
      CAPTURE(a);
      CAPTURE(alpha);
      CHECK(power_sum_expansion(*E, a, 3, alpha, beta) ==
            power_sum_direct(*E, {a, 3, 1}, s));
    }
}

TEST_CASE("expansion preconditions") {
  auto F = FieldCtx::build(5, 1);
  auto E = QuadExtCtx::build(F);
  CHECK(thrown_code([&] { power_sum_expansion(*E, 1, 1, 1, 1); }) ==
        ErrorCode::BadExponentSplit);
  CHECK(thrown_code([&] { power_sum_expansion(*E, 0, 1, 0, 4); }) ==
        ErrorCode::ZeroA);
}

TEST_CASE("closed-form endpoint values") {
  auto F = FieldCtx::build(5, 1);
  auto E = QuadExtCtx::build(F);
  // (a, b) = (3, 1): z = -a/b^2 = 2 and 1 + 4z = 4 is a nonzero square.
  REQUIRE(quad_split_kind(*F, 2) == SplitKind::TwoRoots);
  const auto ep = power_sum_endpoints(*E, 3, 1);
  CHECK(ep.first_ext == 0);
  CHECK(ep.second_base == 3);
  CHECK(ep.third_base == 2);
  CHECK(power_sum_direct(*E, {3, 1, 1}, endpoint_exponent(5, 0)) == 0);
  CHECK(power_sum_direct(*E, {3, 1, 1}, endpoint_exponent(5, 1)) ==
        E->embed(ep.second_base));
  CHECK(power_sum_direct(*E, {3, 1, 1}, endpoint_exponent(5, 2)) ==
        E->embed(ep.third_base));
}

TEST_CASE("endpoint preconditions") {
  auto F = FieldCtx::build(5, 1);
  auto E = QuadExtCtx::build(F);
  CHECK(thrown_code([&] { power_sum_endpoints(*E, 0, 1); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(thrown_code([&] { power_sum_endpoints(*E, 1, 0); }) ==
        ErrorCode::PreconditionViolated);
  // (1, 1): z = -1 = 4, 1 + 4z = 2 is a nonsquare mod 5.
  CHECK(thrown_code([&] { power_sum_endpoints(*E, 1, 1); }) ==
        ErrorCode::PreconditionRootSplit);
}
