#include <doctest.h>

#include <array>
#include <cstdint>
#include <vector>

#include "pptri/trinomial.hpp"
#include "test_util.hpp"

using namespace pptri;

namespace {

std::array<std::uint32_t, 3> tr(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return {a, b, c};
}

}  // namespace

TEST_CASE("odd-characteristic clause labels") {
  auto F7 = FieldCtx::build(7, 1);
  CHECK(theorem_A_clauses(*F7, 1, 1).clause == "A(ii)");
  CHECK(theorem_A_clauses(*F7, 1, 1).holds);
  auto F11 = FieldCtx::build(11, 1);
  CHECK(theorem_A_clauses(*F11, 3, 0).clause == "A(iii)");
  auto F3 = FieldCtx::build(3, 1);
  CHECK(theorem_A_clauses(*F3, 0, 0).clause == "A(iv)");
  auto F5 = FieldCtx::build(5, 1);
  CHECK(theorem_A_clauses(*F5, 3, 0).clause == "A(iii)");
  auto F13 = FieldCtx::build(13, 1);
  CHECK(theorem_A_clauses(*F13, 10, 0).clause == "A(i)");
  // q = 1 mod 6 kills clause (iii) and keeps (iv).
  CHECK(!theorem_A_predicate(*F7, 3, 0));
  CHECK(theorem_A_predicate(*F7, 0, 0));
  auto F4 = FieldCtx::build(2, 2);
  CHECK(thrown_code([&] { theorem_A_predicate(*F4, 1, 1); }) ==
        ErrorCode::EvenCharacteristic);
}

TEST_CASE("even-characteristic clause labels") {
  auto F4 = FieldCtx::build(2, 2);
  CHECK(theorem_B_clauses(*F4, 1, 1).clause == "B(ii)");
  CHECK(theorem_B_predicate(*F4, 1, 1));
  CHECK(!theorem_B_predicate(*F4, 1, 2));  // trace of the generator is 1
  CHECK(theorem_B_clauses(*F4, 0, 0).clause == "B(i)");
  auto F2 = FieldCtx::build(2, 1);
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b) CHECK(!theorem_B_predicate(*F2, a, b));
  auto F7 = FieldCtx::build(7, 1);
  CHECK(thrown_code([&] { theorem_B_predicate(*F7, 1, 1); }) ==
        ErrorCode::OddCharacteristic);
}

TEST_CASE("brute-force permutation testing and witnesses") {
  auto F5 = FieldCtx::build(5, 1);
  auto E = QuadExtCtx::build(F5);
  const auto good = is_pp_bruteforce(*E, {3, 0, 1});
  CHECK(good.is_pp);
  CHECK(!good.witness.has_value());
  const auto bad = is_pp_bruteforce(*E, {0, 1, 1});
  CHECK(!bad.is_pp);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first == 0);
  CHECK(bad.witness->second == 5);
  CHECK(thrown_code([&] { is_pp_bruteforce(*E, {0, 0, 0}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("trinomial evaluation") {
  auto F5 = FieldCtx::build(5, 1);
  auto E = QuadExtCtx::build(F5);
  CHECK(eval_trinomial(*E, {2, 3, 4}, 0) == 0);
  // w + 2 w^5 + w^9 = (1 - 2 + 1) w = 0 since w^2 = 2 and 2^4 = 1 mod 5.
  const std::uint32_t w = E->compose(0, 1);
  CHECK(eval_trinomial(*E, {1, 2, 1}, w) == 0);
}

TEST_CASE("projective normalization") {
  auto F5 = FieldCtx::build(5, 1);
  CHECK(normalize_triple(*F5, 2, 3, 4) == tr(3, 2, 1));
  CHECK(normalize_triple(*F5, 2, 3, 0) == tr(4, 1, 0));
  CHECK(normalize_triple(*F5, 4, 0, 0) == tr(1, 0, 0));
  CHECK(thrown_code([&] { normalize_triple(*F5, 0, 0, 0); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("permutation sets over small even fields") {
  auto F2 = FieldCtx::build(2, 1);
  auto E2 = QuadExtCtx::build(F2);
  CHECK(compute_X_set(*E2) ==
        std::vector<std::array<std::uint32_t, 3>>{tr(0, 1, 0), tr(1, 0, 0)});

  auto F4 = FieldCtx::build(2, 2);
  auto E4 = QuadExtCtx::build(F4);
  CHECK(compute_X_set(*E4) ==
        std::vector<std::array<std::uint32_t, 3>>{tr(0, 0, 1), tr(0, 1, 0),
                                                  tr(1, 0, 0), tr(1, 1, 1),
                                                  tr(2, 1, 0), tr(3, 1, 0)});
  CHECK(x_set_parametrized_even(*F4) == compute_X_set(*E4));

  auto F8 = FieldCtx::build(2, 3);
  auto E8 = QuadExtCtx::build(F8);
  const auto x8 = compute_X_set(*E8);
  REQUIRE(x8.size() == 14);
  CHECK(x8[0] == tr(0, 1, 0));
  CHECK(x8[1] == tr(1, 0, 0));
  CHECK(x8[2] == tr(1, 3, 1));
  CHECK(x8[3] == tr(1, 5, 1));
  CHECK(x8[4] == tr(1, 7, 1));

  auto F16 = FieldCtx::build(2, 4);
  auto E16 = QuadExtCtx::build(F16);
  const auto x16 = compute_X_set(*E16);
  REQUIRE(x16.size() == 30);
  CHECK(x16[0] == tr(0, 0, 1));
  CHECK(x16[1] == tr(0, 1, 0));
  CHECK(x16[2] == tr(1, 0, 0));
  CHECK(x16[3] == tr(1, 1, 1));
  CHECK(x16[4] == tr(1, 6, 1));

  auto F3 = FieldCtx::build(3, 1);
  CHECK(thrown_code([&] { x_set_parametrized_even(*F3); }) == ErrorCode::OddQ);
}

TEST_CASE("trace-norm image map") {
  auto F7 = FieldCtx::build(7, 1);
  const auto [tau, eta] = trace_norm_image(*F7, 1, 0, 1, 1);
  CHECK(tau == 6);
  CHECK(eta == 1);
  CHECK(thrown_code([&] { trace_norm_image(*F7, 1, 0, 1, 0); }) ==
        ErrorCode::ZeroNorm);
  auto F4 = FieldCtx::build(2, 2);
  CHECK(thrown_code([&] { trace_norm_image(*F4, 1, 0, 1, 1); }) ==
        ErrorCode::EvenCharacteristic);
}

TEST_CASE("resolvent cubic coefficients") {
  auto F7 = FieldCtx::build(7, 1);
  const auto odd = build_resolvent(*F7, 1, 1, 1);
  CHECK(!odd.even_char);
  CHECK(odd.c2 == 4);  // -1 + 2 + 2 - 6 = -3
  CHECK(odd.c1 == 3);  // (4 - 1 - 1) + 1
  CHECK(odd.c0 == 6);  // -(1)^2 * 1
  auto F4 = FieldCtx::build(2, 2);
  const auto even = build_resolvent(*F4, 2, 3, 1);
  CHECK(even.even_char);
  CHECK(even.c2 == 2);
  CHECK(even.c1 == 1);
  CHECK(even.c0 == 3);
  CHECK(thrown_code([&] { build_resolvent(*F7, 1, 1, 0); }) ==
        ErrorCode::ZeroSigma);
}

TEST_CASE("root counting and cubic discriminants") {
  auto F7 = FieldCtx::build(7, 1);
  ResolventCubic split{false, 1, 0, F7->of_int(-1), 0};  // s^3 - s
  CHECK(count_roots_in_base(*F7, split) == 3);
  CHECK(cubic_discriminant_value(*F7, split) == 4);
  ResolventCubic mixed{false, 1, 0, F7->of_int(-1), F7->of_int(-1)};  // s^3-s-1
  CHECK(count_roots_in_base(*F7, mixed) == 1);
  auto F5 = FieldCtx::build(5, 1);
  ResolventCubic split5{false, 1, 0, F5->of_int(-1), 0};
  CHECK(cubic_discriminant_value(*F5, split5) == 4);
  auto F4 = FieldCtx::build(2, 2);
  ResolventCubic even{true, 1, 1, 1, 1};
  CHECK(thrown_code([&] { cubic_discriminant_value(*F4, even); }) ==
        ErrorCode::EvenCharacteristic);
}
