#include <doctest.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "pptri/gf.hpp"
#include "pptri/verify.hpp"
#include "test_util.hpp"

using namespace pptri;

TEST_CASE("minimal-encoding moduli are reproducible") {
  const struct {
    std::uint64_t p;
    std::uint32_t m;
    std::uint64_t enc;
  } cases[] = {
      {2, 1, 2},  {3, 1, 3},  {5, 1, 5},  {7, 1, 7},  {2, 2, 7},  {3, 2, 10},
      {2, 3, 11}, {2, 4, 19}, {5, 2, 27}, {3, 3, 34}, {2, 5, 37}, {7, 2, 50},
  };
  for (const auto& c : cases) {
    auto F = FieldCtx::build(c.p, c.m);
    CAPTURE(c.p);
    CAPTURE(c.m);
    CHECK(F->modulus_enc() == c.enc);
    CHECK(F->q() == [&] {
      std::uint64_t q = 1;
      for (std::uint32_t i = 0; i < c.m; ++i) q *= c.p;
      return q;
    }());
  }
}

TEST_CASE("tower constants d are reproducible") {
  const struct {
    std::uint64_t p;
    std::uint32_t m;
    std::uint32_t d;
  } cases[] = {
      {2, 1, 1}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2},  {7, 1, 3},  {2, 3, 1},
      {3, 2, 4}, {2, 4, 8}, {5, 2, 5}, {3, 3, 2},  {2, 5, 1},  {7, 2, 9},
  };
  for (const auto& c : cases) {
    auto F = FieldCtx::build(c.p, c.m);
    auto ext = QuadExtCtx::build(F);
    CAPTURE(c.p);
    CAPTURE(c.m);
    CHECK(ext->d() == c.d);
    CHECK(ext->artin_schreier() == (c.p == 2));
    CHECK(ext->order() == F->q() * F->q());
  }
}

TEST_CASE("structural axioms hold on sample fields") {
  for (const auto& [p, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {5, 1}, {2, 3}, {3, 2}}) {
    CHECK(check_field_axioms(p, m).pass);
    CHECK(check_tower_properties(p, m).pass);
  }
}

TEST_CASE("Frobenius closed forms by characteristic") {
  auto F9 = FieldCtx::build(3, 2);
  auto E9 = QuadExtCtx::build(F9);
  for (std::uint32_t u0 = 0; u0 < 9; ++u0)
    for (std::uint32_t u1 = 0; u1 < 9; ++u1)
      CHECK(E9->frobenius(E9->compose(u0, u1)) == E9->compose(u0, F9->neg(u1)));

  auto F4 = FieldCtx::build(2, 2);
  auto E4 = QuadExtCtx::build(F4);
  for (std::uint32_t u0 = 0; u0 < 4; ++u0)
    for (std::uint32_t u1 = 0; u1 < 4; ++u1)
      CHECK(E4->frobenius(E4->compose(u0, u1)) ==
            E4->compose(F4->add(u0, u1), u1));
}

TEST_CASE("powers, units, and conventions") {
  auto F = FieldCtx::build(5, 1);
  auto E = QuadExtCtx::build(F);
  CHECK(E->pow(0, 0) == 1);  // 0^0 = 1 by convention
  CHECK(F->pow(0, 0) == 1);
  for (std::uint32_t x = 1; x < E->order(); ++x) {
    CHECK(E->pow(x, E->order() - 1) == 1);
    CHECK(E->mul(x, E->inv(x)) == 1);
  }
  // Exponents reduce mod the group order for nonzero bases.
  CHECK(E->pow(7, BigInt("100000000000000000000000000000000000000000000000001")) ==
        E->pow(7, BigInt("100000000000000000000000000000000000000000000000001") %
                      (E->order() - 1)));
}

TEST_CASE("square detection in odd characteristic") {
  auto F = FieldCtx::build(7, 1);
  for (std::uint32_t x : {1u, 2u, 4u}) CHECK(F->is_square(x));
  for (std::uint32_t x : {3u, 5u, 6u}) CHECK(!F->is_square(x));
  CHECK(thrown_code([&] { F->is_square(0); }) == ErrorCode::ZeroInput);
  auto F4 = FieldCtx::build(2, 2);
  CHECK(thrown_code([&] { F4->is_square(1); }) == ErrorCode::EvenCharacteristic);
}

TEST_CASE("absolute trace in characteristic two") {
  auto F4 = FieldCtx::build(2, 2);
  CHECK(F4->abs_trace_half(0) == 0);
  CHECK(F4->abs_trace_half(1) == 0);
  CHECK(F4->abs_trace_half(2) == 1);  // the generator has trace 1
  CHECK(F4->abs_trace_half(3) == 1);
  auto F2 = FieldCtx::build(2, 1);
  CHECK(F2->abs_trace_half(1) == 1);
  auto F7 = FieldCtx::build(7, 1);
  CHECK(thrown_code([&] { F7->abs_trace_half(1); }) ==
        ErrorCode::OddCharacteristic);
}

TEST_CASE("integer embeddings") {
  auto F = FieldCtx::build(7, 1);
  CHECK(F->of_int(-1) == 6);
  CHECK(F->of_int(15) == 1);
  CHECK(F->of_int(0) == 0);
  CHECK(F->of_big(BigInt(-1)) == 6);
  CHECK(F->of_big(BigInt("700000000000000000000000003")) == 3);
}

TEST_CASE("coefficient views match the encoding") {
  auto F = FieldCtx::build(3, 2);
  for (std::uint32_t x = 0; x < 9; ++x) {
    const auto cs = F->coeffs_of(x);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] + 3 * cs[1] == x);
  }
  CHECK(FieldCtx::build(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("construction is validated") {
  CHECK(thrown_code([] { FieldCtx::build(4, 1); }) == ErrorCode::NotPrime);
  CHECK(thrown_code([] { FieldCtx::build(1, 1); }) == ErrorCode::NotPrime);
  CHECK(thrown_code([] { FieldCtx::build(2, 0); }) == ErrorCode::DegreeZero);
  CHECK(thrown_code([] { FieldCtx::build(2, 21); }) ==
        ErrorCode::SizeBoundExceeded);
  auto F = FieldCtx::build(2, 11);
  CHECK(thrown_code([&] { QuadExtCtx::build(F); }) ==
        ErrorCode::SizeBoundExceeded);
}

TEST_CASE("division by zero and context mixing are rejected") {
  auto F5 = FieldCtx::build(5, 1);
  auto F7 = FieldCtx::build(7, 1);
  CHECK(thrown_code([&] { F5->inv(0); }) == ErrorCode::DivisionByZero);
  FqElem x(*F5, 2), y(*F7, 2);
  CHECK(thrown_code([&] { (void)(x + y); }) == ErrorCode::CtxMismatch);
  CHECK(thrown_code([&] { FqElem(*F5, 5); }) == ErrorCode::InvalidArgument);
  auto E5 = QuadExtCtx::build(F5);
  CHECK(thrown_code([&] { E5->inv(0); }) == ErrorCode::DivisionByZero);
  CHECK(thrown_code([&] { Fq2Elem(*E5, 25); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("extension coordinate helpers") {
  auto F = FieldCtx::build(5, 1);
  auto E = QuadExtCtx::build(F);
  const std::uint32_t x = E->compose(3, 4);
  CHECK(x == 3 + 5 * 4);
  CHECK(E->lo(x) == 3);
  CHECK(E->hi(x) == 4);
  CHECK(E->in_base(E->embed(2)));
  CHECK(!E->in_base(x));
  // w satisfies its defining equation.
  const std::uint32_t w = E->compose(0, 1);
  CHECK(E->mul(w, w) == E->embed(E->d()));
}
