#include "pptri/hermite.hpp"

#include "pptri/lemma_sums.hpp"

namespace pptri {
namespace {

// Pascal triangle rows 0..n mod p; binom[i][j] = C(i, j) mod p.
std::vector<std::vector<std::uint32_t>> binom_rows(std::uint32_t n, std::uint64_t p) {
  std::vector<std::vector<std::uint32_t>> rows(n + 1);
  for (std::uint32_t i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (std::uint32_t j = 1; j < i; ++j)
      rows[i][j] =
          static_cast<std::uint32_t>((std::uint64_t{rows[i - 1][j - 1]} + rows[i - 1][j]) % p);
  }
  return rows;
}

}  // namespace

std::uint32_t power_sum_direct(const QuadExtCtx& ext, const TrinomialParams& params,
                               const BigInt& s) {
  std::uint32_t total = 0;
  for (std::uint32_t x = 0; x < ext.order(); ++x)
    total = ext.add(total, ext.pow(eval_trinomial(ext, params, x), s));
  return total;
}

std::vector<std::uint32_t> power_sum_profile(const QuadExtCtx& ext,
                                             const TrinomialParams& params,
                                             std::uint64_t s_max) {
  std::uint32_t n = ext.order();
  std::vector<std::uint32_t> image(n), current(n, 1);
  for (std::uint32_t x = 0; x < n; ++x) image[x] = eval_trinomial(ext, params, x);
  std::vector<std::uint32_t> sums;
  sums.reserve(s_max + 1);
  sums.push_back(0);  // s = 0: q^2 ones sum to 0 mod p
  for (std::uint64_t s = 1; s <= s_max; ++s) {
    std::uint32_t total = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
      current[x] = ext.mul(current[x], image[x]);
      total = ext.add(total, current[x]);
    }
    sums.push_back(total);
  }
  return sums;
}

std::uint32_t power_sum_expansion(const QuadExtCtx& ext, std::uint32_t a,
                                  std::uint32_t b, std::uint32_t alpha,
                                  std::uint32_t beta) {
  const FieldCtx& F = ext.base();
  std::uint32_t q = F.q();
  if (alpha > q - 1 || beta > q - 1 || alpha + beta != q - 1)
    fail(ErrorCode::BadExponentSplit, "need alpha + beta = q - 1");
  if (a == 0) fail(ErrorCode::ZeroA, "expansion requires a != 0");
  auto rows = binom_rows(q - 1, F.p());
  std::uint32_t total = 0;
  for (std::uint32_t i = 0; i <= alpha; ++i) {
    for (std::uint32_t k = 0; k <= i; ++k) {
      for (std::uint32_t j = 0; j <= beta; ++j) {
        for (std::uint32_t l = 0; l <= j; ++l) {
          std::int64_t target = static_cast<std::int64_t>(q) - alpha + i + k - j - l;
          if (target != 0 && target != static_cast<std::int64_t>(q) + 1) continue;
          std::uint64_t co = rows[alpha][i];
          co = co * rows[i][k] % F.p();
          co = co * rows[beta][j] % F.p();
          co = co * rows[j][l] % F.p();
          std::uint32_t term =
              F.mul(static_cast<std::uint32_t>(co),
                    F.mul(F.pow(a, std::uint64_t{q - 1 - i - j}),
                          F.pow(b, std::uint64_t{i + j - k - l})));
          total = F.add(total, term);
        }
      }
    }
  }
  return ext.embed(F.neg(total));
}

PowerSumEndpoints power_sum_endpoints(const QuadExtCtx& ext, std::uint32_t a,
                                      std::uint32_t b) {
  const FieldCtx& F = ext.base();
  if (a == 0 || b == 0)
    fail(ErrorCode::PreconditionViolated, "closed forms require ab != 0");
  std::uint32_t b2 = F.mul(b, b);
  std::uint32_t z = F.neg(F.mul(a, F.inv(b2)));
  if (quad_split_kind(F, z) != SplitKind::TwoRoots)
    fail(ErrorCode::PreconditionRootSplit, "x^2 + x + a/b^2 must split over F_q");
  if (F.q() < 3) fail(ErrorCode::RangeViolation, "closed forms stated for q >= 3");
  std::uint32_t a2 = F.mul(a, a);
  std::uint32_t b2m4a = F.sub(b2, F.mul(F.of_int(4), a));
  std::uint32_t den2 = F.mul(a2, b2m4a);
  if (den2 == 0) fail(ErrorCode::ZeroDenominator, "a^2 (b^2 - 4a) vanishes");
  std::uint32_t one_minus_a = F.sub(1, a);
  std::uint32_t core = F.sub(b2, F.add(a2, F.mul(F.of_int(3), a)));
  PowerSumEndpoints out;
  out.first_ext = 0;
  out.second_base =
      F.mul(F.mul(F.of_int(2), F.mul(one_minus_a, core)), F.inv(den2));
  std::uint32_t poly = F.mul(F.of_int(9), a);
  poly = F.sub(poly, F.mul(F.of_int(6), a2));
  poly = F.add(poly, F.mul(a, a2));
  poly = F.sub(poly, F.mul(F.of_int(2), b2));
  poly = F.add(poly, F.mul(a, b2));
  std::uint32_t num3 = F.mul(F.of_int(3), F.mul(b, F.mul(one_minus_a, F.mul(core, poly))));
  std::uint32_t den3 = F.mul(F.mul(a2, a2), F.mul(b2m4a, b2m4a));
  if (den3 == 0) fail(ErrorCode::ZeroDenominator, "a^4 (b^2 - 4a)^2 vanishes");
  out.third_base = F.mul(num3, F.inv(den3));
  return out;
}

}  // namespace pptri
