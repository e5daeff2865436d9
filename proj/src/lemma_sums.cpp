#include "pptri/lemma_sums.hpp"

namespace pptri {
namespace {

bool uses_ll_coefficient(LemmaSumId id) {
  return id == LemmaSumId::SumLL || id == LemmaSumId::SumLLWeighted ||
         id == LemmaSumId::SumLLTriangular;
}

std::uint32_t range_top(LemmaSumId id, std::uint32_t q) {
  return uses_ll_coefficient(id) ? q / 2 : (q - 1) / 2;
}

}  // namespace

const char* to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::DoubleRoot: return "DoubleRoot";
    case SplitKind::TwoRoots: return "TwoRoots";
    case SplitKind::Irreducible: return "Irreducible";
  }
  return "Unknown";
}

const char* to_string(LemmaSumId id) {
  switch (id) {
    case LemmaSumId::SumLL: return "sum_ll";
    case LemmaSumId::SumL1: return "sum_l1";
    case LemmaSumId::SumL1Weighted: return "sum_l1_weighted";
    case LemmaSumId::SumLLWeighted: return "sum_ll_weighted";
    case LemmaSumId::SumLLTriangular: return "sum_ll_triangular";
    case LemmaSumId::SumL1Triangular: return "sum_l1_triangular";
  }
  return "unknown";
}

BigInt gen_binom_exact(std::int64_t upper, std::uint32_t lower) {
  BigInt num = 1;
  for (std::uint32_t i = 0; i < lower; ++i) num *= BigInt(upper) - i;
  BigInt den = 1;
  for (std::uint32_t i = 1; i <= lower; ++i) den *= i;
  return num / den;  // always exact
}

std::uint32_t gen_binom(std::int64_t upper, std::uint32_t lower, std::uint64_t p) {
  return residue_mod(gen_binom_exact(upper, lower), p);
}

SplitKind quad_split_kind(const FieldCtx& F, std::uint32_t z) {
  if (z == 0) fail(ErrorCode::ZeroInput, "split kind defined for z in F_q^*");
  if (F.p() != 2) {
    std::uint32_t disc = F.add(1, F.mul(F.of_int(4), z));
    if (disc == 0) return SplitKind::DoubleRoot;
    return F.is_square(disc) ? SplitKind::TwoRoots : SplitKind::Irreducible;
  }
  return F.abs_trace_half(z) == 0 ? SplitKind::TwoRoots : SplitKind::Irreducible;
}

std::uint32_t lemma_sum(const FieldCtx& F, LemmaSumId id, std::uint32_t z) {
  if (z == 0) fail(ErrorCode::ZeroInput, "sums defined for z in F_q^*");
  std::uint32_t top = range_top(id, F.q());
  std::uint32_t total = 0;
  for (std::uint32_t l = 0; l <= top; ++l) {
    auto upper = -static_cast<std::int64_t>(l);
    BigInt coeff = uses_ll_coefficient(id) ? gen_binom_exact(upper, l)
                                           : gen_binom_exact(upper, l + 1);
    if (id == LemmaSumId::SumLLWeighted || id == LemmaSumId::SumL1Weighted)
      coeff *= l + 1;
    if (id == LemmaSumId::SumLLTriangular || id == LemmaSumId::SumL1Triangular)
      coeff *= gen_binom_exact(l + 2, 2);
    total = F.add(total, F.mul(F.of_big(coeff), F.pow(z, std::uint64_t{l})));
  }
  return total;
}

bool lemma_hypothesis_holds(const FieldCtx& F, LemmaSumId id, std::uint32_t z) {
  if (id == LemmaSumId::SumLL) return true;
  if (F.q() == 2 &&
      (id == LemmaSumId::SumLLTriangular || id == LemmaSumId::SumL1Triangular))
    return true;
  return quad_split_kind(F, z) == SplitKind::TwoRoots;
}

std::uint32_t lemma_closed(const FieldCtx& F, LemmaSumId id, std::uint32_t z) {
  if (z == 0) fail(ErrorCode::ZeroInput, "closed forms defined for z in F_q^*");
  std::uint32_t q = F.q();
  std::uint32_t one_4z = F.add(1, F.mul(F.of_int(4), z));
  switch (id) {
    case LemmaSumId::SumLL:
      switch (quad_split_kind(F, z)) {
        case SplitKind::TwoRoots: return 1;
        case SplitKind::DoubleRoot: return F.inv(F.of_int(2));
        case SplitKind::Irreducible: return 0;
      }
      break;
    case LemmaSumId::SumL1:
      if (!lemma_hypothesis_holds(F, id, z))
        fail(ErrorCode::HypothesisViolated, "quadratic must split");
      return 1;
    case LemmaSumId::SumL1Weighted:
      if (!lemma_hypothesis_holds(F, id, z))
        fail(ErrorCode::HypothesisViolated, "quadratic must split");
      return F.mul(F.add(z, z), F.inv(one_4z));
    case LemmaSumId::SumLLWeighted:
      if (!lemma_hypothesis_holds(F, id, z))
        fail(ErrorCode::HypothesisViolated, "quadratic must split");
      return F.mul(F.add(1, F.mul(F.of_int(3), z)), F.inv(one_4z));
    case LemmaSumId::SumLLTriangular: {
      if (q == 2) return F.add(1, z);
      if (!lemma_hypothesis_holds(F, id, z))
        fail(ErrorCode::HypothesisViolated, "quadratic must split");
      std::uint32_t num = F.add(F.add(1, F.mul(F.of_int(6), z)),
                                F.mul(F.of_int(11), F.mul(z, z)));
      return F.mul(num, F.inv(F.mul(one_4z, one_4z)));
    }
    case LemmaSumId::SumL1Triangular: {
      if (q == 2) return 0;
      if (!lemma_hypothesis_holds(F, id, z))
        fail(ErrorCode::HypothesisViolated, "quadratic must split");
      std::uint32_t num = F.mul(F.of_int(3), F.mul(z, F.add(1, F.add(z, z))));
      return F.mul(num, F.inv(F.mul(one_4z, one_4z)));
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown sum id");
}

}  // namespace pptri
