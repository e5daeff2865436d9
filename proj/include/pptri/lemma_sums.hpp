#pragma once

#include <cstdint>

#include "pptri/bigint.hpp"
#include "pptri/gf.hpp"

namespace pptri {

enum class SplitKind { DoubleRoot, TwoRoots, Irreducible };

const char* to_string(SplitKind kind);

/// The six hypergeometric-style sums, named by coefficient shape:
///   SumLL            sum of binom(-l, l) z^l              for l <= q/2
///   SumL1            sum of binom(-l, l+1) z^l            for l <= (q-1)/2
///   SumL1Weighted    sum of binom(-l, l+1)(l+1) z^l       for l <= (q-1)/2
///   SumLLWeighted    sum of binom(-l, l)(l+1) z^l         for l <= q/2
///   SumLLTriangular  sum of binom(-l, l) binom(l+2,2) z^l for l <= q/2
///   SumL1Triangular  sum of binom(-l, l+1) binom(l+2,2) z^l for l <= (q-1)/2
enum class LemmaSumId {
  SumLL,
  SumL1,
  SumL1Weighted,
  SumLLWeighted,
  SumLLTriangular,
  SumL1Triangular,
};

inline constexpr LemmaSumId kAllLemmaSums[] = {
    LemmaSumId::SumLL,           LemmaSumId::SumL1,
    LemmaSumId::SumL1Weighted,   LemmaSumId::SumLLWeighted,
    LemmaSumId::SumLLTriangular, LemmaSumId::SumL1Triangular,
};

const char* to_string(LemmaSumId id);

/// Generalized binomial coefficient with integer (possibly negative) upper
/// index, computed exactly: prod_{i<lower}(upper-i) / lower!.
BigInt gen_binom_exact(std::int64_t upper, std::uint32_t lower);

/// gen_binom_exact reduced to the least nonnegative residue mod p.
std::uint32_t gen_binom(std::int64_t upper, std::uint32_t lower, std::uint64_t p);

/// Splitting behaviour of x^2 + x - z over F_q. Odd q: by the discriminant
/// 1 + 4z; even q: by the absolute trace of z (DoubleRoot impossible).
/// Errors: ZeroInput.
SplitKind quad_split_kind(const FieldCtx& F, std::uint32_t z);

/// Termwise evaluation of the selected sum at z in F_q^*, with coefficients
/// computed exactly over the integers and then reduced. Errors: ZeroInput.
std::uint32_t lemma_sum(const FieldCtx& F, LemmaSumId id, std::uint32_t z);

/// Closed-form value. SumLL accepts any split kind (1, 1/2, 0 for two, double,
/// irreducible roots); the triangular sums have unconditional q = 2 branches;
/// everything else requires TwoRoots. Errors: ZeroInput, HypothesisViolated.
std::uint32_t lemma_closed(const FieldCtx& F, LemmaSumId id, std::uint32_t z);

/// Whether lemma_closed has a defined value for this (id, z).
bool lemma_hypothesis_holds(const FieldCtx& F, LemmaSumId id, std::uint32_t z);

}  // namespace pptri
