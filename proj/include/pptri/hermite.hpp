#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pptri/bigint.hpp"
#include "pptri/gf.hpp"
#include "pptri/trinomial.hpp"

namespace pptri {

/// One power-sum comparison at exponent s = alpha + beta*q.
struct PowerSumReport {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  std::uint32_t direct = 0;                        // ext encoding
  std::optional<std::uint32_t> via_expansion;      // ext encoding
  std::optional<std::uint32_t> closed;             // ext encoding
};

/// Values of the three closed-form power sums at the exponents
/// (q-1)q, 1+(q-2)q, 2+(q-3)q. The first vanishes identically; the other two
/// are base-field rational expressions in (a, b).
struct PowerSumEndpoints {
  std::uint32_t first_ext = 0;    // always the zero element
  std::uint32_t second_base = 0;
  std::uint32_t third_base = 0;
};

/// Exponent of the k-th closed-form endpoint (k = 0, 1, 2).
inline std::uint64_t endpoint_exponent(std::uint32_t q, int k) {
  return static_cast<std::uint64_t>(k) + std::uint64_t{q - 1 - k} * q;
}

/// Sum over all x in F_{q^2} of f(x)^s (0^0 = 1, so s = 0 gives q^2 = 0).
std::uint32_t power_sum_direct(const QuadExtCtx& ext, const TrinomialParams& params,
                               const BigInt& s);

/// Power sums for every s in [0, s_max], computed with incremental powers.
std::vector<std::uint32_t> power_sum_profile(const QuadExtCtx& ext,
                                             const TrinomialParams& params,
                                             std::uint64_t s_max);

/// Combinatorial expansion of the power sum at s = alpha + beta*q for c = 1:
///   -sum over 0<=k<=i<=alpha, 0<=l<=j<=beta with q-alpha+i+k-j-l in {0, q+1}
///    of binom(alpha,i) binom(i,k) binom(beta,j) binom(j,l)
///    a^{q-1-i-j} b^{i+j-k-l}.
/// Requires alpha + beta = q - 1 and a != 0.
/// Errors: BadExponentSplit, ZeroA.
std::uint32_t power_sum_expansion(const QuadExtCtx& ext, std::uint32_t a,
                                  std::uint32_t b, std::uint32_t alpha,
                                  std::uint32_t beta);

/// Closed forms, valid when ab != 0 and x^2 + x + a/b^2 splits over F_q:
///   first  = 0
///   second = 2(1-a)(b^2-a^2-3a) / (a^2 (b^2-4a))
///   third  = 3b(1-a)(b^2-a^2-3a)(9a-6a^2+a^3-2b^2+ab^2) / (a^4 (b^2-4a)^2),
/// the third defined for q >= 3.
/// Errors: PreconditionViolated (ab = 0), PreconditionRootSplit,
/// ZeroDenominator, RangeViolation (q < 3).
PowerSumEndpoints power_sum_endpoints(const QuadExtCtx& ext, std::uint32_t a,
                                      std::uint32_t b);

}  // namespace pptri
