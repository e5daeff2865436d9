#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pptri/gf.hpp"

namespace pptri {

/// Coefficients of f = a*x + b*x^q + c*x^{2q-1}, as base-field encodings.
/// Read projectively: [a : b : c], not all zero.
struct TrinomialParams {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
};

struct PPVerdict {
  bool is_pp = false;
  /// First collision in encoding order when not a permutation:
  /// x1 < x2 with f(x1) = f(x2).
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};

/// Outcome of the Theorem A / Theorem B classification with the winning clause
/// ("A(i)".."A(iv)", "B(i)", "B(ii)") or "-" when no clause holds.
struct ClauseVerdict {
  bool holds = false;
  std::string clause = "-";
};

/// Monic cubic s^3 + c2 s^2 + c1 s + c0 attached to the invariant
/// sigma = tau^2 / eta; coefficient formulas differ by characteristic.
struct ResolventCubic {
  bool even_char = false;
  std::uint32_t sigma = 0;
  std::uint32_t c2 = 0;
  std::uint32_t c1 = 0;
  std::uint32_t c0 = 0;
};

/// f(0) = 0; otherwise a*x + b*x^q + c*x^{2q-1} with x^{2q-1} = x^q * x^q / x.
std::uint32_t eval_trinomial(const QuadExtCtx& ext, const TrinomialParams& params,
                             std::uint32_t x);

/// Exhaustive permutation test over F_{q^2}. Errors: InvalidArgument (zero triple).
PPVerdict is_pp_bruteforce(const QuadExtCtx& ext, const TrinomialParams& params);

/// Classification for odd q, c = 1: clauses
///  (i)  a(a-1) a nonzero square and b^2 = a^2 + 3a
///  (ii) a = 1 and b^2 - 4 a nonzero square
///  (iii) a = 3, b = 0, q = -1 mod 6
///  (iv) a = b = 0, q = 1 or 3 mod 6.
/// Errors: EvenCharacteristic.
ClauseVerdict theorem_A_clauses(const FieldCtx& F, std::uint32_t a, std::uint32_t b);
bool theorem_A_predicate(const FieldCtx& F, std::uint32_t a, std::uint32_t b);

/// Classification for even q, c = 1: clauses
///  (i)  q > 2, a != 1, abs_trace(1/(a+1)) = 0, b^2 = a^2 + a
///  (ii) q > 2, a = 1, b != 0, abs_trace(1/b) = 0.
/// Errors: OddCharacteristic.
ClauseVerdict theorem_B_clauses(const FieldCtx& F, std::uint32_t a, std::uint32_t b);
bool theorem_B_predicate(const FieldCtx& F, std::uint32_t a, std::uint32_t b);

/// Scale a projective triple so its last nonzero coordinate is 1.
/// Errors: InvalidArgument (zero triple).
std::array<std::uint32_t, 3> normalize_triple(const FieldCtx& F, std::uint32_t a,
                                              std::uint32_t b, std::uint32_t c);

/// All normalized [a:b:c] whose trinomial permutes F_{q^2}, sorted by (a, b, c).
std::vector<std::array<std::uint32_t, 3>> compute_X_set(const QuadExtCtx& ext);

/// Closed-form description of the permutation set for even q: the union of two
/// one-parameter families over F_q minus F_2, the line {[d:1:0] : d != 1}, and
/// [1:0:0]. Errors: OddQ.
std::vector<std::array<std::uint32_t, 3>> x_set_parametrized_even(const FieldCtx& F);

/// Image of (t, n) = (trace, norm) under the trinomial map, for odd q:
///   tau = t^3/n + (a+b-3)t,  eta = a t^4/n + (ab-4a+b)t^2 + (a-b+1)^2 n.
/// Errors: EvenCharacteristic, ZeroNorm.
std::pair<std::uint32_t, std::uint32_t> trace_norm_image(const FieldCtx& F,
                                                         std::uint32_t a,
                                                         std::uint32_t b,
                                                         std::uint32_t t,
                                                         std::uint32_t n);

/// Resolvent cubic in s for the given sigma != 0. Odd q:
///   s^3 + (-a sigma + 2a + 2b - 6)s^2 + ((4a - b - ab)sigma + (a+b-3)^2)s
///       - (a-b+1)^2 sigma.
/// Even q: s^3 + a sigma s^2 + (a+1)(b sigma + 1)s + (a+1)sigma.
/// Errors: ZeroSigma.
ResolventCubic build_resolvent(const FieldCtx& F, std::uint32_t a, std::uint32_t b,
                               std::uint32_t sigma);

/// Number of roots of the cubic in F_q, by exhaustive evaluation.
int count_roots_in_base(const FieldCtx& F, const ResolventCubic& cubic);

/// 18 c2 c1 c0 - 4 c2^3 c0 + c2^2 c1^2 - 4 c1^3 - 27 c0^2, odd q only.
/// Errors: EvenCharacteristic.
std::uint32_t cubic_discriminant_value(const FieldCtx& F, const ResolventCubic& cubic);

}  // namespace pptri
