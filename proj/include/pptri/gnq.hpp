#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pptri/bigint.hpp"
#include "pptri/gf.hpp"

namespace pptri {

/// Polynomial over the prime field F_p; coeffs[i] is the degree-i coefficient,
/// trailing zeros trimmed.
struct DensePoly {
  std::uint64_t p = 0;
  std::vector<std::uint32_t> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs.size()) - 1;
  }
};

inline constexpr std::uint64_t kDefaultMaxCoeffs = 10000;

/// Coefficients of g_{n,q} in F_p[x] via the recurrence
///   g_n = 0 for n <= q-2,  g_{q-1} = -1,  g_n = g_{n-(q-1)} + x g_{n-q}.
/// The subfield parameter q is F.q(). Errors: MemoryBound.
DensePoly gnq_coeffs(const FieldCtx& F, std::uint64_t n,
                     std::uint64_t max_coeffs = kDefaultMaxCoeffs);

/// Horner evaluation; coefficients are prime-field residues, which encode
/// identically in every extension.
std::uint32_t eval_dense_base(const FieldCtx& F, const DensePoly& g, std::uint32_t y);
std::uint32_t eval_dense_ext(const QuadExtCtx& ext, const DensePoly& g, std::uint32_t y);

/// g_{n,q}(y) for arbitrary-precision n without expanding coefficients:
/// g_{n,q}(y) = -[t^{q-1}] (t^n mod (t^q - t - y)). The _base form evaluates in
/// any F_{q^e} built as a FieldCtx whose order is a power of q.
/// Errors: InvalidArgument (order of F not a power of q), RangeViolation (n < 0).
std::uint32_t gnq_eval_rec_base(const FieldCtx& F, std::uint32_t q, const BigInt& n,
                                std::uint32_t y);
std::uint32_t gnq_eval_rec_ext(const QuadExtCtx& ext, const BigInt& n, std::uint32_t y);

/// Sum over c in F_q of (x + c)^n, the left side of the defining functional
/// equation sum_c (x+c)^n = g_{n,q}(x^q - x).
std::uint32_t gnq_eval_functional_base(const FieldCtx& F, const BigInt& n, std::uint32_t x);
std::uint32_t gnq_eval_functional_ext(const QuadExtCtx& ext, const BigInt& n, std::uint32_t x);

enum class DesirabilitySource { BruteForce, TheoremC, TheoremD };

const char* to_string(DesirabilitySource source);

/// Verdict on whether y -> g_{n,q}(y) permutes F_{q^e}.
struct DesirabilityRecord {
  BigInt n;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  bool desirable = false;
  DesirabilitySource source = DesirabilitySource::BruteForce;
  /// First colliding pair (encodings y1 < y2) when not desirable.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};

/// Brute force over a prebuilt quadratic tower (e = 2).
DesirabilityRecord is_desirable_ext(const QuadExtCtx& ext, const BigInt& n);
/// Brute force over a generic F_{q^e} FieldCtx (e = 1 or e >= 3).
DesirabilityRecord is_desirable_generic(const FieldCtx& Fqe, std::uint32_t q,
                                        const BigInt& n);
/// Convenience wrapper that builds F_{p^m} and the required extension.
/// Errors: SizeBoundExceeded and construction errors.
DesirabilityRecord is_desirable(std::uint64_t p, std::uint32_t m, std::uint32_t e,
                                const BigInt& n,
                                std::uint64_t max_order = kDefaultMaxOrder);

/// Decomposition used by the odd-q classification: alpha - beta = a0 + 2 a1
/// with a0 in {0,1}, and beta = 1 + 2 b1 when beta is odd.
struct AlphaBetaDecomp {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  std::uint32_t a0 = 0;
  std::uint32_t a1 = 0;
  std::optional<std::uint32_t> b1;
};

/// Errors: RangeViolation unless 0 <= beta < alpha < 2p.
AlphaBetaDecomp decomp_alpha_beta(std::uint32_t alpha, std::uint32_t beta,
                                  std::uint64_t p);

/// Even-q classification of desirable (n, 2; q) with n = q^alpha - q^beta - 1.
/// The corrected form (default) also accepts q = 2, (beta, alpha) = (2, 3),
/// which brute force confirms; as_printed drops that pair.
/// Errors: RangeViolation (not 0 <= beta < alpha < 4), OddQ.
bool theorem_C_predicate(std::uint32_t alpha, std::uint32_t beta, std::uint32_t q,
                         bool as_printed = false);

/// Readings of the two contested lines of clause (iv.2) of the odd-q
/// classification. First line: the stated sum uses a1 (SumA1) or the undefined
/// a2 read literally as written (LiteralA2, i.e. dropping the 2*a1 term).
/// Second line: the expression must be a nonzero square in F_q (the reading
/// equivalence testing selects) or congruent to 0 mod p (as printed).
enum class Iv2FirstLine { SumA1, LiteralA2 };
enum class Iv2SecondLine { NonzeroSquare, Congruence };

struct ThmDOptions {
  bool printed_case_i = false;    // q = 1 mod 3 instead of q in {1,3} mod 6
  bool printed_case_iii = false;  // 2i != (-1)^i mod p instead of i != 1, 2i != 1 mod p
  Iv2FirstLine iv2_first = Iv2FirstLine::SumA1;
  Iv2SecondLine iv2_second = Iv2SecondLine::NonzeroSquare;
};

/// Odd-q classification of desirable (n, 2; q), n = q^alpha - q^beta - 1.
/// Defaults are the corrected reading (zero brute-force mismatches).
/// Errors: RangeViolation, EvenQ.
bool theorem_D_predicate(const FieldCtx& F, std::uint32_t alpha, std::uint32_t beta,
                         const ThmDOptions& options = {});

/// Parity-split variant of the beta = p condition (the precursor statement):
/// i even: 4(i/2) != 1 mod p; i odd: 4((i+1)/2) != 3 mod p.
/// Errors: RangeViolation unless beta = p and p < alpha < 2p.
bool beta_p_parity_condition(std::uint32_t alpha, std::uint32_t beta, std::uint64_t p);

/// Coefficients (A, B, C) of the inversion identity
///   g_{n,q}(x) = A phi(x) + B phi(x)^q + C phi(x)^{2q-1}
/// with phi(0) = 0, phi(x) = (b1+1) y^q + b1 y for y = 1/x. All three are
/// prime-subfield values embedded in F_q.
struct InversionTransform {
  std::uint32_t A = 0;
  std::uint32_t B = 0;
  std::uint32_t C = 0;
  std::uint32_t b1 = 0;
};

/// Requires q odd, beta odd, beta != p, 0 < beta < alpha < 2p.
/// Errors: PreconditionViolated.
InversionTransform inversion_transform(const FieldCtx& F, std::uint32_t alpha,
                                       std::uint32_t beta);

/// phi(0) = 0; otherwise (b1+1) y^q + b1 y with y = x^{-1}.
std::uint32_t phi_map(const QuadExtCtx& ext, std::uint32_t b1, std::uint32_t x);

}  // namespace pptri
