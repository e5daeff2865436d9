#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pptri/bigint.hpp"
#include "pptri/gf.hpp"

namespace pptri {

/// Multivariate polynomial over Z with a fixed, ordered variable list.
/// Terms map exponent vectors (aligned with the variable list) to nonzero
/// coefficients; the map order makes printing and comparison canonical.
class MPolyZ {
 public:
  MPolyZ() = default;
  explicit MPolyZ(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MPolyZ constant(const std::vector<std::string>& vars, const BigInt& c);
  /// Errors: UnknownVariable.
  static MPolyZ var(const std::vector<std::string>& vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<std::vector<std::uint16_t>, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Mixed-variable-list arithmetic throws CtxMismatch.
  friend MPolyZ operator+(const MPolyZ& x, const MPolyZ& y);
  friend MPolyZ operator-(const MPolyZ& x, const MPolyZ& y);
  friend MPolyZ operator*(const MPolyZ& x, const MPolyZ& y);
  MPolyZ operator-() const;
  friend MPolyZ operator*(const MPolyZ& x, std::int64_t k);
  friend MPolyZ operator*(std::int64_t k, const MPolyZ& x);
  friend MPolyZ operator+(const MPolyZ& x, std::int64_t k);
  friend MPolyZ operator-(const MPolyZ& x, std::int64_t k);
  bool operator==(const MPolyZ& other) const {
    return vars_ == other.vars_ && terms_ == other.terms_;
  }
  bool operator!=(const MPolyZ& other) const { return !(*this == other); }

  MPolyZ pow(std::uint32_t e) const;

  /// Replaces the named variable by a polynomial over the same variable list.
  /// Errors: UnknownVariable, CtxMismatch.
  MPolyZ substitute(const std::string& name, const MPolyZ& value) const;

  /// Rewrites name^2 -> rhs until the degree in that variable drops below 2.
  /// rhs must not involve the variable. Errors: UnknownVariable, InvalidArgument.
  MPolyZ reduced(const std::string& name, const MPolyZ& rhs) const;

  /// Coefficients taken mod `mod` into [0, mod); zero terms dropped.
  MPolyZ coeffs_mod(std::uint64_t mod) const;

  /// Evaluation over F_q; point is aligned with the variable list.
  /// Errors: InvalidArgument (size mismatch).
  std::uint32_t eval(const FieldCtx& F, const std::vector<std::uint32_t>& point) const;

  /// Canonical human-readable form, e.g. "a^2*b - 4*sigma + 1"; "0" when zero.
  std::string str() const;

 private:
  std::size_t var_index(const std::string& name) const;
  void add_term(const std::vector<std::uint16_t>& exps, const BigInt& c);

  std::vector<std::string> vars_;
  std::map<std::vector<std::uint16_t>, BigInt> terms_;
};

/// Discriminant of x^3 + c2 x^2 + c1 x + c0 in any ring with +, -, * and
/// multiplication by small integers.
template <class T>
T cubic_discriminant_sym(const T& c2, const T& c1, const T& c0) {
  return c2 * c1 * c0 * 18 - c2 * c2 * c2 * c0 * 4 + c2 * c2 * c1 * c1 -
         c1 * c1 * c1 * 4 - c0 * c0 * 27;
}

enum class IdentityId {
  ScalarFactorProduct,
  ResolventDiscFactored,
  ResolventDiscSquareCollapse,
  ResolventDiscClosed,
  DerivativeDiscZero,
  Char2TraceRational,
  CubicQuadResolvent,
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::ScalarFactorProduct,    IdentityId::ResolventDiscFactored,
    IdentityId::ResolventDiscSquareCollapse, IdentityId::ResolventDiscClosed,
    IdentityId::DerivativeDiscZero,     IdentityId::Char2TraceRational,
    IdentityId::CubicQuadResolvent,
};

const char* to_string(IdentityId id);

struct IdentityCheck {
  std::string label;
  bool pass = false;
};

struct IdentityReport {
  IdentityId id = IdentityId::ScalarFactorProduct;
  std::string name;
  std::vector<IdentityCheck> checks;
  bool pass = false;
};

/// Verifies one identity purely symbolically (exact integer arithmetic).
IdentityReport verify_identity(IdentityId id);
std::vector<IdentityReport> verify_all_identities();

/// Evaluates the defining difference polynomials of the identity at every
/// admissible point of F_q (side relations restrict the admissible set) and
/// returns the number of nonzero evaluations. The char-2 identity requires an
/// even-characteristic field (OddCharacteristic otherwise).
std::uint64_t identity_shadow_mismatches(IdentityId id, const FieldCtx& F);

}  // namespace pptri
