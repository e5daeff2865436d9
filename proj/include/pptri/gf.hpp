#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pptri/bigint.hpp"
#include "pptri/error.hpp"

namespace pptri {

inline constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 20;

/// Immutable context for F_{p^m}. Elements are integer encodings in [0, q):
/// enc(x) = sum c_i p^i over the coefficient vector of x in the power basis
/// modulo the minimal-encoding monic irreducible of degree m.
class FieldCtx {
 public:
  /// Deterministic construction; repeated calls yield identical moduli.
  /// Errors: NotPrime, DegreeZero, SizeBoundExceeded.
  static std::shared_ptr<const FieldCtx> build(
      std::uint64_t p, std::uint32_t m,
      std::uint64_t max_order = kDefaultMaxOrder);

  std::uint64_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t one() const { return 1; }

  /// Monic modulus, low coefficient first, length m+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Encoding of the modulus including the leading 1 (sum c_i p^i).
  std::uint64_t modulus_enc() const { return modulus_enc_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  /// Errors: DivisionByZero.
  std::uint32_t inv(std::uint32_t x) const;
  /// pow(0, 0) = 1; exponents reduce mod q-1 for nonzero bases.
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
  std::uint32_t pow(std::uint32_t x, const BigInt& e) const;

  /// True iff x is a square in F_q^*. Errors: EvenCharacteristic, ZeroInput.
  bool is_square(std::uint32_t x) const;
  /// Absolute trace onto F_2 (x + x^2 + ... + x^{q/2}), returned as 0 or 1.
  /// Errors: OddCharacteristic.
  std::uint32_t abs_trace_half(std::uint32_t x) const;

  /// Prime-subfield embedding of an integer (handles negatives).
  std::uint32_t of_int(std::int64_t k) const;
  std::uint32_t of_big(const BigInt& k) const;

  /// Coefficient vector (length m, low first) of an encoding.
  std::vector<std::uint32_t> coeffs_of(std::uint32_t enc) const;

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  FieldCtx() = default;
  std::uint32_t mul_slow(std::uint32_t x, std::uint32_t y) const;

  std::uint64_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint64_t modulus_enc_ = 0;
  bool tabled_ = false;
  std::vector<std::uint32_t> add_tab_;  // q*q when tabled
  std::vector<std::uint32_t> mul_tab_;  // q*q when tabled
  std::vector<std::uint32_t> neg_tab_;  // q
  std::vector<std::uint32_t> inv_tab_;  // q when tabled
};

/// Quadratic tower F_{q^2} = F_q[w]. Odd q: w^2 = d with d the least-encoding
/// nonsquare of F_q^*. Even q: w^2 + w = d with d the least-encoding element of
/// absolute trace 1. Elements u0 + u1*w are encoded as enc(u0) + q*enc(u1).
class QuadExtCtx {
 public:
  /// Errors: SizeBoundExceeded.
  static std::shared_ptr<const QuadExtCtx> build(
      std::shared_ptr<const FieldCtx> base,
      std::uint64_t max_order = kDefaultMaxOrder);

  const FieldCtx& base() const { return *base_; }
  const std::shared_ptr<const FieldCtx>& base_ptr() const { return base_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t order() const { return n_; }
  std::uint32_t d() const { return d_; }
  bool artin_schreier() const { return base_->p() == 2; }

  std::uint32_t lo(std::uint32_t x) const { return x % q_; }
  std::uint32_t hi(std::uint32_t x) const { return x / q_; }
  std::uint32_t compose(std::uint32_t u0, std::uint32_t u1) const {
    return u0 + q_ * u1;
  }
  std::uint32_t embed(std::uint32_t base_enc) const { return base_enc; }
  bool in_base(std::uint32_t x) const { return hi(x) == 0; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  /// Computed as x^q / N(x). Errors: DivisionByZero.
  std::uint32_t inv(std::uint32_t x) const;
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
  std::uint32_t pow(std::uint32_t x, const BigInt& e) const;

  /// x -> x^q by the closed form (O(1), no exponentiation).
  std::uint32_t frobenius(std::uint32_t x) const;
  /// x + x^q and x * x^q, returned as base-field encodings.
  std::uint32_t trace_rel(std::uint32_t x) const;
  std::uint32_t norm_rel(std::uint32_t x) const;

  QuadExtCtx(const QuadExtCtx&) = delete;
  QuadExtCtx& operator=(const QuadExtCtx&) = delete;

 private:
  QuadExtCtx() = default;

  std::shared_ptr<const FieldCtx> base_;
  std::uint32_t q_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t d_ = 0;
};

/// Value handle for one element of a FieldCtx. Mixing contexts throws
/// CtxMismatch; the context must outlive the element.
class FqElem {
 public:
  FqElem() = default;
  FqElem(const FieldCtx& ctx, std::uint32_t enc) : ctx_(&ctx), enc_(enc) {
    if (enc >= ctx.q()) fail(ErrorCode::InvalidArgument, "encoding out of range");
  }

  std::uint32_t enc() const { return enc_; }
  const FieldCtx& ctx() const { return *ctx_; }
  bool is_zero() const { return enc_ == 0; }

  friend FqElem operator+(FqElem a, FqElem b) {
    return FqElem(a.same(b), a.ctx_->add(a.enc_, b.enc_));
  }
  friend FqElem operator-(FqElem a, FqElem b) {
    return FqElem(a.same(b), a.ctx_->sub(a.enc_, b.enc_));
  }
  friend FqElem operator*(FqElem a, FqElem b) {
    return FqElem(a.same(b), a.ctx_->mul(a.enc_, b.enc_));
  }
  friend FqElem operator/(FqElem a, FqElem b) {
    return FqElem(a.same(b), a.ctx_->mul(a.enc_, a.ctx_->inv(b.enc_)));
  }
  FqElem operator-() const { return FqElem(*ctx_, ctx_->neg(enc_)); }
  FqElem pow(std::uint64_t e) const { return FqElem(*ctx_, ctx_->pow(enc_, e)); }
  FqElem pow(const BigInt& e) const { return FqElem(*ctx_, ctx_->pow(enc_, e)); }
  friend bool operator==(FqElem a, FqElem b) {
    a.same(b);
    return a.enc_ == b.enc_;
  }
  friend bool operator!=(FqElem a, FqElem b) { return !(a == b); }

 private:
  const FieldCtx& same(const FqElem& other) const {
    if (ctx_ != other.ctx_) fail(ErrorCode::CtxMismatch, "FqElem contexts differ");
    return *ctx_;
  }

  const FieldCtx* ctx_ = nullptr;
  std::uint32_t enc_ = 0;
};

/// Value handle for one element of a QuadExtCtx.
class Fq2Elem {
 public:
  Fq2Elem() = default;
  Fq2Elem(const QuadExtCtx& ctx, std::uint32_t enc) : ctx_(&ctx), enc_(enc) {
    if (enc >= ctx.order()) fail(ErrorCode::InvalidArgument, "encoding out of range");
  }

  std::uint32_t enc() const { return enc_; }
  const QuadExtCtx& ctx() const { return *ctx_; }
  bool is_zero() const { return enc_ == 0; }

  friend Fq2Elem operator+(Fq2Elem a, Fq2Elem b) {
    return Fq2Elem(a.same(b), a.ctx_->add(a.enc_, b.enc_));
  }
  friend Fq2Elem operator-(Fq2Elem a, Fq2Elem b) {
    return Fq2Elem(a.same(b), a.ctx_->sub(a.enc_, b.enc_));
  }
  friend Fq2Elem operator*(Fq2Elem a, Fq2Elem b) {
    return Fq2Elem(a.same(b), a.ctx_->mul(a.enc_, b.enc_));
  }
  friend Fq2Elem operator/(Fq2Elem a, Fq2Elem b) {
    return Fq2Elem(a.same(b), a.ctx_->mul(a.enc_, a.ctx_->inv(b.enc_)));
  }
  Fq2Elem operator-() const { return Fq2Elem(*ctx_, ctx_->neg(enc_)); }
  Fq2Elem pow(std::uint64_t e) const { return Fq2Elem(*ctx_, ctx_->pow(enc_, e)); }
  Fq2Elem pow(const BigInt& e) const { return Fq2Elem(*ctx_, ctx_->pow(enc_, e)); }
  Fq2Elem frobenius() const { return Fq2Elem(*ctx_, ctx_->frobenius(enc_)); }
  FqElem trace_rel() const { return FqElem(ctx_->base(), ctx_->trace_rel(enc_)); }
  FqElem norm_rel() const { return FqElem(ctx_->base(), ctx_->norm_rel(enc_)); }
  friend bool operator==(Fq2Elem a, Fq2Elem b) {
    a.same(b);
    return a.enc_ == b.enc_;
  }
  friend bool operator!=(Fq2Elem a, Fq2Elem b) { return !(a == b); }

 private:
  const QuadExtCtx& same(const Fq2Elem& other) const {
    if (ctx_ != other.ctx_) fail(ErrorCode::CtxMismatch, "Fq2Elem contexts differ");
    return *ctx_;
  }

  const QuadExtCtx* ctx_ = nullptr;
  std::uint32_t enc_ = 0;
};

}  // namespace pptri
