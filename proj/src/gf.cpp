#include "pptri/gf.hpp"

#include <algorithm>

namespace pptri {
namespace {

constexpr std::uint32_t kTableLimit = 2048;  // op tables stored up to this q
constexpr std::uint64_t kEncodingCap = std::uint64_t{1} << 31;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<std::uint32_t>;  // low coefficient first

void poly_trim(Poly& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> res(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      res[i + j] = (res[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  std::size_t dm = mod.size() - 1;
  for (std::size_t i = res.size(); i-- > dm;) {
    std::uint64_t c = res[i];
    if (!c) continue;
    res[i] = 0;
    for (std::size_t j = 0; j < dm; ++j) {
      std::uint64_t s = res[i - dm + j] + (p - mod[j]) % p * c % p;
      res[i - dm + j] = s % p;
    }
  }
  Poly out(res.begin(), res.end());
  poly_trim(out);
  return out;
}

Poly poly_powmod(const Poly& base, BigInt e, const Poly& mod, std::uint64_t p) {
  Poly result{1};
  Poly b = base;
  while (e > 0) {
    if ((e & 1) != 0) result = poly_mulmod(result, b, mod, p);
    b = poly_mulmod(b, b, mod, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t mod_pow_u64(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    std::uint64_t inv_lead = mod_pow_u64(b.back(), p - 2, p);
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t c = a.back() * inv_lead % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t s = a[shift + j] + (p - b[j]) % p * c % p;
        a[shift + j] = static_cast<std::uint32_t>(s % p);
      }
      poly_trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

void sub_x(Poly& t, std::uint64_t p) {
  if (t.size() < 2) t.resize(2, 0);
  t[1] = static_cast<std::uint32_t>((t[1] + p - 1) % p);
  poly_trim(t);
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  std::size_t m = f.size() - 1;
  if (m == 1) return true;
  Poly x{0, 1};
  BigInt pm = 1;
  for (std::size_t i = 0; i < m; ++i) pm *= p;
  Poly t = poly_powmod(x, pm, f, p);
  sub_x(t, p);
  if (!t.empty()) return false;
  std::vector<std::size_t> prime_divisors;
  std::size_t mm = m;
  for (std::size_t d = 2; d * d <= mm; ++d) {
    if (mm % d == 0) {
      prime_divisors.push_back(d);
      while (mm % d == 0) mm /= d;
    }
  }
  if (mm > 1) prime_divisors.push_back(mm);
  for (std::size_t r : prime_divisors) {
    BigInt e = 1;
    for (std::size_t i = 0; i < m / r; ++i) e *= p;
    Poly h = poly_powmod(x, e, f, p);
    sub_x(h, p);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly minimal_modulus(std::uint64_t p, std::uint32_t m, std::uint64_t q) {
  for (std::uint64_t enc = 0; enc < q; ++enc) {
    Poly f(m + 1, 0);
    std::uint64_t e = enc;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(e % p);
      e /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorCode::InvalidArgument, "no irreducible modulus found");
}

}  // namespace

std::shared_ptr<const FieldCtx> FieldCtx::build(std::uint64_t p, std::uint32_t m,
                                                std::uint64_t max_order) {
  if (!is_prime_u64(p)) fail(ErrorCode::NotPrime, "p = " + std::to_string(p));
  if (m == 0) fail(ErrorCode::DegreeZero, "m must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > max_order || q > kEncodingCap)
      fail(ErrorCode::SizeBoundExceeded,
           "p^m exceeds the configured bound " + std::to_string(max_order));
  }
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->m_ = m;
  ctx->q_ = static_cast<std::uint32_t>(q);
  ctx->modulus_ = minimal_modulus(p, m, q);
  std::uint64_t menc = 0;
  for (std::size_t i = ctx->modulus_.size(); i-- > 0;)
    menc = menc * p + ctx->modulus_[i];
  ctx->modulus_enc_ = menc;

  ctx->neg_tab_.resize(ctx->q_);
  for (std::uint32_t x = 0; x < ctx->q_; ++x) {
    std::uint64_t e = x, out = 0, scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      std::uint64_t c = e % p;
      e /= p;
      out += (p - c) % p * scale;
      scale *= p;
    }
    ctx->neg_tab_[x] = static_cast<std::uint32_t>(out);
  }

  if (ctx->q_ <= kTableLimit) {
    ctx->tabled_ = true;
    std::uint32_t n = ctx->q_;
    std::vector<Poly> dec(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      Poly c(m);
      std::uint64_t e = x;
      for (std::uint32_t i = 0; i < m; ++i) {
        c[i] = static_cast<std::uint32_t>(e % p);
        e /= p;
      }
      dec[x] = c;
    }
    ctx->add_tab_.assign(std::size_t{n} * n, 0);
    ctx->mul_tab_.assign(std::size_t{n} * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j <= i; ++j) {
        std::uint64_t s = 0, scale = 1;
        for (std::uint32_t k = 0; k < m; ++k) {
          s += (dec[i][k] + dec[j][k]) % p * scale;
          scale *= p;
        }
        auto sum = static_cast<std::uint32_t>(s);
        ctx->add_tab_[std::size_t{i} * n + j] = sum;
        ctx->add_tab_[std::size_t{j} * n + i] = sum;
        Poly pr = poly_mulmod(dec[i], dec[j], ctx->modulus_, p);
        std::uint64_t pe = 0;
        for (std::size_t k = pr.size(); k-- > 0;) pe = pe * p + pr[k];
        auto prod = static_cast<std::uint32_t>(pe);
        ctx->mul_tab_[std::size_t{i} * n + j] = prod;
        ctx->mul_tab_[std::size_t{j} * n + i] = prod;
      }
    }
    ctx->inv_tab_.assign(n, 0);
    for (std::uint32_t x = 1; x < n; ++x) ctx->inv_tab_[x] = ctx->pow(x, std::uint64_t{n} - 2);
  }
  return ctx;
}

std::uint32_t FieldCtx::add(std::uint32_t x, std::uint32_t y) const {
  if (tabled_) return add_tab_[std::size_t{x} * q_ + y];
  std::uint64_t e1 = x, e2 = y, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += (e1 % p_ + e2 % p_) % p_ * scale;
    e1 /= p_;
    e2 /= p_;
    scale *= p_;
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldCtx::sub(std::uint32_t x, std::uint32_t y) const {
  return add(x, neg_tab_[y]);
}

std::uint32_t FieldCtx::mul_slow(std::uint32_t x, std::uint32_t y) const {
  Poly a = coeffs_of(x), b = coeffs_of(y);
  poly_trim(a);
  poly_trim(b);
  Poly pr = poly_mulmod(a, b, modulus_, p_);
  std::uint64_t pe = 0;
  for (std::size_t k = pr.size(); k-- > 0;) pe = pe * p_ + pr[k];
  return static_cast<std::uint32_t>(pe);
}

std::uint32_t FieldCtx::mul(std::uint32_t x, std::uint32_t y) const {
  if (tabled_) return mul_tab_[std::size_t{x} * q_ + y];
  return mul_slow(x, y);
}

std::uint32_t FieldCtx::neg(std::uint32_t x) const { return neg_tab_[x]; }

std::uint32_t FieldCtx::inv(std::uint32_t x) const {
  if (x == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (tabled_) return inv_tab_[x];
  return pow(x, std::uint64_t{q_} - 2);
}

std::uint32_t FieldCtx::pow(std::uint32_t x, std::uint64_t e) const {
  if (x == 0) return e == 0 ? 1 : 0;
  e %= (q_ - 1);
  std::uint32_t r = 1, b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint32_t FieldCtx::pow(std::uint32_t x, const BigInt& e) const {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  if (x == 0) return e == 0 ? 1 : 0;
  return pow(x, std::uint64_t{residue_mod(e, q_ - 1)});
}

bool FieldCtx::is_square(std::uint32_t x) const {
  if (p_ == 2) fail(ErrorCode::EvenCharacteristic, "is_square requires odd q");
  if (x == 0) fail(ErrorCode::ZeroInput, "is_square requires x in F_q^*");
  return pow(x, std::uint64_t{(q_ - 1) / 2}) == 1;
}

std::uint32_t FieldCtx::abs_trace_half(std::uint32_t x) const {
  if (p_ != 2) fail(ErrorCode::OddCharacteristic, "absolute trace onto F_2 requires even q");
  std::uint32_t t = 0, y = x;
  for (std::uint32_t i = 0; i < m_; ++i) {
    t = add(t, y);
    y = mul(y, y);
  }
  return t;
}

std::uint32_t FieldCtx::of_int(std::int64_t k) const {
  std::int64_t pp = static_cast<std::int64_t>(p_);
  std::int64_t r = k % pp;
  if (r < 0) r += pp;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t FieldCtx::of_big(const BigInt& k) const { return residue_mod(k, p_); }

std::vector<std::uint32_t> FieldCtx::coeffs_of(std::uint32_t enc) const {
  std::vector<std::uint32_t> c(m_);
  std::uint64_t e = enc;
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = static_cast<std::uint32_t>(e % p_);
    e /= p_;
  }
  return c;
}

std::shared_ptr<const QuadExtCtx> QuadExtCtx::build(
    std::shared_ptr<const FieldCtx> base, std::uint64_t max_order) {
  std::uint64_t q = base->q();
  if (q * q > max_order || q * q > kEncodingCap)
    fail(ErrorCode::SizeBoundExceeded,
         "q^2 exceeds the configured bound " + std::to_string(max_order));
  auto ctx = std::shared_ptr<QuadExtCtx>(new QuadExtCtx());
  ctx->base_ = std::move(base);
  const FieldCtx& F = *ctx->base_;
  ctx->q_ = F.q();
  ctx->n_ = static_cast<std::uint32_t>(q * q);
  std::uint32_t d = 0;
  if (F.p() != 2) {
    for (std::uint32_t x = 1; x < F.q(); ++x)
      if (!F.is_square(x)) {
        d = x;
        break;
      }
  } else {
    for (std::uint32_t x = 1; x < F.q(); ++x)
      if (F.abs_trace_half(x) == 1) {
        d = x;
        break;
      }
  }
  ctx->d_ = d;
  return ctx;
}

std::uint32_t QuadExtCtx::add(std::uint32_t x, std::uint32_t y) const {
  const FieldCtx& F = *base_;
  return compose(F.add(lo(x), lo(y)), F.add(hi(x), hi(y)));
}

std::uint32_t QuadExtCtx::sub(std::uint32_t x, std::uint32_t y) const {
  const FieldCtx& F = *base_;
  return compose(F.sub(lo(x), lo(y)), F.sub(hi(x), hi(y)));
}

std::uint32_t QuadExtCtx::mul(std::uint32_t x, std::uint32_t y) const {
  const FieldCtx& F = *base_;
  std::uint32_t x0 = lo(x), x1 = hi(x), y0 = lo(y), y1 = hi(y);
  std::uint32_t t00 = F.mul(x0, y0);
  std::uint32_t t11 = F.mul(x1, y1);
  std::uint32_t cross = F.add(F.mul(x0, y1), F.mul(x1, y0));
  std::uint32_t real = F.add(t00, F.mul(d_, t11));
  if (F.p() != 2) return compose(real, cross);
  return compose(real, F.add(cross, t11));  // w^2 = w + d
}

std::uint32_t QuadExtCtx::neg(std::uint32_t x) const {
  const FieldCtx& F = *base_;
  return compose(F.neg(lo(x)), F.neg(hi(x)));
}

std::uint32_t QuadExtCtx::frobenius(std::uint32_t x) const {
  const FieldCtx& F = *base_;
  std::uint32_t x0 = lo(x), x1 = hi(x);
  if (F.p() != 2) return compose(x0, F.neg(x1));
  return compose(F.add(x0, x1), x1);
}

std::uint32_t QuadExtCtx::trace_rel(std::uint32_t x) const {
  const FieldCtx& F = *base_;
  if (F.p() != 2) return F.add(lo(x), lo(x));
  return hi(x);
}

std::uint32_t QuadExtCtx::norm_rel(std::uint32_t x) const {
  const FieldCtx& F = *base_;
  std::uint32_t x0 = lo(x), x1 = hi(x);
  std::uint32_t sq0 = F.mul(x0, x0);
  std::uint32_t dsq1 = F.mul(d_, F.mul(x1, x1));
  if (F.p() != 2) return F.sub(sq0, dsq1);
  return F.add(F.add(sq0, F.mul(x0, x1)), dsq1);
}

std::uint32_t QuadExtCtx::inv(std::uint32_t x) const {
  if (x == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  const FieldCtx& F = *base_;
  std::uint32_t ninv = F.inv(norm_rel(x));
  std::uint32_t c = frobenius(x);
  return compose(F.mul(lo(c), ninv), F.mul(hi(c), ninv));
}

std::uint32_t QuadExtCtx::pow(std::uint32_t x, std::uint64_t e) const {
  if (x == 0) return e == 0 ? 1 : 0;
  e %= (std::uint64_t{n_} - 1);
  std::uint32_t r = 1, b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint32_t QuadExtCtx::pow(std::uint32_t x, const BigInt& e) const {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  if (x == 0) return e == 0 ? 1 : 0;
  return pow(x, std::uint64_t{residue_mod(e, std::uint64_t{n_} - 1)});
}

}  // namespace pptri
