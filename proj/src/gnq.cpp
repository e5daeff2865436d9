#include "pptri/gnq.hpp"

#include <algorithm>
#include <utility>

#include "pptri/error.hpp"

namespace pptri {

namespace {

// v reduced to [0, p) as an integer residue.
bool divisible(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  return ((v % sp) + sp) % sp == 0;
}

bool is_nonzero_square(const FieldCtx& F, std::int64_t v) {
  const std::uint32_t enc = F.of_int(v);
  return enc != 0 && F.is_square(enc);
}

std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  b %= mod;
  while (e > 0) {
    if (e & 1) r = r * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return r;
}

// r <- r * t reduced by t^q = t + y. Vectors have length q.
template <class Ring>
void mul_by_t(const Ring& R, std::vector<std::uint32_t>& r, std::uint32_t q,
              std::uint32_t y) {
  const std::uint32_t top = r[q - 1];
  for (std::uint32_t i = q - 1; i > 0; --i) r[i] = r[i - 1];
  r[0] = 0;
  if (top != 0) {
    r[1] = R.add(r[1], top);
    r[0] = R.add(r[0], R.mul(top, y));
  }
}

template <class Ring>
std::vector<std::uint32_t> square_mod_tq(const Ring& R,
                                         const std::vector<std::uint32_t>& a,
                                         std::uint32_t q, std::uint32_t y) {
  std::vector<std::uint32_t> res(2 * q - 1, 0);
  for (std::uint32_t i = 0; i < q; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < q; ++j) {
      if (a[j] == 0) continue;
      res[i + j] = R.add(res[i + j], R.mul(a[i], a[j]));
    }
  }
  for (std::uint32_t k = 2 * q - 2; k >= q; --k) {
    const std::uint32_t c = res[k];
    if (c != 0) {
      res[k - q + 1] = R.add(res[k - q + 1], c);
      res[k - q] = R.add(res[k - q], R.mul(c, y));
    }
  }
  res.resize(q);
  return res;
}

// -[t^{q-1}] (t^n mod (t^q - t - y)) in the coefficient ring R.
template <class Ring>
std::uint32_t eval_rec_impl(const Ring& R, std::uint32_t q, const BigInt& n,
                            std::uint32_t y) {
  if (n < 0) fail(ErrorCode::RangeViolation, "index must be nonnegative");
  if (n < q - 1) return 0;
  std::vector<std::uint32_t> r(q, 0);
  r[0] = 1;
  const auto top = static_cast<std::int64_t>(boost::multiprecision::msb(n));
  for (std::int64_t i = top; i >= 0; --i) {
    r = square_mod_tq(R, r, q, y);
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i)))
      mul_by_t(R, r, q, y);
  }
  return R.neg(r[q - 1]);
}

// e with q^e = order, or 0 when order is not a power of q.
std::uint32_t power_exponent(std::uint32_t q, std::uint32_t order) {
  if (q < 2) return 0;
  std::uint64_t t = 1;
  std::uint32_t e = 0;
  while (t < order) {
    t *= q;
    ++e;
  }
  return t == order ? e : 0;
}

template <class Fn>
DesirabilityRecord scan_bijective(std::uint32_t order, const BigInt& n,
                                  std::uint32_t e, std::uint32_t q, Fn&& value_at) {
  DesirabilityRecord rec;
  rec.n = n;
  rec.e = e;
  rec.q = q;
  rec.source = DesirabilitySource::BruteForce;
  std::vector<std::uint32_t> first(order, order);
  for (std::uint32_t y = 0; y < order; ++y) {
    const std::uint32_t v = value_at(y);
    if (first[v] != order) {
      rec.desirable = false;
      rec.witness = std::make_pair(first[v], y);
      return rec;
    }
    first[v] = y;
  }
  rec.desirable = true;
  return rec;
}

}  // namespace

DensePoly gnq_coeffs(const FieldCtx& F, std::uint64_t n, std::uint64_t max_coeffs) {
  const std::uint64_t q = F.q();
  const std::uint64_t p = F.p();
  if (n / q + 2 > max_coeffs)
    fail(ErrorCode::MemoryBound, "coefficient count would exceed the bound");
  DensePoly out;
  out.p = p;
  if (n + 2 <= q) return out;
  const std::uint64_t W = q + 1;
  std::vector<std::vector<std::uint32_t>> win(W);
  win[(q - 1) % W] = {static_cast<std::uint32_t>(p - 1)};
  for (std::uint64_t k = q; k <= n; ++k) {
    const auto& A = win[(k - (q - 1)) % W];
    const auto& B = win[(k - q) % W];
    std::vector<std::uint32_t> r = A;
    if (!B.empty()) {
      if (r.size() < B.size() + 1) r.resize(B.size() + 1, 0);
      for (std::size_t i = 0; i < B.size(); ++i)
        r[i + 1] = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(r[i + 1]) + B[i]) % p);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    win[k % W] = std::move(r);
  }
  out.coeffs = std::move(win[n % W]);
  return out;
}

std::uint32_t eval_dense_base(const FieldCtx& F, const DensePoly& g, std::uint32_t y) {
  std::uint32_t acc = 0;
  for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it)
    acc = F.add(F.mul(acc, y), *it);
  return acc;
}

std::uint32_t eval_dense_ext(const QuadExtCtx& ext, const DensePoly& g, std::uint32_t y) {
  std::uint32_t acc = 0;
  for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it)
    acc = ext.add(ext.mul(acc, y), ext.embed(*it));
  return acc;
}

std::uint32_t gnq_eval_rec_base(const FieldCtx& F, std::uint32_t q, const BigInt& n,
                                std::uint32_t y) {
  if (power_exponent(q, F.q()) == 0)
    fail(ErrorCode::InvalidArgument, "field order is not a power of q");
  return eval_rec_impl(F, q, n, y);
}

std::uint32_t gnq_eval_rec_ext(const QuadExtCtx& ext, const BigInt& n, std::uint32_t y) {
  return eval_rec_impl(ext, ext.q(), n, y);
}

std::uint32_t gnq_eval_functional_base(const FieldCtx& F, const BigInt& n,
                                       std::uint32_t x) {
  std::uint32_t acc = 0;
  for (std::uint32_t c = 0; c < F.q(); ++c)
    acc = F.add(acc, F.pow(F.add(x, c), n));
  return acc;
}

std::uint32_t gnq_eval_functional_ext(const QuadExtCtx& ext, const BigInt& n,
                                      std::uint32_t x) {
  std::uint32_t acc = 0;
  for (std::uint32_t c = 0; c < ext.q(); ++c)
    acc = ext.add(acc, ext.pow(ext.add(x, ext.embed(c)), n));
  return acc;
}

const char* to_string(DesirabilitySource source) {
  switch (source) {
    case DesirabilitySource::BruteForce: return "bruteforce";
    case DesirabilitySource::TheoremC: return "theorem_C";
    case DesirabilitySource::TheoremD: return "theorem_D";
  }
  return "?";
}

DesirabilityRecord is_desirable_ext(const QuadExtCtx& ext, const BigInt& n) {
  return scan_bijective(ext.order(), n, 2, ext.q(), [&](std::uint32_t y) {
    return gnq_eval_rec_ext(ext, n, y);
  });
}

DesirabilityRecord is_desirable_generic(const FieldCtx& Fqe, std::uint32_t q,
                                        const BigInt& n) {
  const std::uint32_t e = power_exponent(q, Fqe.q());
  if (e == 0) fail(ErrorCode::InvalidArgument, "field order is not a power of q");
  return scan_bijective(Fqe.q(), n, e, q, [&](std::uint32_t y) {
    return eval_rec_impl(Fqe, q, n, y);
  });
}

DesirabilityRecord is_desirable(std::uint64_t p, std::uint32_t m, std::uint32_t e,
                                const BigInt& n, std::uint64_t max_order) {
  if (e == 0) fail(ErrorCode::InvalidArgument, "extension degree must be positive");
  auto F = FieldCtx::build(p, m, max_order);
  const std::uint32_t q = F->q();
  if (e == 1) return is_desirable_generic(*F, q, n);
  if (e == 2) {
    auto ext = QuadExtCtx::build(F, max_order);
    return is_desirable_ext(*ext, n);
  }
  const std::uint64_t me = static_cast<std::uint64_t>(m) * e;
  if (me > 0xffffffffULL) fail(ErrorCode::SizeBoundExceeded, "degree too large");
  auto Fe = FieldCtx::build(p, static_cast<std::uint32_t>(me), max_order);
  return is_desirable_generic(*Fe, q, n);
}

AlphaBetaDecomp decomp_alpha_beta(std::uint32_t alpha, std::uint32_t beta,
                                  std::uint64_t p) {
  if (!(beta < alpha && alpha < 2 * p))
    fail(ErrorCode::RangeViolation, "need 0 <= beta < alpha < 2p");
  AlphaBetaDecomp d;
  d.alpha = alpha;
  d.beta = beta;
  const std::uint32_t diff = alpha - beta;
  d.a0 = diff % 2;
  d.a1 = (diff - d.a0) / 2;
  if (beta % 2 == 1) d.b1 = (beta - 1) / 2;
  return d;
}

bool theorem_C_predicate(std::uint32_t alpha, std::uint32_t beta, std::uint32_t q,
                         bool as_printed) {
  if (!(beta < alpha && alpha < 4))
    fail(ErrorCode::RangeViolation, "need 0 <= beta < alpha < 4");
  if (q % 2 != 0) fail(ErrorCode::OddQ, "even-order classification requires even q");
  if (q % 3 == 1) {
    if ((beta == 0 && alpha == 2) || (beta == 1 && alpha == 2) ||
        (beta == 1 && alpha == 3))
      return true;
  }
  if (q == 2 && alpha == 3 && (beta == 0 || (beta == 2 && !as_printed)))
    return true;
  return false;
}

bool theorem_D_predicate(const FieldCtx& F, std::uint32_t alpha, std::uint32_t beta,
                         const ThmDOptions& options) {
  const std::uint32_t q = F.q();
  const std::uint64_t p = F.p();
  if (q % 2 == 0) fail(ErrorCode::EvenQ, "odd-order classification requires odd q");
  if (!(beta < alpha && alpha < 2 * p))
    fail(ErrorCode::RangeViolation, "need 0 <= beta < alpha < 2p");

  if (beta == 0) {
    if (alpha != 2) return false;
    return options.printed_case_i ? q % 3 == 1 : (q % 6 == 1 || q % 6 == 3);
  }
  if (beta % 2 == 0) return alpha % 2 == 0;
  if (beta == p) {
    const std::uint64_t i = alpha - p;  // 1 <= i <= p-1 within range
    if (options.printed_case_iii)
      return (2 * i) % p != (i % 2 == 0 ? 1 : p - 1);
    return i != 1 && (2 * i) % p != 1;
  }

  const AlphaBetaDecomp d = decomp_alpha_beta(alpha, beta, p);
  const std::int64_t a0 = d.a0;
  const std::int64_t a1 = d.a1;
  const std::int64_t b1 = static_cast<std::int64_t>(*d.b1);

  const std::int64_t e1 =
      (a1 + b1) * (2 * a1 + b1) + a0 * (a1 - 2 * a1 * b1 - b1 * b1);
  const std::int64_t c1 = 1 + 2 * b1 + 2 * a1 * a1 + a1 * b1 +
                          a0 * (-1 - 2 * b1 + b1 * b1 + a1 * (3 + 2 * b1));
  const bool iv1 = divisible(c1, p) && is_nonzero_square(F, e1);

  const std::int64_t first =
      options.iv2_first == Iv2FirstLine::SumA1 ? a0 + 2 * a1 + b1 : a0 + b1;
  const std::int64_t e2 = (1 + b1) * (1 + b1) - 4 * a1 * a1 -
                          a0 * (5 + 10 * b1 + 4 * b1 * b1 + 8 * a1 * (1 + b1));
  const bool second = options.iv2_second == Iv2SecondLine::NonzeroSquare
                          ? is_nonzero_square(F, e2)
                          : divisible(e2, p);
  const bool iv2 = divisible(first, p) && second;

  const bool iv3 = a0 == 1 && b1 == 0 && divisible(4 * a1 + 3, p) && q % 6 == 5;
  const bool iv4 =
      a0 == 1 && a1 == 0 && b1 == 0 && (q % 6 == 1 || q % 6 == 3);

  return iv1 || iv2 || iv3 || iv4;
}

bool beta_p_parity_condition(std::uint32_t alpha, std::uint32_t beta,
                             std::uint64_t p) {
  if (beta != p || !(beta < alpha && alpha < 2 * p))
    fail(ErrorCode::RangeViolation, "need beta = p < alpha < 2p");
  const std::uint64_t i = alpha - p;
  if (i % 2 == 0) return (4 * (i / 2)) % p != 1 % p;
  return (4 * ((i + 1) / 2)) % p != 3 % p;
}

InversionTransform inversion_transform(const FieldCtx& F, std::uint32_t alpha,
                                       std::uint32_t beta) {
  const std::uint32_t q = F.q();
  const std::uint64_t p = F.p();
  if (q % 2 == 0 || beta == 0 || !(beta < alpha && alpha < 2 * p) ||
      beta % 2 == 0 || beta == p)
    fail(ErrorCode::PreconditionViolated,
         "requires odd q and odd beta != p with 0 < beta < alpha < 2p");
  const AlphaBetaDecomp d = decomp_alpha_beta(alpha, beta, p);
  const std::int64_t a0 = d.a0;
  const std::int64_t a1 = d.a1;
  const std::int64_t b1 = static_cast<std::int64_t>(*d.b1);
  const auto binv = static_cast<std::int64_t>(pow_mod_u64(beta % p, p - 2, p));

  InversionTransform t;
  t.A = F.of_int(binv * (-a0 * b1 + b1 + a1));
  t.B = F.of_int(a0 - binv * (b1 + 1));
  t.C = F.of_int(-binv * (a0 * b1 + a0 + a1));
  t.b1 = static_cast<std::uint32_t>(b1);
  return t;
}

std::uint32_t phi_map(const QuadExtCtx& ext, std::uint32_t b1, std::uint32_t x) {
  if (x == 0) return 0;
  const std::uint64_t p = ext.base().p();
  const std::uint32_t y = ext.inv(x);
  const std::uint32_t yq = ext.frobenius(y);
  const std::uint32_t c1 = ext.embed(static_cast<std::uint32_t>((b1 + 1ULL) % p));
  const std::uint32_t c0 = ext.embed(static_cast<std::uint32_t>(b1 % p));
  return ext.add(ext.mul(c1, yq), ext.mul(c0, y));
}

}  // namespace pptri
