#include "pptri/trinomial.hpp"

#include <algorithm>

namespace pptri {

std::uint32_t eval_trinomial(const QuadExtCtx& ext, const TrinomialParams& params,
                             std::uint32_t x) {
  if (x == 0) return 0;
  std::uint32_t xq = ext.frobenius(x);
  std::uint32_t x2q1 = ext.mul(ext.mul(xq, xq), ext.inv(x));
  std::uint32_t r = ext.mul(ext.embed(params.a), x);
  r = ext.add(r, ext.mul(ext.embed(params.b), xq));
  r = ext.add(r, ext.mul(ext.embed(params.c), x2q1));
  return r;
}

PPVerdict is_pp_bruteforce(const QuadExtCtx& ext, const TrinomialParams& params) {
  if (params.a == 0 && params.b == 0 && params.c == 0)
    fail(ErrorCode::InvalidArgument, "zero coefficient triple");
  std::uint32_t n = ext.order();
  std::vector<std::uint32_t> first(n, n);  // n = "unseen" sentinel
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t y = eval_trinomial(ext, params, x);
    if (first[y] != n) return {false, std::make_pair(first[y], x)};
    first[y] = x;
  }
  return {true, std::nullopt};
}

ClauseVerdict theorem_A_clauses(const FieldCtx& F, std::uint32_t a, std::uint32_t b) {
  if (F.p() == 2) fail(ErrorCode::EvenCharacteristic, "classification requires odd q");
  std::uint32_t q = F.q();
  std::uint32_t aa1 = F.mul(a, F.sub(a, 1));
  if (aa1 != 0 && F.is_square(aa1) &&
      F.mul(b, b) == F.add(F.mul(a, a), F.mul(F.of_int(3), a)))
    return {true, "A(i)"};
  if (a == 1) {
    std::uint32_t t = F.sub(F.mul(b, b), F.of_int(4));
    if (t != 0 && F.is_square(t)) return {true, "A(ii)"};
  }
  if (a == F.of_int(3) && b == 0 && q % 6 == 5) return {true, "A(iii)"};
  if (a == 0 && b == 0 && (q % 6 == 1 || q % 6 == 3)) return {true, "A(iv)"};
  return {};
}

bool theorem_A_predicate(const FieldCtx& F, std::uint32_t a, std::uint32_t b) {
  return theorem_A_clauses(F, a, b).holds;
}

ClauseVerdict theorem_B_clauses(const FieldCtx& F, std::uint32_t a, std::uint32_t b) {
  if (F.p() != 2) fail(ErrorCode::OddCharacteristic, "classification requires even q");
  std::uint32_t q = F.q();
  if (q > 2 && a != 1) {
    std::uint32_t ia = F.inv(F.add(a, 1));
    if (F.abs_trace_half(ia) == 0 && F.mul(b, b) == F.add(F.mul(a, a), a))
      return {true, "B(i)"};
  }
  if (q > 2 && a == 1 && b != 0 && F.abs_trace_half(F.inv(b)) == 0)
    return {true, "B(ii)"};
  return {};
}

bool theorem_B_predicate(const FieldCtx& F, std::uint32_t a, std::uint32_t b) {
  return theorem_B_clauses(F, a, b).holds;
}

std::array<std::uint32_t, 3> normalize_triple(const FieldCtx& F, std::uint32_t a,
                                              std::uint32_t b, std::uint32_t c) {
  if (c != 0) {
    std::uint32_t ic = F.inv(c);
    return {F.mul(a, ic), F.mul(b, ic), 1};
  }
  if (b != 0) {
    std::uint32_t ib = F.inv(b);
    return {F.mul(a, ib), 1, 0};
  }
  if (a != 0) return {1, 0, 0};
  fail(ErrorCode::InvalidArgument, "zero projective triple");
}

std::vector<std::array<std::uint32_t, 3>> compute_X_set(const QuadExtCtx& ext) {
  const FieldCtx& F = ext.base();
  std::uint32_t q = F.q();
  std::vector<std::array<std::uint32_t, 3>> out;
  auto try_point = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (is_pp_bruteforce(ext, {a, b, c}).is_pp) out.push_back({a, b, c});
  };
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) try_point(a, b, 1);
  for (std::uint32_t a = 0; a < q; ++a) try_point(a, 1, 0);
  try_point(1, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<std::uint32_t, 3>> x_set_parametrized_even(const FieldCtx& F) {
  if (F.p() != 2) fail(ErrorCode::OddQ, "parametrized set exists for even q only");
  std::uint32_t q = F.q();
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t d = 0; d < q; ++d) {
    if (d == 0 || d == 1) continue;  // d ranges over F_q minus F_2
    std::uint32_t d2 = F.mul(d, d);
    std::uint32_t d4 = F.mul(d2, d2);
    out.push_back(normalize_triple(F, F.add(F.add(1, d2), d4),
                                   F.add(F.add(1, d), d2), F.add(d2, d4)));
    std::uint32_t dd = F.add(d, d2);
    out.push_back(normalize_triple(F, dd, 1, dd));
  }
  for (std::uint32_t d = 0; d < q; ++d)
    if (d != 1) out.push_back(normalize_triple(F, d, 1, 0));
  out.push_back({1, 0, 0});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<std::uint32_t, std::uint32_t> trace_norm_image(const FieldCtx& F,
                                                         std::uint32_t a,
                                                         std::uint32_t b,
                                                         std::uint32_t t,
                                                         std::uint32_t n) {
  if (F.p() == 2) fail(ErrorCode::EvenCharacteristic, "trace/norm image formulas assume odd q");
  if (n == 0) fail(ErrorCode::ZeroNorm, "norm must be nonzero");
  std::uint32_t ninv = F.inv(n);
  std::uint32_t t2 = F.mul(t, t);
  std::uint32_t tau = F.add(F.mul(F.mul(t2, t), ninv),
                            F.mul(F.sub(F.add(a, b), F.of_int(3)), t));
  std::uint32_t eta = F.mul(a, F.mul(F.mul(t2, t2), ninv));
  eta = F.add(eta, F.mul(F.sub(F.add(F.mul(a, b), b), F.mul(F.of_int(4), a)), t2));
  std::uint32_t am = F.sub(F.add(a, 1), b);
  eta = F.add(eta, F.mul(F.mul(am, am), n));
  return {tau, eta};
}

ResolventCubic build_resolvent(const FieldCtx& F, std::uint32_t a, std::uint32_t b,
                               std::uint32_t sigma) {
  if (sigma == 0) fail(ErrorCode::ZeroSigma, "sigma must be nonzero");
  ResolventCubic cubic;
  cubic.even_char = (F.p() == 2);
  cubic.sigma = sigma;
  if (!cubic.even_char) {
    cubic.c2 = F.add(F.neg(F.mul(a, sigma)),
                     F.sub(F.add(F.add(a, a), F.add(b, b)), F.of_int(6)));
    std::uint32_t apb3 = F.sub(F.add(a, b), F.of_int(3));
    cubic.c1 = F.add(F.mul(F.sub(F.sub(F.mul(F.of_int(4), a), b), F.mul(a, b)), sigma),
                     F.mul(apb3, apb3));
    std::uint32_t am = F.sub(F.add(a, 1), b);
    cubic.c0 = F.neg(F.mul(F.mul(am, am), sigma));
  } else {
    std::uint32_t a1 = F.add(a, 1);
    cubic.c2 = F.mul(a, sigma);
    cubic.c1 = F.mul(a1, F.add(F.mul(b, sigma), 1));
    cubic.c0 = F.mul(a1, sigma);
  }
  return cubic;
}

int count_roots_in_base(const FieldCtx& F, const ResolventCubic& cubic) {
  int count = 0;
  for (std::uint32_t s = 0; s < F.q(); ++s) {
    std::uint32_t v = F.add(F.add(F.add(F.pow(s, std::uint64_t{3}),
                                        F.mul(cubic.c2, F.mul(s, s))),
                                  F.mul(cubic.c1, s)),
                            cubic.c0);
    if (v == 0) ++count;
  }
  return count;
}

std::uint32_t cubic_discriminant_value(const FieldCtx& F, const ResolventCubic& cubic) {
  if (F.p() == 2)
    fail(ErrorCode::EvenCharacteristic, "discriminant formula used in odd characteristic only");
  std::uint32_t c2 = cubic.c2, c1 = cubic.c1, c0 = cubic.c0;
  std::uint32_t term1 = F.mul(F.of_int(18), F.mul(c2, F.mul(c1, c0)));
  std::uint32_t term2 = F.mul(F.of_int(4), F.mul(F.mul(c2, F.mul(c2, c2)), c0));
  std::uint32_t term3 = F.mul(F.mul(c2, c2), F.mul(c1, c1));
  std::uint32_t term4 = F.mul(F.of_int(4), F.mul(c1, F.mul(c1, c1)));
  std::uint32_t term5 = F.mul(F.of_int(27), F.mul(c0, c0));
  return F.sub(F.sub(F.add(F.sub(term1, term2), term3), term4), term5);
}

}  // namespace pptri
