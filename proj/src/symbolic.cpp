#include "pptri/symbolic.hpp"

#include <sstream>
#include <utility>

#include "pptri/error.hpp"

namespace pptri {

namespace {

void require_same_vars(const MPolyZ& x, const MPolyZ& y) {
  if (x.vars() != y.vars()) fail(ErrorCode::CtxMismatch, "variable lists differ");
}

}  // namespace

std::size_t MPolyZ::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  fail(ErrorCode::UnknownVariable, "no variable named " + name);
}

void MPolyZ::add_term(const std::vector<std::uint16_t>& exps, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPolyZ MPolyZ::constant(const std::vector<std::string>& vars, const BigInt& c) {
  MPolyZ r(vars);
  r.add_term(std::vector<std::uint16_t>(vars.size(), 0), c);
  return r;
}

MPolyZ MPolyZ::var(const std::vector<std::string>& vars, const std::string& name) {
  MPolyZ r(vars);
  std::vector<std::uint16_t> e(vars.size(), 0);
  e[r.var_index(name)] = 1;
  r.add_term(e, 1);
  return r;
}

MPolyZ operator+(const MPolyZ& x, const MPolyZ& y) {
  require_same_vars(x, y);
  MPolyZ r = x;
  for (const auto& [e, c] : y.terms_) r.add_term(e, c);
  return r;
}

MPolyZ operator-(const MPolyZ& x, const MPolyZ& y) {
  require_same_vars(x, y);
  MPolyZ r = x;
  for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
  return r;
}

MPolyZ operator*(const MPolyZ& x, const MPolyZ& y) {
  require_same_vars(x, y);
  MPolyZ r(x.vars_);
  std::vector<std::uint16_t> e(x.vars_.size(), 0);
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<std::uint16_t>(ex[i] + ey[i]);
      r.add_term(e, cx * cy);
    }
  return r;
}

MPolyZ MPolyZ::operator-() const {
  MPolyZ r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPolyZ operator*(const MPolyZ& x, std::int64_t k) {
  MPolyZ r(x.vars_);
  if (k == 0) return r;
  for (const auto& [e, c] : x.terms_) r.terms_.emplace(e, c * k);
  return r;
}

MPolyZ operator*(std::int64_t k, const MPolyZ& x) { return x * k; }

MPolyZ operator+(const MPolyZ& x, std::int64_t k) {
  return x + MPolyZ::constant(x.vars_, k);
}

MPolyZ operator-(const MPolyZ& x, std::int64_t k) {
  return x + MPolyZ::constant(x.vars_, -k);
}

MPolyZ MPolyZ::pow(std::uint32_t e) const {
  MPolyZ r = constant(vars_, 1);
  for (std::uint32_t i = 0; i < e; ++i) r = r * (*this);
  return r;
}

MPolyZ MPolyZ::substitute(const std::string& name, const MPolyZ& value) const {
  require_same_vars(*this, value);
  const std::size_t vi = var_index(name);
  MPolyZ r(vars_);
  std::vector<MPolyZ> pows = {constant(vars_, 1)};
  for (const auto& [e, c] : terms_) {
    const std::uint16_t d = e[vi];
    while (pows.size() <= d) pows.push_back(pows.back() * value);
    std::vector<std::uint16_t> rest = e;
    rest[vi] = 0;
    MPolyZ mono(vars_);
    mono.add_term(rest, c);
    r = r + mono * pows[d];
  }
  return r;
}

MPolyZ MPolyZ::reduced(const std::string& name, const MPolyZ& rhs) const {
  require_same_vars(*this, rhs);
  const std::size_t vi = var_index(name);
  for (const auto& [e, c] : rhs.terms_)
    if (e[vi] != 0)
      fail(ErrorCode::InvalidArgument, "relation right side involves the reduced variable");
  MPolyZ r(vars_);
  std::vector<MPolyZ> pows = {constant(vars_, 1)};
  for (const auto& [e, c] : terms_) {
    const std::uint16_t k = e[vi] / 2;
    while (pows.size() <= k) pows.push_back(pows.back() * rhs);
    std::vector<std::uint16_t> rest = e;
    rest[vi] = e[vi] % 2;
    MPolyZ mono(vars_);
    mono.add_term(rest, c);
    r = r + mono * pows[k];
  }
  return r;
}

MPolyZ MPolyZ::coeffs_mod(std::uint64_t mod) const {
  MPolyZ r(vars_);
  for (const auto& [e, c] : terms_) {
    BigInt v = c % mod;
    if (v < 0) v += mod;
    r.add_term(e, v);
  }
  return r;
}

std::uint32_t MPolyZ::eval(const FieldCtx& F,
                           const std::vector<std::uint32_t>& point) const {
  if (point.size() != vars_.size())
    fail(ErrorCode::InvalidArgument, "point arity does not match variable list");
  std::uint32_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t t = F.of_big(c);
    for (std::size_t i = 0; i < point.size(); ++i)
      if (e[i] != 0) t = F.mul(t, F.pow(point[i], static_cast<std::uint64_t>(e[i])));
    acc = F.add(acc, t);
  }
  return acc;
}

std::string MPolyZ::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << mono;
    }
  }
  return out.str();
}

namespace {

using V = std::vector<std::string>;

const V kAB{"a", "b"};
const V kABS{"a", "b", "sigma"};
const V kABX{"a", "b", "s"};
const V kABU{"a", "b", "u"};
const V kR{"r1", "r2", "r3"};

MPolyZ mkvar(const V& vars, const char* n) { return MPolyZ::var(vars, n); }

// b^2 rewrite target a^2 + 3a over the given variable list.
MPolyZ odd_relation(const V& vars) {
  auto a = mkvar(vars, "a");
  return a * a + a * 3;
}

MPolyZ scalar_factor_plain_diff() {
  auto a = mkvar(kAB, "a");
  auto b = mkvar(kAB, "b");
  return (a + b + 1) * (a - b + 1) - ((a + 1).pow(2) - b * b);
}

// (a+b+1)(a-b+1) - (1-a), zero on the b^2 = a^2 + 3a locus.
MPolyZ scalar_factor_relation_diff() {
  auto a = mkvar(kAB, "a");
  auto b = mkvar(kAB, "b");
  return (a + b + 1) * (a - b + 1) + (a - 1);
}

struct ResolventSym {
  MPolyZ c2, c1, c0, D, h, K;
};

ResolventSym build_resolvent_sym() {
  auto a = mkvar(kABS, "a");
  auto b = mkvar(kABS, "b");
  auto s = mkvar(kABS, "sigma");
  ResolventSym r;
  r.c2 = a * s * -1 + a * 2 + b * 2 - 6;
  r.c1 = (a * 4 - b - a * b) * s + (a + b - 3).pow(2);
  r.c0 = -((a - b + 1).pow(2) * s);
  r.D = cubic_discriminant_sym(r.c2, r.c1, r.c0);
  r.h = a.pow(2) * (b * b - a * 4) * s.pow(2) -
        (a * b * (a + b).pow(2) - a.pow(3) * 8 - a.pow(2) * b * 6 - b.pow(3) * 2 +
         a * b * 9) *
            s * 2 +
        (a + b + 1) * (a + b - 3).pow(3);
  r.K = a.pow(2) * 2 + a * b * 2 - b * 3;
  return r;
}

MPolyZ disc_factored_diff() {
  auto R = build_resolvent_sym();
  auto a = mkvar(kABS, "a");
  auto s = mkvar(kABS, "sigma");
  return R.D - (a - 1).pow(2) * s * (s - 4) * R.h;
}

MPolyZ square_collapse_raw_diff() {
  auto R = build_resolvent_sym();
  auto a = mkvar(kABS, "a");
  auto s = mkvar(kABS, "sigma");
  return a * R.h - (a - 1) * (a.pow(2) * s - R.K).pow(2);
}

MPolyZ disc_closed_raw_diff() {
  auto R = build_resolvent_sym();
  auto a = mkvar(kABS, "a");
  auto s = mkvar(kABS, "sigma");
  return a * R.D - (a - 1).pow(3) * s * (s - 4) * (a.pow(2) * s - R.K).pow(2);
}

MPolyZ derivative_disc_raw_diff() {
  auto a = mkvar(kAB, "a");
  auto b = mkvar(kAB, "b");
  return ((b - a * 2) * 2).pow(2) - a * (a * 5 - b * 4 + 3) * 4;
}

// a^3 (g(sigma*) - (s + (b-2a)/a)^3) with sigma* = K/a^2, denominators cleared.
MPolyZ cube_collapse_raw_diff() {
  auto a = mkvar(kABX, "a");
  auto b = mkvar(kABX, "b");
  auto s = mkvar(kABX, "s");
  auto K = a.pow(2) * 2 + a * b * 2 - b * 3;
  auto lhs = a.pow(3) * s.pow(3) +
             a.pow(2) * (a * (a * 2 + b * 2 - 6) - K) * s.pow(2) +
             (a * (a * 4 - b - a * b) * K + a.pow(3) * (a + b - 3).pow(2)) * s -
             a * (a - b + 1).pow(2) * K;
  auto rhs = (a * s + (b - a * 2)).pow(3);
  return lhs - rhs;
}

// Cross-multiplied difference of the two rational trace expressions; zero
// modulo (2, b^2 = a^2 + a).
MPolyZ char2_cross_raw_diff() {
  auto a = mkvar(kABU, "a");
  auto b = mkvar(kABU, "b");
  auto u = mkvar(kABU, "u");
  auto A3 = (a + 1).pow(2) * (b + u).pow(3) * u + a.pow(3) + (a + 1) * u.pow(2);
  auto D3 = (a + 1) * ((a + 1) * u + a * b).pow(2);
  auto S = b * u + a.pow(2);
  auto DR = (a + 1).pow(2) * S.pow(2);
  auto NR = u.pow(2) * DR + (a + 1) * S.pow(2) + b * u * (a + 1) * S.pow(2) +
            b.pow(2) * u.pow(2) * S.pow(2) + a.pow(2) * (a + 1) * S + a.pow(4);
  return A3 * DR - NR * D3;
}

std::pair<MPolyZ, MPolyZ> cubic_quad_diffs() {
  auto r1 = mkvar(kR, "r1");
  auto r2 = mkvar(kR, "r2");
  auto r3 = mkvar(kR, "r3");
  auto A = -(r1 + r2 + r3);
  auto B = r1 * r2 + r1 * r3 + r2 * r3;
  auto C = -(r1 * r2 * r3);
  auto P1 = r1.pow(2) * r2 + r2.pow(2) * r3 + r3.pow(2) * r1;
  auto P2 = r2.pow(2) * r1 + r1.pow(2) * r3 + r3.pow(2) * r2;
  auto d1 = A * B - C * 3 + P1 + P2;
  auto d2 = A.pow(3) * C + B.pow(3) + C.pow(2) * 9 - A * B * C * 6 - P1 * P2;
  return {d1, d2};
}

// All (a, b) in F_q with b^2 = a^2 + 3a; in characteristic 2 the same
// expression reads b^2 = a^2 + a.
std::vector<std::pair<std::uint32_t, std::uint32_t>> relation_pairs(const FieldCtx& F) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const std::uint32_t three = F.of_int(3);
  for (std::uint32_t a = 0; a < F.q(); ++a) {
    const std::uint32_t rhs = F.add(F.mul(a, a), F.mul(three, a));
    for (std::uint32_t b = 0; b < F.q(); ++b)
      if (F.mul(b, b) == rhs) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::ScalarFactorProduct: return "scalar_factor_product";
    case IdentityId::ResolventDiscFactored: return "resolvent_disc_factored";
    case IdentityId::ResolventDiscSquareCollapse: return "resolvent_disc_square_collapse";
    case IdentityId::ResolventDiscClosed: return "resolvent_disc_closed";
    case IdentityId::DerivativeDiscZero: return "derivative_disc_zero";
    case IdentityId::Char2TraceRational: return "char2_trace_rational";
    case IdentityId::CubicQuadResolvent: return "cubic_quad_resolvent";
  }
  return "?";
}

IdentityReport verify_identity(IdentityId id) {
  IdentityReport rep;
  rep.id = id;
  rep.name = to_string(id);
  auto add = [&rep](std::string label, bool pass) {
    rep.checks.push_back({std::move(label), pass});
  };
  switch (id) {
    case IdentityId::ScalarFactorProduct:
      add("equals (a+1)^2 - b^2 in Z[a,b]", scalar_factor_plain_diff().is_zero());
      add("equals 1 - a under b^2 = a^2 + 3a",
          scalar_factor_relation_diff().reduced("b", odd_relation(kAB)).is_zero());
      break;
    case IdentityId::ResolventDiscFactored:
      add("discriminant equals (a-1)^2 sigma (sigma - 4) h in Z[a,b,sigma], no side relation",
          disc_factored_diff().is_zero());
      break;
    case IdentityId::ResolventDiscSquareCollapse:
      add("a h equals (a-1)(a^2 sigma - K)^2 under b^2 = a^2 + 3a",
          square_collapse_raw_diff().reduced("b", odd_relation(kABS)).is_zero());
      break;
    case IdentityId::ResolventDiscClosed:
      add("a D equals (a-1)^3 sigma (sigma - 4)(a^2 sigma - K)^2 under b^2 = a^2 + 3a",
          disc_closed_raw_diff().reduced("b", odd_relation(kABS)).is_zero());
      break;
    case IdentityId::DerivativeDiscZero:
      add("(2(b - 2a))^2 - 4a(5a - 4b + 3) vanishes under b^2 = a^2 + 3a",
          derivative_disc_raw_diff().reduced("b", odd_relation(kAB)).is_zero());
      add("cleared cube collapse at sigma = K/a^2 vanishes under b^2 = a^2 + 3a",
          cube_collapse_raw_diff().reduced("b", odd_relation(kABX)).is_zero());
      break;
    case IdentityId::Char2TraceRational:
      add("cross-multiplied difference vanishes mod (2, b^2 = a^2 + a)",
          char2_cross_raw_diff()
              .reduced("b", mkvar(kABU, "a") * mkvar(kABU, "a") + mkvar(kABU, "a"))
              .coeffs_mod(2)
              .is_zero());
      break;
    case IdentityId::CubicQuadResolvent: {
      auto [d1, d2] = cubic_quad_diffs();
      add("AB - 3C equals -(P1 + P2)", d1.is_zero());
      add("A^3 C + B^3 + 9 C^2 - 6 ABC equals P1 P2", d2.is_zero());
      break;
    }
  }
  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

std::vector<IdentityReport> verify_all_identities() {
  std::vector<IdentityReport> out;
  for (IdentityId id : kAllIdentities) out.push_back(verify_identity(id));
  return out;
}

std::uint64_t identity_shadow_mismatches(IdentityId id, const FieldCtx& F) {
  const std::uint32_t q = F.q();
  std::uint64_t bad = 0;
  switch (id) {
    case IdentityId::ScalarFactorProduct: {
      const auto d1 = scalar_factor_plain_diff();
      const auto d2 = scalar_factor_relation_diff();
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
          if (d1.eval(F, {a, b}) != 0) ++bad;
      for (const auto& [a, b] : relation_pairs(F))
        if (d2.eval(F, {a, b}) != 0) ++bad;
      return bad;
    }
    case IdentityId::ResolventDiscFactored: {
      const auto d = disc_factored_diff();
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
          for (std::uint32_t s = 0; s < q; ++s)
            if (d.eval(F, {a, b, s}) != 0) ++bad;
      return bad;
    }
    case IdentityId::ResolventDiscSquareCollapse:
    case IdentityId::ResolventDiscClosed: {
      const auto d = id == IdentityId::ResolventDiscSquareCollapse
                         ? square_collapse_raw_diff()
                         : disc_closed_raw_diff();
      for (const auto& [a, b] : relation_pairs(F))
        for (std::uint32_t s = 0; s < q; ++s)
          if (d.eval(F, {a, b, s}) != 0) ++bad;
      return bad;
    }
    case IdentityId::DerivativeDiscZero: {
      const auto d1 = derivative_disc_raw_diff();
      const auto d2 = cube_collapse_raw_diff();
      for (const auto& [a, b] : relation_pairs(F)) {
        if (d1.eval(F, {a, b}) != 0) ++bad;
        for (std::uint32_t s = 0; s < q; ++s)
          if (d2.eval(F, {a, b, s}) != 0) ++bad;
      }
      return bad;
    }
    case IdentityId::Char2TraceRational: {
      if (F.p() != 2)
        fail(ErrorCode::OddCharacteristic, "identity lives in characteristic 2");
      const auto d = char2_cross_raw_diff();
      for (const auto& [a, b] : relation_pairs(F))
        for (std::uint32_t u = 0; u < q; ++u)
          if (d.eval(F, {a, b, u}) != 0) ++bad;
      return bad;
    }
    case IdentityId::CubicQuadResolvent: {
      const auto [d1, d2] = cubic_quad_diffs();
      for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y)
          for (std::uint32_t z = 0; z < q; ++z) {
            if (d1.eval(F, {x, y, z}) != 0) ++bad;
            if (d2.eval(F, {x, y, z}) != 0) ++bad;
          }
      return bad;
    }
  }
  return bad;
}

}  // namespace pptri
