#include "pptri/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pptri/error.hpp"
#include "pptri/hermite.hpp"
#include "pptri/lemma_sums.hpp"
#include "pptri/symbolic.hpp"
#include "pptri/trinomial.hpp"

namespace pptri {

namespace {

using ordered_json = nlohmann::ordered_json;
using FieldList = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

void note(CheckResult& r, const std::string& detail) {
  if (r.mismatches == 0) r.detail = detail;
  ++r.mismatches;
  r.pass = false;
}

std::string qtag(std::uint64_t q) { return "q" + std::to_string(q); }

BigInt index_n(std::uint32_t q, std::uint32_t alpha, std::uint32_t beta) {
  using boost::multiprecision::pow;
  return pow(BigInt(q), alpha) - pow(BigInt(q), beta) - 1;
}

std::string point_tag(std::uint64_t q, std::uint32_t a, std::uint32_t b) {
  return "q=" + std::to_string(q) + " a=" + std::to_string(a) +
         " b=" + std::to_string(b);
}

FieldList sorted_unique(FieldList fields) {
  std::sort(fields.begin(), fields.end());
  fields.erase(std::unique(fields.begin(), fields.end()), fields.end());
  return fields;
}

// Field lists for the orchestrated suites.
const FieldList kStructuralFields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                                  {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};
const FieldList kOddAFieldsSmall{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}};
const FieldList kOddAFieldsLarge{{5, 2}, {3, 3}, {7, 2}};
const FieldList kLemmaFields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2},
                             {11, 1}, {13, 1}, {2, 4}, {5, 2}, {3, 3}, {2, 5}};
const FieldList kExpansionFields{{3, 1}, {5, 1}, {7, 1}, {3, 2}};
const FieldList kEndpointFields{{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {2, 3}, {2, 4}};
const FieldList kGnqFields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}};
const FieldList kThmDFields{{3, 1}, {5, 1}, {7, 1}, {3, 2}};
const FieldList kShadowOddFields{{5, 1}, {7, 1}, {3, 2}};
const FieldList kShadowEvenFields{{2, 2}, {2, 3}, {2, 4}};

}  // namespace

CheckResult check_field_axioms(std::uint64_t p, std::uint32_t m) {
  auto Fp = FieldCtx::build(p, m);
  const FieldCtx& F = *Fp;
  const std::uint32_t q = F.q();
  CheckResult r;
  r.name = "field_axioms_" + qtag(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    ++r.checked;
    if (F.add(x, 0) != x) note(r, "additive identity at x=" + std::to_string(x));
    if (F.mul(x, 1) != x) note(r, "multiplicative identity at x=" + std::to_string(x));
    if (F.add(x, F.neg(x)) != 0) note(r, "additive inverse at x=" + std::to_string(x));
    if (x != 0 && F.mul(x, F.inv(x)) != 1)
      note(r, "multiplicative inverse at x=" + std::to_string(x));
    if (F.pow(x, q) != x) note(r, "x^q != x at x=" + std::to_string(x));
    const auto cs = F.coeffs_of(x);
    std::uint64_t enc = 0;
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      enc += cs[i] * pk;
      pk *= p;
    }
    if (enc != x) note(r, "coefficient round trip at x=" + std::to_string(x));
  }
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) {
      ++r.checked;
      if (F.add(x, y) != F.add(y, x)) note(r, "add commutativity");
      if (F.mul(x, y) != F.mul(y, x)) note(r, "mul commutativity");
      if (F.sub(x, y) != F.add(x, F.neg(y))) note(r, "sub vs neg");
    }
  const std::uint32_t step = q <= 16 ? 1 : q / 16 + 1;
  for (std::uint32_t x = 0; x < q; x += step)
    for (std::uint32_t y = 0; y < q; y += step)
      for (std::uint32_t z = 0; z < q; z += step) {
        ++r.checked;
        if (F.add(F.add(x, y), z) != F.add(x, F.add(y, z)))
          note(r, "add associativity");
        if (F.mul(F.mul(x, y), z) != F.mul(x, F.mul(y, z)))
          note(r, "mul associativity");
        if (F.mul(x, F.add(y, z)) != F.add(F.mul(x, y), F.mul(x, z)))
          note(r, "distributivity");
      }
  return r;
}

CheckResult check_tower_properties(std::uint64_t p, std::uint32_t m) {
  auto Fp = FieldCtx::build(p, m);
  auto extp = QuadExtCtx::build(Fp);
  const FieldCtx& F = *Fp;
  const QuadExtCtx& E = *extp;
  const std::uint32_t q = E.q();
  const std::uint32_t n = E.order();
  CheckResult r;
  r.name = "tower_properties_" + qtag(q);
  const std::uint32_t w = E.compose(0, 1);
  const std::uint32_t w2 = E.mul(w, w);
  if (E.artin_schreier()) {
    if (E.add(w2, w) != E.embed(E.d())) note(r, "w^2 + w != d");
  } else {
    if (w2 != E.embed(E.d())) note(r, "w^2 != d");
  }
  ++r.checked;
  for (std::uint32_t x = 0; x < n; ++x) {
    ++r.checked;
    const std::uint32_t fx = E.frobenius(x);
    if (E.frobenius(fx) != x) note(r, "Frobenius not an involution");
    if (E.pow(x, q) != fx) note(r, "x^q != frobenius(x)");
    if (E.embed(E.trace_rel(x)) != E.add(x, fx)) note(r, "trace mismatch");
    if (E.embed(E.norm_rel(x)) != E.mul(x, fx)) note(r, "norm mismatch");
    if (x != 0 && E.mul(x, E.inv(x)) != 1) note(r, "inverse mismatch");
  }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      ++r.checked;
      if (E.frobenius(E.add(x, y)) != E.add(E.frobenius(x), E.frobenius(y)))
        note(r, "Frobenius not additive");
      if (E.frobenius(E.mul(x, y)) != E.mul(E.frobenius(x), E.frobenius(y)))
        note(r, "Frobenius not multiplicative");
    }
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      ++r.checked;
      if (E.add(E.embed(a), E.embed(b)) != E.embed(F.add(a, b)))
        note(r, "embedding not additive");
      if (E.mul(E.embed(a), E.embed(b)) != E.embed(F.mul(a, b)))
        note(r, "embedding not multiplicative");
      if (E.frobenius(E.embed(a)) != E.embed(a)) note(r, "base not Frobenius-fixed");
    }
  return r;
}

CheckResult check_theorem_A(std::uint64_t p, std::uint32_t m) {
  auto Fp = FieldCtx::build(p, m);
  auto extp = QuadExtCtx::build(Fp);
  const FieldCtx& F = *Fp;
  const std::uint32_t q = F.q();
  CheckResult r;
  r.name = "theorem_A_equivalence_" + qtag(q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      ++r.checked;
      const bool pred = theorem_A_predicate(F, a, b);
      const bool brute = is_pp_bruteforce(*extp, {a, b, 1}).is_pp;
      if (pred != brute)
        note(r, point_tag(q, a, b) + (brute ? " permutes" : " does not permute") +
                    " but predicate says otherwise");
    }
  return r;
}

CheckResult check_theorem_B(std::uint32_t m) {
  auto Fp = FieldCtx::build(2, m);
  auto extp = QuadExtCtx::build(Fp);
  const FieldCtx& F = *Fp;
  const std::uint32_t q = F.q();
  CheckResult r;
  r.name = "theorem_B_equivalence_" + qtag(q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      ++r.checked;
      const bool pred = theorem_B_predicate(F, a, b);
      const bool brute = is_pp_bruteforce(*extp, {a, b, 1}).is_pp;
      if (pred != brute)
        note(r, point_tag(q, a, b) + (brute ? " permutes" : " does not permute") +
                    " but predicate says otherwise");
    }
  return r;
}

CheckResult check_x_set_parametrization(std::uint32_t m) {
  auto Fp = FieldCtx::build(2, m);
  auto extp = QuadExtCtx::build(Fp);
  CheckResult r;
  r.name = "x_set_parametrization_" + qtag(Fp->q());
  const auto brute = compute_X_set(*extp);
  const auto param = x_set_parametrized_even(*Fp);
  r.checked = brute.size();
  if (brute != param) {
    note(r, "exhaustive set (size " + std::to_string(brute.size()) +
                ") differs from parametrized set (size " +
                std::to_string(param.size()) + ")");
  }
  return r;
}

CheckResult check_lemma_sums(std::uint64_t p, std::uint32_t m) {
  auto Fp = FieldCtx::build(p, m);
  const FieldCtx& F = *Fp;
  const std::uint32_t q = F.q();
  CheckResult r;
  r.name = "lemma_sums_" + qtag(q);
  for (LemmaSumId id : kAllLemmaSums)
    for (std::uint32_t z = 1; z < q; ++z) {
      if (!lemma_hypothesis_holds(F, id, z)) continue;
      ++r.checked;
      if (lemma_sum(F, id, z) != lemma_closed(F, id, z))
        note(r, std::string(to_string(id)) + " at q=" + std::to_string(q) +
                    " z=" + std::to_string(z));
    }
  return r;
}

CheckResult check_power_sum_expansion(std::uint64_t p, std::uint32_t m) {
  auto Fp = FieldCtx::build(p, m);
  auto extp = QuadExtCtx::build(Fp);
  const std::uint32_t q = Fp->q();
  CheckResult r;
  r.name = "power_sum_expansion_" + qtag(q);
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t alpha = 0; alpha < q; ++alpha) {
        const std::uint32_t beta = q - 1 - alpha;
        const BigInt s = BigInt(alpha) + BigInt(beta) * q;
        ++r.checked;
        const std::uint32_t direct = power_sum_direct(*extp, {a, b, 1}, s);
        const std::uint32_t via = power_sum_expansion(*extp, a, b, alpha, beta);
        if (direct != via)
          note(r, point_tag(q, a, b) + " alpha=" + std::to_string(alpha));
      }
  return r;
}

CheckResult check_power_sum_endpoints(std::uint64_t p, std::uint32_t m) {
  auto Fp = FieldCtx::build(p, m);
  auto extp = QuadExtCtx::build(Fp);
  const FieldCtx& F = *Fp;
  const QuadExtCtx& E = *extp;
  const std::uint32_t q = F.q();
  CheckResult r;
  r.name = "power_sum_endpoints_" + qtag(q);
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b) {
      const std::uint32_t z = F.neg(F.mul(a, F.inv(F.mul(b, b))));
      if (quad_split_kind(F, z) != SplitKind::TwoRoots) continue;
      const auto ep = power_sum_endpoints(E, a, b);
      const std::array<std::uint32_t, 3> expected = {
          ep.first_ext, E.embed(ep.second_base), E.embed(ep.third_base)};
      for (int k = 0; k < 3; ++k) {
        ++r.checked;
        const BigInt s = endpoint_exponent(q, k);
        if (power_sum_direct(E, {a, b, 1}, s) != expected[k])
          note(r, point_tag(q, a, b) + " endpoint " + std::to_string(k));
      }
    }
  return r;
}

CheckResult check_gnq_consistency(std::uint64_t p, std::uint32_t m,
                                  std::uint64_t n_max) {
  auto Fp = FieldCtx::build(p, m);
  auto extp = QuadExtCtx::build(Fp);
  const QuadExtCtx& E = *extp;
  const std::uint32_t q = Fp->q();
  CheckResult r;
  r.name = "gnq_consistency_" + qtag(q);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const DensePoly g = gnq_coeffs(*Fp, n);
    for (std::uint32_t x = 0; x < E.order(); ++x) {
      ++r.checked;
      const std::uint32_t y = E.sub(E.frobenius(x), x);
      const std::uint32_t via_coeffs = eval_dense_ext(E, g, y);
      const std::uint32_t via_rec = gnq_eval_rec_ext(E, BigInt(n), y);
      const std::uint32_t functional = gnq_eval_functional_ext(E, BigInt(n), x);
      if (via_coeffs != functional || via_rec != functional)
        note(r, "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                    " x=" + std::to_string(x));
    }
  }
  return r;
}

CheckResult check_theorem_C(std::uint32_t m, bool as_printed) {
  auto Fp = FieldCtx::build(2, m);
  auto extp = QuadExtCtx::build(Fp);
  const std::uint32_t q = Fp->q();
  CheckResult r;
  r.name = "theorem_C_equivalence_" + qtag(q);
  for (std::uint32_t alpha = 1; alpha < 4; ++alpha)
    for (std::uint32_t beta = 0; beta < alpha; ++beta) {
      ++r.checked;
      const bool pred = theorem_C_predicate(alpha, beta, q, as_printed);
      const bool brute = is_desirable_ext(*extp, index_n(q, alpha, beta)).desirable;
      if (pred != brute)
        note(r, "q=" + std::to_string(q) + " alpha=" + std::to_string(alpha) +
                    " beta=" + std::to_string(beta));
    }
  return r;
}

CheckResult check_theorem_D(std::uint64_t p, std::uint32_t m,
                            const ThmDOptions& options) {
  auto Fp = FieldCtx::build(p, m);
  auto extp = QuadExtCtx::build(Fp);
  const std::uint32_t q = Fp->q();
  CheckResult r;
  r.name = "theorem_D_equivalence_" + qtag(q);
  for (std::uint32_t alpha = 1; alpha < 2 * p; ++alpha)
    for (std::uint32_t beta = 0; beta < alpha; ++beta) {
      ++r.checked;
      const bool pred = theorem_D_predicate(*Fp, alpha, beta, options);
      const bool brute = is_desirable_ext(*extp, index_n(q, alpha, beta)).desirable;
      if (pred != brute)
        note(r, "q=" + std::to_string(q) + " alpha=" + std::to_string(alpha) +
                    " beta=" + std::to_string(beta));
    }
  return r;
}

const char* to_string(Iv2FirstLine v) {
  return v == Iv2FirstLine::SumA1 ? "sum_a1" : "literal_a2";
}

const char* to_string(Iv2SecondLine v) {
  return v == Iv2SecondLine::NonzeroSquare ? "nonzero_square" : "congruence";
}

ThmDSweep sweep_theorem_D(const FieldList& fields) {
  ThmDSweep out;
  const std::array<std::pair<Iv2FirstLine, Iv2SecondLine>, 4> readings{{
      {Iv2FirstLine::SumA1, Iv2SecondLine::NonzeroSquare},
      {Iv2FirstLine::SumA1, Iv2SecondLine::Congruence},
      {Iv2FirstLine::LiteralA2, Iv2SecondLine::NonzeroSquare},
      {Iv2FirstLine::LiteralA2, Iv2SecondLine::Congruence},
  }};
  std::array<std::uint64_t, 4> mism{0, 0, 0, 0};
  for (const auto& [p, m] : fields) {
    auto Fp = FieldCtx::build(p, m);
    auto extp = QuadExtCtx::build(Fp);
    const std::uint32_t q = Fp->q();
    CheckResult r;
    r.name = "theorem_D_equivalence_" + qtag(q);
    for (std::uint32_t alpha = 1; alpha < 2 * p; ++alpha)
      for (std::uint32_t beta = 0; beta < alpha; ++beta) {
        ++r.checked;
        const bool brute =
            is_desirable_ext(*extp, index_n(q, alpha, beta)).desirable;
        for (std::size_t i = 0; i < readings.size(); ++i) {
          ThmDOptions opt;
          opt.iv2_first = readings[i].first;
          opt.iv2_second = readings[i].second;
          const bool pred = theorem_D_predicate(*Fp, alpha, beta, opt);
          if (pred != brute) {
            ++mism[i];
            if (i == 0)
              note(r, "q=" + std::to_string(q) + " alpha=" + std::to_string(alpha) +
                          " beta=" + std::to_string(beta));
          }
        }
      }
    out.per_field.push_back(std::move(r));
  }
  std::size_t zero_count = 0;
  std::size_t zero_index = 0;
  for (std::size_t i = 0; i < readings.size(); ++i) {
    out.resolution.readings.push_back({readings[i].first, readings[i].second, mism[i]});
    if (mism[i] == 0) {
      ++zero_count;
      zero_index = i;
    }
  }
  if (zero_count == 1) {
    out.resolution.unique_zero = zero_index;
    out.resolution.selected = std::string(to_string(readings[zero_index].first)) +
                              "/" + to_string(readings[zero_index].second);
  }
  return out;
}

CheckResult check_inversion_identity(std::uint64_t p, std::uint32_t m) {
  auto Fp = FieldCtx::build(p, m);
  auto extp = QuadExtCtx::build(Fp);
  const QuadExtCtx& E = *extp;
  const std::uint32_t q = Fp->q();
  CheckResult r;
  r.name = "inversion_identity_" + qtag(q);
  for (std::uint32_t beta = 1; beta < 2 * p; beta += 2) {
    if (beta == p) continue;
    for (std::uint32_t alpha = beta + 1; alpha < 2 * p; ++alpha) {
      const InversionTransform t = inversion_transform(*Fp, alpha, beta);
      const BigInt n = index_n(q, alpha, beta);
      const std::uint32_t eA = E.embed(t.A);
      const std::uint32_t eB = E.embed(t.B);
      const std::uint32_t eC = E.embed(t.C);
      for (std::uint32_t x = 0; x < E.order(); ++x) {
        ++r.checked;
        const std::uint32_t g = gnq_eval_rec_ext(E, n, x);
        const std::uint32_t ph = phi_map(E, t.b1, x);
        const std::uint32_t phq = E.frobenius(ph);
        const std::uint32_t ph2q1 =
            ph == 0 ? 0 : E.mul(E.mul(phq, phq), E.inv(ph));
        const std::uint32_t rhs = E.add(
            E.add(E.mul(eA, ph), E.mul(eB, phq)), E.mul(eC, ph2q1));
        if (g != rhs)
          note(r, "q=" + std::to_string(q) + " alpha=" + std::to_string(alpha) +
                      " beta=" + std::to_string(beta) + " x=" + std::to_string(x));
      }
    }
  }
  return r;
}

CheckResult check_identities() {
  CheckResult r;
  r.name = "symbolic_identities";
  for (const IdentityReport& rep : verify_all_identities())
    for (const IdentityCheck& c : rep.checks) {
      ++r.checked;
      if (!c.pass) note(r, rep.name + ": " + c.label);
    }
  return r;
}

CheckResult check_identity_shadows(std::uint64_t p, std::uint32_t m) {
  auto Fp = FieldCtx::build(p, m);
  CheckResult r;
  r.name = "identity_shadows_" + qtag(Fp->q());
  for (IdentityId id : kAllIdentities) {
    if (id == IdentityId::Char2TraceRational && p != 2) continue;
    ++r.checked;
    const std::uint64_t bad = identity_shadow_mismatches(id, *Fp);
    if (bad != 0) {
      r.mismatches += bad;
      r.pass = false;
      if (r.detail.empty())
        r.detail = std::string(to_string(id)) + " has " + std::to_string(bad) +
                   " nonzero evaluations";
    }
  }
  return r;
}

namespace {

void append(SuiteResult& s, CheckResult r) {
  s.pass = s.pass && r.pass;
  s.checks.push_back(std::move(r));
}

}  // namespace

SuiteResult run_verify_lemmas() {
  SuiteResult s;
  s.suite = "verify_lemmas";
  for (const auto& [p, m] : kLemmaFields) append(s, check_lemma_sums(p, m));
  s.fields_touched = sorted_unique(kLemmaFields);
  return s;
}

SuiteResult run_verify_hermite() {
  SuiteResult s;
  s.suite = "verify_hermite";
  for (const auto& [p, m] : kExpansionFields) append(s, check_power_sum_expansion(p, m));
  for (const auto& [p, m] : kEndpointFields) append(s, check_power_sum_endpoints(p, m));
  FieldList touched = kExpansionFields;
  touched.insert(touched.end(), kEndpointFields.begin(), kEndpointFields.end());
  s.fields_touched = sorted_unique(std::move(touched));
  return s;
}

SuiteResult run_verify_identities() {
  SuiteResult s;
  s.suite = "verify_identities";
  append(s, check_identities());
  return s;
}

SuiteResult run_verify_all(bool small) {
  SuiteResult s;
  s.suite = small ? "verify_all_small" : "verify_all";
  FieldList touched;
  auto touch = [&touched](const FieldList& fs) {
    touched.insert(touched.end(), fs.begin(), fs.end());
  };

  touch(kStructuralFields);
  for (const auto& [p, m] : kStructuralFields) {
    append(s, check_field_axioms(p, m));
    append(s, check_tower_properties(p, m));
  }

  FieldList a_fields = kOddAFieldsSmall;
  if (!small)
    a_fields.insert(a_fields.end(), kOddAFieldsLarge.begin(), kOddAFieldsLarge.end());
  touch(a_fields);
  for (const auto& [p, m] : a_fields) append(s, check_theorem_A(p, m));

  for (std::uint32_t m = 1; m <= 5; ++m) {
    touched.emplace_back(2, m);
    append(s, check_theorem_B(m));
  }
  for (std::uint32_t m = 1; m <= 4; ++m) append(s, check_x_set_parametrization(m));

  touch(kLemmaFields);
  for (const auto& [p, m] : kLemmaFields) append(s, check_lemma_sums(p, m));

  touch(kExpansionFields);
  for (const auto& [p, m] : kExpansionFields) append(s, check_power_sum_expansion(p, m));
  touch(kEndpointFields);
  for (const auto& [p, m] : kEndpointFields) append(s, check_power_sum_endpoints(p, m));

  touch(kGnqFields);
  for (const auto& [p, m] : kGnqFields) append(s, check_gnq_consistency(p, m, 200));

  for (std::uint32_t m = 1; m <= 4; ++m) {
    touched.emplace_back(2, m);
    append(s, check_theorem_C(m));
  }

  touch(kThmDFields);
  ThmDSweep d = sweep_theorem_D(kThmDFields);
  for (CheckResult& r : d.per_field) append(s, std::move(r));
  s.iv2 = d.resolution;
  if (!s.iv2->unique_zero) s.pass = false;

  for (const auto& [p, m] : kThmDFields) append(s, check_inversion_identity(p, m));

  append(s, check_identities());
  touch(kShadowOddFields);
  for (const auto& [p, m] : kShadowOddFields) append(s, check_identity_shadows(p, m));
  touch(kShadowEvenFields);
  for (const auto& [p, m] : kShadowEvenFields) append(s, check_identity_shadows(p, m));

  s.fields_touched = sorted_unique(std::move(touched));
  return s;
}

std::string modulus_cache_text(const FieldList& fields) {
  std::ostringstream out;
  for (const auto& [p, m] : sorted_unique(fields)) {
    auto F = FieldCtx::build(p, m);
    out << p << " " << m << " " << F->modulus_enc() << "\n";
  }
  return out.str();
}

std::string suite_report_json(const SuiteResult& result, const RunConfig& config) {
  ordered_json j;
  j["schema"] = "verify-report/v1";
  j["suite"] = result.suite;
  ordered_json jf = ordered_json::array();
  for (const auto& [p, m] : result.fields_touched) {
    auto F = FieldCtx::build(p, m, config.max_order);
    ordered_json e;
    e["p"] = p;
    e["m"] = m;
    e["q"] = F->q();
    e["modulus_enc"] = F->modulus_enc();
    jf.push_back(std::move(e));
  }
  j["fields"] = std::move(jf);
  if (result.iv2) {
    ordered_json readings = ordered_json::array();
    for (const auto& row : result.iv2->readings) {
      ordered_json e;
      e["first_line"] = to_string(row.first);
      e["second_line"] = to_string(row.second);
      e["mismatches"] = row.mismatches;
      readings.push_back(std::move(e));
    }
    ordered_json iv2;
    iv2["readings"] = std::move(readings);
    iv2["unique_clean_reading"] = result.iv2->unique_zero.has_value();
    iv2["selected"] = result.iv2->selected;
    j["iv2_resolution"] = std::move(iv2);
  }
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : result.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["checked"] = c.checked;
    e["mismatches"] = c.mismatches;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["pass"] = result.pass;
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::string> write_verify_artifacts(const SuiteResult& result,
                                                const RunConfig& config) {
  std::filesystem::create_directories(config.results_dir);
  const std::string report_path =
      (std::filesystem::path(config.results_dir) / (result.suite + ".json")).string();
  const std::string cache_path =
      (std::filesystem::path(config.results_dir) / "modulus_cache.txt").string();
  write_text_file(report_path, suite_report_json(result, config));
  write_text_file(cache_path, modulus_cache_text(result.fields_touched));
  return {report_path, cache_path};
}

std::string x_set_csv(const QuadExtCtx& ext,
                      const std::vector<std::array<std::uint32_t, 3>>& xs) {
  const FieldCtx& F = ext.base();
  std::ostringstream out;
  out << "# xset/v1 p=" << F.p() << " m=" << F.m() << " q=" << F.q()
      << " modulus_enc=" << F.modulus_enc() << "\n";
  out << "a,b,c\n";
  for (const auto& t : xs) out << t[0] << "," << t[1] << "," << t[2] << "\n";
  return out.str();
}

std::string x_set_json(const QuadExtCtx& ext,
                       const std::vector<std::array<std::uint32_t, 3>>& xs) {
  const FieldCtx& F = ext.base();
  ordered_json j;
  j["schema"] = "xset/v1";
  j["p"] = F.p();
  j["m"] = F.m();
  j["q"] = F.q();
  j["modulus_enc"] = F.modulus_enc();
  j["count"] = xs.size();
  ordered_json triples = ordered_json::array();
  for (const auto& t : xs) triples.push_back({t[0], t[1], t[2]});
  j["triples"] = std::move(triples);
  return j.dump(2) + "\n";
}

DesirableTable build_desirable_table(std::uint64_t p, std::uint32_t m,
                                     std::uint32_t e, std::uint32_t alpha_max,
                                     const ThmDOptions& options,
                                     std::uint64_t max_order) {
  if (e == 0) fail(ErrorCode::InvalidArgument, "extension degree must be positive");
  DesirableTable t;
  t.p = p;
  t.m = m;
  t.e = e;
  t.iv2_first = options.iv2_first;
  t.iv2_second = options.iv2_second;
  auto F = FieldCtx::build(p, m, max_order);
  t.q = F->q();
  t.modulus_enc = F->modulus_enc();
  std::shared_ptr<const QuadExtCtx> ext;
  std::shared_ptr<const FieldCtx> Fe;
  if (e == 2) {
    ext = QuadExtCtx::build(F, max_order);
  } else if (e == 1) {
    Fe = F;
  } else {
    const std::uint64_t me = static_cast<std::uint64_t>(m) * e;
    if (me > 0xffffffffULL) fail(ErrorCode::SizeBoundExceeded, "degree too large");
    Fe = FieldCtx::build(p, static_cast<std::uint32_t>(me), max_order);
  }
  for (std::uint32_t alpha = 1; alpha <= alpha_max; ++alpha)
    for (std::uint32_t beta = 0; beta < alpha; ++beta) {
      DesirableRow row;
      row.alpha = alpha;
      row.beta = beta;
      row.n = index_n(t.q, alpha, beta);
      row.bruteforce = (e == 2 ? is_desirable_ext(*ext, row.n)
                               : is_desirable_generic(*Fe, t.q, row.n))
                           .desirable;
      if (e == 2) {
        if (p == 2 && alpha < 4)
          row.predicate = theorem_C_predicate(alpha, beta, t.q);
        else if (p != 2 && alpha < 2 * p)
          row.predicate = theorem_D_predicate(*F, alpha, beta, options);
      }
      t.rows.push_back(std::move(row));
    }
  return t;
}

namespace {

std::string iv2_tag(const DesirableTable& t) {
  return std::string(to_string(t.iv2_first)) + "/" + to_string(t.iv2_second);
}

}  // namespace

std::string desirable_csv(const DesirableTable& t) {
  std::ostringstream out;
  out << "# desirable/v1 p=" << t.p << " m=" << t.m << " q=" << t.q
      << " e=" << t.e << " modulus_enc=" << t.modulus_enc
      << " iv2=" << iv2_tag(t) << "\n";
  out << "q,alpha,beta,n,predicate,bruteforce,agree\n";
  for (const DesirableRow& r : t.rows) {
    out << t.q << "," << r.alpha << "," << r.beta << "," << r.n.str() << ",";
    if (r.predicate) {
      out << (*r.predicate ? 1 : 0) << "," << (r.bruteforce ? 1 : 0) << ","
          << (*r.predicate == r.bruteforce ? 1 : 0);
    } else {
      out << "-," << (r.bruteforce ? 1 : 0) << ",-";
    }
    out << "\n";
  }
  return out.str();
}

std::string desirable_json(const DesirableTable& t) {
  ordered_json j;
  j["schema"] = "desirable/v1";
  j["p"] = t.p;
  j["m"] = t.m;
  j["q"] = t.q;
  j["e"] = t.e;
  j["modulus_enc"] = t.modulus_enc;
  j["iv2"] = iv2_tag(t);
  ordered_json rows = ordered_json::array();
  for (const DesirableRow& r : t.rows) {
    ordered_json e;
    e["q"] = t.q;
    e["alpha"] = r.alpha;
    e["beta"] = r.beta;
    e["n"] = r.n.str();
    if (r.predicate) {
      e["predicate"] = *r.predicate;
      e["agree"] = *r.predicate == r.bruteforce;
    } else {
      e["predicate"] = nullptr;
      e["agree"] = nullptr;
    }
    e["bruteforce"] = r.bruteforce;
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace pptri
