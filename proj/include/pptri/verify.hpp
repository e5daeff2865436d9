#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pptri/bigint.hpp"
#include "pptri/gf.hpp"
#include "pptri/gnq.hpp"

namespace pptri {

/// Name of the environment variable that supplies the default results
/// directory (overridden by config file and flags, in that order).
inline constexpr const char* kResultsDirEnvVar = "PPTRI_RESULTS_DIR";

struct CheckResult {
  std::string name;
  bool pass = true;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::string detail;  // first mismatch, empty when clean
};

/// Structural self-tests: identities, inverses, commutativity on all pairs,
/// associativity/distributivity on (possibly strided) triples, x^q = x,
/// encoding round trips.
CheckResult check_field_axioms(std::uint64_t p, std::uint32_t m);
/// Frobenius involution and homomorphism, trace/norm closed forms, the
/// defining equation of w, embedding homomorphism.
CheckResult check_tower_properties(std::uint64_t p, std::uint32_t m);

/// Classification predicate vs exhaustive permutation test, every (a, b).
CheckResult check_theorem_A(std::uint64_t p, std::uint32_t m);
CheckResult check_theorem_B(std::uint32_t m);
/// compute_X_set equals the closed-form parametrized union (q = 2^m).
CheckResult check_x_set_parametrization(std::uint32_t m);

/// Termwise sums vs closed forms for every z in F_q^* meeting each hypothesis.
CheckResult check_lemma_sums(std::uint64_t p, std::uint32_t m);
/// Combinatorial expansion vs direct power sum at s = alpha + (q-1-alpha) q.
CheckResult check_power_sum_expansion(std::uint64_t p, std::uint32_t m);
/// The three closed-form endpoint values vs direct sums, where defined.
CheckResult check_power_sum_endpoints(std::uint64_t p, std::uint32_t m);

/// Coefficient route (at x^q - x), recurrence route, and functional sum agree
/// for all n <= n_max and every x in F_{q^2}.
CheckResult check_gnq_consistency(std::uint64_t p, std::uint32_t m,
                                  std::uint64_t n_max);
/// Even-q desirability predicate vs brute force, 0 <= beta < alpha < 4.
CheckResult check_theorem_C(std::uint32_t m, bool as_printed = false);
/// Odd-q desirability predicate vs brute force, 0 <= beta < alpha < 2p.
CheckResult check_theorem_D(std::uint64_t p, std::uint32_t m,
                            const ThmDOptions& options = {});
/// The inversion identity pointwise over F_{q^2} for every admissible
/// (alpha, beta) with beta odd, beta != p.
CheckResult check_inversion_identity(std::uint64_t p, std::uint32_t m);

/// All seven symbolic identities reduce to the zero polynomial.
CheckResult check_identities();
/// Numeric evaluation of the identity difference polynomials over F_{p^m}.
CheckResult check_identity_shadows(std::uint64_t p, std::uint32_t m);

const char* to_string(Iv2FirstLine v);
const char* to_string(Iv2SecondLine v);

struct Iv2ReadingReport {
  Iv2FirstLine first = Iv2FirstLine::SumA1;
  Iv2SecondLine second = Iv2SecondLine::NonzeroSquare;
  std::uint64_t mismatches = 0;
};

struct Iv2Resolution {
  std::vector<Iv2ReadingReport> readings;  // the four readings, fixed order
  std::optional<std::size_t> unique_zero;  // index iff exactly one is clean
  std::string selected;                    // e.g. "sum_a1/nonzero_square"
};

struct ThmDSweep {
  std::vector<CheckResult> per_field;  // default reading vs brute force
  Iv2Resolution resolution;
};

/// One brute-force pass per field, compared against all four readings of the
/// contested clause; the default reading also yields per-field check rows.
ThmDSweep sweep_theorem_D(
    const std::vector<std::pair<std::uint64_t, std::uint32_t>>& fields);

struct RunConfig {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> fields;
  std::uint64_t max_order = kDefaultMaxOrder;
  std::string results_dir = "results";
  std::string format = "json";  // json | csv
  std::uint32_t parallelism = 1;
  Iv2FirstLine iv2_first = Iv2FirstLine::SumA1;
  Iv2SecondLine iv2_second = Iv2SecondLine::NonzeroSquare;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  std::optional<Iv2Resolution> iv2;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> fields_touched;
  bool pass = true;
};

SuiteResult run_verify_lemmas();
SuiteResult run_verify_hermite();
SuiteResult run_verify_identities();
/// small limits the classification sweeps to q <= 13 (odd) / q <= 32 (even);
/// the full run adds the larger odd prime-power fields.
SuiteResult run_verify_all(bool small);

/// "p m modulus_enc" per field, sorted, one per line.
std::string modulus_cache_text(
    const std::vector<std::pair<std::uint64_t, std::uint32_t>>& fields);

/// Deterministic JSON report (LF, two-space indent, no timestamps); embeds
/// the modulus encoding of every field the suite touched.
std::string suite_report_json(const SuiteResult& result, const RunConfig& config);

/// Writes <suite>.json and modulus_cache.txt under config.results_dir,
/// creating it if needed; returns the written paths.
std::vector<std::string> write_verify_artifacts(const SuiteResult& result,
                                                const RunConfig& config);

/// Versioned deterministic renderings of the permutation-set table.
std::string x_set_csv(const QuadExtCtx& ext,
                      const std::vector<std::array<std::uint32_t, 3>>& xs);
std::string x_set_json(const QuadExtCtx& ext,
                       const std::vector<std::array<std::uint32_t, 3>>& xs);

struct DesirableRow {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  BigInt n;
  std::optional<bool> predicate;  // absent outside the classified range
  bool bruteforce = false;
};

struct DesirableTable {
  std::uint64_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::uint32_t e = 0;
  std::uint64_t modulus_enc = 0;
  Iv2FirstLine iv2_first = Iv2FirstLine::SumA1;
  Iv2SecondLine iv2_second = Iv2SecondLine::NonzeroSquare;
  std::vector<DesirableRow> rows;
};

/// Brute-force desirability for n = q^alpha - q^beta - 1 over all
/// 0 <= beta < alpha <= alpha_max, with the classification predicate filled in
/// where e = 2 and (alpha, beta) lies in the classified range.
DesirableTable build_desirable_table(std::uint64_t p, std::uint32_t m,
                                     std::uint32_t e, std::uint32_t alpha_max,
                                     const ThmDOptions& options,
                                     std::uint64_t max_order = kDefaultMaxOrder);

std::string desirable_csv(const DesirableTable& table);
std::string desirable_json(const DesirableTable& table);

/// Writes content exactly as given (binary mode, caller supplies LF endings).
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pptri
