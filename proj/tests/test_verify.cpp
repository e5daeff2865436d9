#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pptri/trinomial.hpp"
#include "pptri/verify.hpp"
#include "test_util.hpp"

using namespace pptri;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("check runners pass on small fields") {
  CHECK(check_field_axioms(5, 1).pass);
  CHECK(check_tower_properties(2, 2).pass);
  const auto a = check_theorem_A(3, 1);
  CHECK(a.pass);
  CHECK(a.checked == 9);
  const auto b = check_theorem_B(2);
  CHECK(b.pass);
  CHECK(b.checked == 16);
  const auto xs = check_x_set_parametrization(2);
  CHECK(xs.pass);
  CHECK(xs.checked == 6);
  CHECK(check_lemma_sums(5, 1).pass);
  CHECK(check_power_sum_expansion(3, 1).pass);
  CHECK(check_power_sum_endpoints(5, 1).pass);
  CHECK(check_gnq_consistency(3, 1, 40).pass);
  CHECK(check_theorem_C(2).pass);
  CHECK(check_inversion_identity(3, 1).pass);
  CHECK(check_identities().pass);
  CHECK(check_identity_shadows(5, 1).pass);
  CHECK(check_identity_shadows(2, 2).pass);
}

TEST_CASE("contested-clause sweep bookkeeping") {
  const auto sweep = sweep_theorem_D({{3, 1}});
  REQUIRE(sweep.per_field.size() == 1);
  CHECK(sweep.per_field[0].pass);
  CHECK(sweep.per_field[0].checked == 15);  // alpha < 6, beta < alpha
  REQUIRE(sweep.resolution.readings.size() == 4);
  CHECK(sweep.resolution.readings[0].mismatches == 0);  // the selected reading
  CHECK(to_string(Iv2FirstLine::SumA1) == std::string("sum_a1"));
  CHECK(to_string(Iv2FirstLine::LiteralA2) == std::string("literal_a2"));
  CHECK(to_string(Iv2SecondLine::NonzeroSquare) == std::string("nonzero_square"));
  CHECK(to_string(Iv2SecondLine::Congruence) == std::string("congruence"));
}

TEST_CASE("modulus cache rendering") {
  CHECK(modulus_cache_text({{3, 1}, {2, 2}, {2, 2}}) == "2 2 7\n3 1 3\n");
}

TEST_CASE("permutation set rendering") {
  auto F = FieldCtx::build(2, 1);
  auto E = QuadExtCtx::build(F);
  const auto xs = compute_X_set(*E);
  CHECK(x_set_csv(*E, xs) ==
        "# xset/v1 p=2 m=1 q=2 modulus_enc=2\na,b,c\n0,1,0\n1,0,0\n");
  const std::string j = x_set_json(*E, xs);
  CHECK(j.find("\"schema\": \"xset/v1\"") != std::string::npos);
  CHECK(j.find("\"count\": 2") != std::string::npos);
}

TEST_CASE("desirable table rendering is exact") {
  const DesirableTable t = build_desirable_table(2, 1, 2, 3, ThmDOptions{});
  REQUIRE(t.rows.size() == 6);
  CHECK(desirable_csv(t) ==
        "# desirable/v1 p=2 m=1 q=2 e=2 modulus_enc=2 iv2=sum_a1/nonzero_square\n"
        "q,alpha,beta,n,predicate,bruteforce,agree\n"
        "2,1,0,0,0,0,1\n"
        "2,2,0,2,0,0,1\n"
        "2,2,1,1,0,0,1\n"
        "2,3,0,6,1,1,1\n"
        "2,3,1,5,0,0,1\n"
        "2,3,2,3,1,1,1\n");
  const std::string j = desirable_json(t);
  CHECK(j.find("\"schema\": \"desirable/v1\"") != std::string::npos);

  // Outside the classified range the predicate column is absent.
  const DesirableTable wide = build_desirable_table(2, 1, 2, 4, ThmDOptions{});
  bool saw_blank = false;
  for (const auto& row : wide.rows)
    if (row.alpha == 4) {
      CHECK(!row.predicate.has_value());
      saw_blank = true;
    }
  CHECK(saw_blank);
  CHECK(desirable_csv(wide).find(",-,") != std::string::npos);
}

TEST_CASE("suite artifacts are deterministic") {
  const SuiteResult s = run_verify_identities();
  CHECK(s.pass);
  RunConfig cfg;
  const auto dir = std::filesystem::temp_directory_path() / "pptri_unit_artifacts";
  std::filesystem::remove_all(dir);
  cfg.results_dir = (dir / "one").string();
  const auto first = write_verify_artifacts(s, cfg);
  REQUIRE(first.size() == 2);
  cfg.results_dir = (dir / "two").string();
  const auto second = write_verify_artifacts(s, cfg);
  REQUIRE(second.size() == 2);
  CHECK(slurp(first[0]) == slurp(second[0]));
  CHECK(slurp(first[1]) == slurp(second[1]));
  const std::string report = slurp(first[0]);
  CHECK(report.find("\"schema\": \"verify-report/v1\"") != std::string::npos);
  CHECK(report.find("\"suite\": \"verify_identities\"") != std::string::npos);
  CHECK(report.find("\"pass\": true") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("suite runners aggregate pass flags") {
  const SuiteResult lemmas = run_verify_lemmas();
  CHECK(lemmas.pass);
  CHECK(lemmas.suite == "verify_lemmas");
  CHECK(lemmas.checks.size() == 13);
  CHECK(!lemmas.fields_touched.empty());
  // Reports embed every touched modulus.
  RunConfig cfg;
  const std::string json = suite_report_json(lemmas, cfg);
  CHECK(json.find("\"modulus_enc\"") != std::string::npos);
  CHECK(json == suite_report_json(lemmas, cfg));
}
