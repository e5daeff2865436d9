// Acceptance gate: one line per criterion, exit 0 only if every one passes.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pptri/symbolic.hpp"
#include "pptri/verify.hpp"

using namespace pptri;

namespace {

using FieldList = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

int g_index = 0;
int g_pass_count = 0;
bool g_all_pass = true;

void report(const std::string& name, bool pass, const std::string& note = "") {
  ++g_index;
  if (pass) ++g_pass_count;
  g_all_pass = g_all_pass && pass;
  std::string pad;
  if (name.size() < 60) pad = std::string(60 - name.size(), '.');
  std::cout << "[" << (g_index < 10 ? " " : "") << g_index << "] " << name << " "
            << pad << " " << (pass ? "PASS" : "FAIL");
  if (!note.empty()) std::cout << "  (" << note << ")";
  std::cout << std::endl;
}

bool runner_clean(const std::vector<CheckResult>& checks, std::string& note) {
  for (const CheckResult& c : checks)
    if (!c.pass) {
      note = c.name + ": " + std::to_string(c.mismatches) + " mismatches, first " +
             c.detail;
      return false;
    }
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<unreadable:" + path + ">";
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

int main() {
  // 1. Odd-characteristic classification vs exhaustive permutation testing.
  {
    const FieldList fields{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1},
                           {13, 1}, {5, 2}, {3, 3}, {7, 2}};
    std::vector<CheckResult> checks;
    for (const auto& [p, m] : fields) checks.push_back(check_theorem_A(p, m));
    std::string note;
    report("theorem A classification matches brute force (odd q)",
           runner_clean(checks, note), note);
  }

  // 2. Even-characteristic classification plus the X-set parametrization.
  {
    std::vector<CheckResult> checks;
    for (std::uint32_t m = 1; m <= 5; ++m) checks.push_back(check_theorem_B(m));
    for (std::uint32_t m = 1; m <= 4; ++m)
      checks.push_back(check_x_set_parametrization(m));
    std::string note;
    report("theorem B classification and X-set parametrization (even q)",
           runner_clean(checks, note), note);
  }

  // 3. Combinatorial power-sum expansion and the closed-form endpoints.
  {
    std::vector<CheckResult> checks;
    for (const auto& [p, m] : FieldList{{3, 1}, {5, 1}, {7, 1}, {3, 2}})
      checks.push_back(check_power_sum_expansion(p, m));
    for (const auto& [p, m] :
         FieldList{{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {2, 3}, {2, 4}})
      checks.push_back(check_power_sum_endpoints(p, m));
    std::string note;
    report("power-sum expansion and closed-form endpoints",
           runner_clean(checks, note), note);
  }

  // 4. The six binomial lemma sums against their closed forms.
  {
    const FieldList fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2},
                           {11, 1}, {13, 1}, {2, 4}, {5, 2}, {3, 3}, {2, 5}};
    std::vector<CheckResult> checks;
    for (const auto& [p, m] : fields) checks.push_back(check_lemma_sums(p, m));
    std::string note;
    report("binomial lemma sums match closed forms", runner_clean(checks, note),
           note);
  }

  // 5. Coefficient, recurrence, and functional-equation routes for g_{n,q}.
  {
    std::vector<CheckResult> checks;
    for (const auto& [p, m] :
         FieldList{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}})
      checks.push_back(check_gnq_consistency(p, m, 200));
    std::string note;
    report("g_{n,q} coefficient, recurrence, and functional routes agree",
           runner_clean(checks, note), note);
  }

  // 6. Even-q desirability classification vs brute force.
  {
    std::vector<CheckResult> checks;
    for (std::uint32_t m = 1; m <= 4; ++m) checks.push_back(check_theorem_C(m));
    std::string note;
    report("theorem C desirability classification (even q)",
           runner_clean(checks, note), note);
  }

  // 7. Odd-q desirability classification; the contested clause must have
  //    exactly one clean reading, and the report names it.
  {
    const ThmDSweep sweep = sweep_theorem_D({{3, 1}, {5, 1}, {7, 1}, {3, 2}});
    std::string note;
    bool pass = runner_clean(sweep.per_field, note);
    if (pass && !sweep.resolution.unique_zero) {
      pass = false;
      std::size_t clean = 0;
      for (const auto& r : sweep.resolution.readings)
        if (r.mismatches == 0) ++clean;
      note = std::to_string(clean) + " clean readings instead of 1";
    }
    if (pass) note = "reading: " + sweep.resolution.selected;
    report("theorem D desirability classification and clause resolution", pass,
           note);
  }

  // 8. The inversion identity pointwise over the quadratic extension.
  {
    std::vector<CheckResult> checks;
    for (const auto& [p, m] : FieldList{{3, 1}, {5, 1}, {7, 1}, {3, 2}})
      checks.push_back(check_inversion_identity(p, m));
    std::string note;
    report("inversion identity holds pointwise", runner_clean(checks, note), note);
  }

  // 9. All seven symbolic identities reduce to zero; the discriminant
  //    factorization needs no side relation.
  {
    const CheckResult ids = check_identities();
    const IdentityReport factored =
        verify_identity(IdentityId::ResolventDiscFactored);
    bool pass = ids.pass && factored.pass;
    std::string note = pass ? "" : ids.detail;
    report("symbolic identities reduce to zero", pass, note);
  }

  // 10. Two identical verification runs produce byte-identical artifacts.
  {
    const auto dir = std::filesystem::temp_directory_path() / "pptri_acceptance";
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
    RunConfig cfg;
    bool pass = true;
    std::string note;
    std::vector<std::string> first, second;
    const SuiteResult run1 = run_verify_all(true);
    cfg.results_dir = (dir / "run1").string();
    first = write_verify_artifacts(run1, cfg);
    const SuiteResult run2 = run_verify_all(true);
    cfg.results_dir = (dir / "run2").string();
    second = write_verify_artifacts(run2, cfg);
    if (!run1.pass || !run2.pass) {
      pass = false;
      note = "verification suite failed";
      for (const CheckResult& c : run1.checks)
        if (!c.pass) {
          note = c.name + ": " + c.detail;
          break;
        }
    } else if (first.size() != second.size()) {
      pass = false;
      note = "artifact count differs";
    } else {
      for (std::size_t i = 0; i < first.size(); ++i)
        if (slurp(first[i]) != slurp(second[i])) {
          pass = false;
          note = std::filesystem::path(first[i]).filename().string() + " differs";
          break;
        }
    }
    std::filesystem::remove_all(dir, ec);
    report("verification artifacts are byte-identical across runs", pass, note);
  }

  std::cout << "ACCEPTANCE: " << g_pass_count << "/" << g_index
            << (g_all_pass ? " PASS" : " FAIL") << std::endl;
  return g_all_pass ? 0 : 1;
}
