#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pptri/error.hpp"
#include "pptri/gf.hpp"
#include "pptri/gnq.hpp"
#include "pptri/symbolic.hpp"
#include "pptri/trinomial.hpp"
#include "pptri/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct FieldArgs {
  std::uint64_t p = 0;
  std::uint32_t m = 1;
  std::uint64_t max_order = pptri::kDefaultMaxOrder;
};

void add_field_options(CLI::App* cmd, FieldArgs& f) {
  cmd->add_option("--p", f.p, "characteristic of the base field (prime)")
      ->required();
  cmd->add_option("--m", f.m, "degree of the base field over the prime field")
      ->capture_default_str();
  cmd->add_option("--max-order", f.max_order,
                  "upper bound on the field orders that may be built")
      ->capture_default_str();
}

pptri::Iv2FirstLine parse_iv2_first(const std::string& s) {
  return s == "literal_a2" ? pptri::Iv2FirstLine::LiteralA2
                           : pptri::Iv2FirstLine::SumA1;
}

pptri::Iv2SecondLine parse_iv2_second(const std::string& s) {
  return s == "congruence" ? pptri::Iv2SecondLine::Congruence
                           : pptri::Iv2SecondLine::NonzeroSquare;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string suite_report_csv(const pptri::SuiteResult& s) {
  std::string out = "# verify-report/v1 suite=" + s.suite +
                    " pass=" + (s.pass ? std::string("1") : std::string("0")) + "\n";
  for (const auto& [p, m] : s.fields_touched) {
    auto F = pptri::FieldCtx::build(p, m);
    out += "# field p=" + std::to_string(p) + " m=" + std::to_string(m) +
           " q=" + std::to_string(F->q()) +
           " modulus_enc=" + std::to_string(F->modulus_enc()) + "\n";
  }
  if (s.iv2)
    out += "# iv2 selected=" + (s.iv2->unique_zero ? s.iv2->selected : "-") + "\n";
  out += "name,pass,checked,mismatches,detail\n";
  for (const pptri::CheckResult& c : s.checks)
    out += c.name + "," + (c.pass ? "1" : "0") + "," + std::to_string(c.checked) +
           "," + std::to_string(c.mismatches) + "," + csv_quote(c.detail) + "\n";
  return out;
}

void print_suite_summary(const pptri::SuiteResult& s) {
  std::size_t passed = 0;
  for (const pptri::CheckResult& c : s.checks) {
    if (c.pass) {
      ++passed;
      std::cout << c.name << ": PASS (" << c.checked << " checks)\n";
    } else {
      std::cout << c.name << ": FAIL (" << c.mismatches << " of " << c.checked
                << " mismatched; first: " << c.detail << ")\n";
    }
  }
  if (s.iv2) {
    if (s.iv2->unique_zero)
      std::cout << "contested clause reading: " << s.iv2->selected
                << " (unique clean reading)\n";
    else
      std::cout << "contested clause reading: unresolved\n";
  }
  std::cout << passed << "/" << s.checks.size() << " PASS\n";
}

std::vector<std::string> write_suite_artifacts(const pptri::SuiteResult& s,
                                               const pptri::RunConfig& cfg) {
  if (cfg.format == "csv") {
    std::filesystem::create_directories(cfg.results_dir);
    const auto base = std::filesystem::path(cfg.results_dir);
    const std::string report = (base / (s.suite + ".csv")).string();
    const std::string cache = (base / "modulus_cache.txt").string();
    pptri::write_text_file(report, suite_report_csv(s));
    pptri::write_text_file(cache, pptri::modulus_cache_text(s.fields_touched));
    return {report, cache};
  }
  return pptri::write_verify_artifacts(s, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation trinomials and desirable power maps over F_{q^2}"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "configuration file; keys mirror the flags, flags win");
  int exit_code = 0;

  // ---- field info ----------------------------------------------------------
  auto* field = app.add_subcommand("field", "inspect field construction");
  field->require_subcommand(1);
  auto* finfo = field->add_subcommand("info", "print modulus and tower data");
  auto fi = std::make_shared<FieldArgs>();
  add_field_options(finfo, *fi);
  finfo->callback([fi]() {
    auto F = pptri::FieldCtx::build(fi->p, fi->m, fi->max_order);
    ordered_json j;
    j["schema"] = "field-info/v1";
    j["p"] = F->p();
    j["m"] = F->m();
    j["q"] = F->q();
    j["modulus"] = F->modulus();
    j["modulus_enc"] = F->modulus_enc();
    try {
      auto ext = pptri::QuadExtCtx::build(F, fi->max_order);
      ordered_json t;
      t["order"] = ext->order();
      t["d"] = ext->d();
      t["artin_schreier"] = ext->artin_schreier();
      j["quadratic_extension"] = std::move(t);
    } catch (const pptri::Error&) {
      j["quadratic_extension"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  });

  // ---- pp check / pp enumerate --------------------------------------------
  auto* pp = app.add_subcommand("pp", "permutation trinomial queries");
  pp->require_subcommand(1);

  struct CheckArgs : FieldArgs {
    std::uint32_t a = 0, b = 0, c = 1;
  };
  auto ca = std::make_shared<CheckArgs>();
  auto* pcheck = pp->add_subcommand(
      "check", "classify f = a x + b x^q + c x^{2q-1} on F_{q^2}");
  add_field_options(pcheck, *ca);
  pcheck->add_option("--a", ca->a, "encoding of the coefficient of x")->required();
  pcheck->add_option("--b", ca->b, "encoding of the coefficient of x^q")->required();
  pcheck->add_option("--c", ca->c, "encoding of the coefficient of x^{2q-1}")
      ->capture_default_str();
  pcheck->callback([ca, &exit_code]() {
    auto F = pptri::FieldCtx::build(ca->p, ca->m, ca->max_order);
    auto ext = pptri::QuadExtCtx::build(F, ca->max_order);
    if (ca->a >= F->q() || ca->b >= F->q() || ca->c >= F->q())
      pptri::fail(pptri::ErrorCode::InvalidArgument,
                  "coefficient encoding out of range");
    const auto norm = pptri::normalize_triple(*F, ca->a, ca->b, ca->c);
    const auto brute = pptri::is_pp_bruteforce(*ext, {ca->a, ca->b, ca->c});
    pptri::ClauseVerdict clause;
    if (norm[2] == 1)
      clause = F->p() == 2 ? pptri::theorem_B_clauses(*F, norm[0], norm[1])
                           : pptri::theorem_A_clauses(*F, norm[0], norm[1]);
    ordered_json j;
    j["schema"] = "pp-check/v1";
    j["p"] = F->p();
    j["m"] = F->m();
    j["q"] = F->q();
    j["modulus_enc"] = F->modulus_enc();
    j["a"] = ca->a;
    j["b"] = ca->b;
    j["c"] = ca->c;
    j["normalized"] = {norm[0], norm[1], norm[2]};
    j["is_pp"] = brute.is_pp;
    j["predicate"] = clause.clause;
    if (brute.witness)
      j["witness"] = {brute.witness->first, brute.witness->second};
    std::cout << j.dump(2) << "\n";
    if (norm[2] == 1 && clause.holds != brute.is_pp) exit_code = 1;
  });

  struct EnumArgs : FieldArgs {
    std::string format = "json";
  };
  auto ea = std::make_shared<EnumArgs>();
  auto* penum = pp->add_subcommand(
      "enumerate", "list all normalized permutation triples [a:b:c]");
  add_field_options(penum, *ea);
  penum->add_option("--format", ea->format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  penum->callback([ea]() {
    auto F = pptri::FieldCtx::build(ea->p, ea->m, ea->max_order);
    auto ext = pptri::QuadExtCtx::build(F, ea->max_order);
    const auto xs = pptri::compute_X_set(*ext);
    std::cout << (ea->format == "csv" ? pptri::x_set_csv(*ext, xs)
                                      : pptri::x_set_json(*ext, xs));
  });

  // ---- gnq coeffs / gnq desirable ------------------------------------------
  auto* gnq = app.add_subcommand("gnq", "the g_{n,q} polynomial family");
  gnq->require_subcommand(1);

  struct CoeffArgs : FieldArgs {
    std::uint64_t n = 0;
    std::uint64_t max_coeffs = pptri::kDefaultMaxCoeffs;
  };
  auto ga = std::make_shared<CoeffArgs>();
  auto* gcoeffs = gnq->add_subcommand("coeffs", "coefficient vector of g_{n,q}");
  add_field_options(gcoeffs, *ga);
  gcoeffs->add_option("--n", ga->n, "index n")->required();
  gcoeffs->add_option("--max-coeffs", ga->max_coeffs,
                      "bound on the stored coefficient count")
      ->capture_default_str();
  gcoeffs->callback([ga]() {
    auto F = pptri::FieldCtx::build(ga->p, ga->m, ga->max_order);
    const pptri::DensePoly g = pptri::gnq_coeffs(*F, ga->n, ga->max_coeffs);
    ordered_json j;
    j["schema"] = "gnq-coeffs/v1";
    j["p"] = F->p();
    j["m"] = F->m();
    j["q"] = F->q();
    j["modulus_enc"] = F->modulus_enc();
    j["n"] = ga->n;
    j["degree"] = g.degree();
    j["coeffs"] = g.coeffs;
    std::cout << j.dump(2) << "\n";
  });

  struct DesArgs : FieldArgs {
    std::uint32_t alpha_max = 0;
    std::uint32_t e = 2;
    std::string format = "csv";
    std::string results_dir = "results";
    std::string iv2_first = "sum_a1";
    std::string iv2_second = "nonzero_square";
  };
  auto da = std::make_shared<DesArgs>();
  auto* gdes = gnq->add_subcommand(
      "desirable", "tabulate desirability of n = q^alpha - q^beta - 1");
  add_field_options(gdes, *da);
  gdes->add_option("--alpha-max", da->alpha_max, "largest alpha to include")
      ->required();
  gdes->add_option("--e", da->e, "extension degree the map acts on")
      ->capture_default_str();
  gdes->add_option("--format", da->format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  gdes->add_option("--results-dir", da->results_dir, "artifact directory")
      ->envname(pptri::kResultsDirEnvVar)
      ->capture_default_str();
  gdes->add_option("--iv2-first", da->iv2_first,
                   "reading of the first contested line of clause (iv.2)")
      ->check(CLI::IsMember({"sum_a1", "literal_a2"}))
      ->capture_default_str();
  gdes->add_option("--iv2-second", da->iv2_second,
                   "reading of the second contested line of clause (iv.2)")
      ->check(CLI::IsMember({"nonzero_square", "congruence"}))
      ->capture_default_str();
  gdes->callback([da]() {
    pptri::ThmDOptions opts;
    opts.iv2_first = parse_iv2_first(da->iv2_first);
    opts.iv2_second = parse_iv2_second(da->iv2_second);
    const pptri::DesirableTable table = pptri::build_desirable_table(
        da->p, da->m, da->e, da->alpha_max, opts, da->max_order);
    const std::string body = da->format == "json" ? pptri::desirable_json(table)
                                                  : pptri::desirable_csv(table);
    std::cout << body;
    std::filesystem::create_directories(da->results_dir);
    const std::string stem = "desirable_p" + std::to_string(da->p) + "_m" +
                             std::to_string(da->m) + "_e" + std::to_string(da->e) +
                             "_amax" + std::to_string(da->alpha_max);
    const auto base = std::filesystem::path(da->results_dir);
    const std::string table_path = (base / (stem + "." + da->format)).string();
    pptri::write_text_file(table_path, body);
    ordered_json man;
    man["schema"] = "manifest/v1";
    man["artifact"] = stem + "." + da->format;
    man["p"] = table.p;
    man["m"] = table.m;
    man["q"] = table.q;
    man["e"] = table.e;
    man["alpha_max"] = da->alpha_max;
    man["modulus_enc"] = table.modulus_enc;
    man["iv2"] = da->iv2_first + "/" + da->iv2_second;
    man["format"] = da->format;
    const std::string man_path = (base / (stem + ".manifest.json")).string();
    pptri::write_text_file(man_path, man.dump(2) + "\n");
    std::cerr << "wrote " << table_path << "\n" << "wrote " << man_path << "\n";
  });

  // ---- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->require_subcommand(1);
  struct VerifyArgs {
    pptri::RunConfig cfg;
    bool small = false;
    std::string iv2_first = "sum_a1";
    std::string iv2_second = "nonzero_square";
  };
  auto va = std::make_shared<VerifyArgs>();
  auto add_verify_options = [va](CLI::App* cmd) {
    cmd->add_option("--results-dir", va->cfg.results_dir, "artifact directory")
        ->envname(pptri::kResultsDirEnvVar)
        ->capture_default_str();
    cmd->add_option("--format", va->cfg.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--max-order", va->cfg.max_order,
                    "upper bound on the field orders that may be built")
        ->capture_default_str();
    cmd->add_option("--parallelism", va->cfg.parallelism,
                    "worker count (checks currently run serialized)")
        ->capture_default_str();
    cmd->add_option("--iv2-first", va->iv2_first,
                    "reading of the first contested line of clause (iv.2)")
        ->check(CLI::IsMember({"sum_a1", "literal_a2"}))
        ->capture_default_str();
    cmd->add_option("--iv2-second", va->iv2_second,
                    "reading of the second contested line of clause (iv.2)")
        ->check(CLI::IsMember({"nonzero_square", "congruence"}))
        ->capture_default_str();
  };
  auto finish_suite = [va, &exit_code](const pptri::SuiteResult& s) {
    va->cfg.iv2_first = parse_iv2_first(va->iv2_first);
    va->cfg.iv2_second = parse_iv2_second(va->iv2_second);
    const auto paths = write_suite_artifacts(s, va->cfg);
    for (const std::string& p : paths) std::cout << "wrote " << p << "\n";
    if (!s.pass) exit_code = 1;
  };

  auto* vlem = verify->add_subcommand("lemmas", "binomial-sum closed forms");
  add_verify_options(vlem);
  vlem->callback([va, finish_suite]() {
    const pptri::SuiteResult s = pptri::run_verify_lemmas();
    print_suite_summary(s);
    finish_suite(s);
  });

  auto* vher = verify->add_subcommand("hermite", "power-sum expansions and endpoints");
  add_verify_options(vher);
  vher->callback([va, finish_suite]() {
    const pptri::SuiteResult s = pptri::run_verify_hermite();
    print_suite_summary(s);
    finish_suite(s);
  });

  auto* vid = verify->add_subcommand("identities", "symbolic polynomial identities");
  add_verify_options(vid);
  vid->callback([va, finish_suite]() {
    const auto reports = pptri::verify_all_identities();
    std::size_t ok = 0;
    for (const pptri::IdentityReport& r : reports) {
      std::cout << r.name << (r.pass ? " PASS" : " FAIL") << "\n";
      if (r.pass) ++ok;
    }
    std::cout << ok << "/" << reports.size() << " PASS\n";
    finish_suite(pptri::run_verify_identities());
  });

  auto* vall = verify->add_subcommand("all", "every suite plus the classification sweeps");
  add_verify_options(vall);
  vall->add_flag("--small", va->small, "restrict the sweeps to the small field list");
  vall->callback([va, finish_suite]() {
    const pptri::SuiteResult s = pptri::run_verify_all(va->small);
    print_suite_summary(s);
    finish_suite(s);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const pptri::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
