#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "seqreg/errors.hpp"
#include "seqreg/report.hpp"

using namespace seqreg;

namespace {

constexpr int kExitDiagnostic = 2;

struct Common {
  std::uint64_t seed = 0;
  int trials = 32;
  bool json = false;
  bool timing = false;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_report(const std::string& path, const Common& c) {
  Stopwatch sw;
  TowerDocument doc = parse_tower_file(path);
  TowerReport r = run_report(doc, RegularityOptions{c.trials, c.seed});
  if (c.timing) r.seconds = sw.seconds();
  std::cout << (c.json ? render_json(r) : render_text(r));
  return exit_code(r.main.outcome);
}

int cmd_verify(const std::string& prop_name, const std::string& path, bool random, const Common& c) {
  auto prop = parse_property(prop_name);
  if (!prop) {
    std::cerr << "error: unknown property '" << prop_name << "'\n";
    return kExitDiagnostic;
  }
  if (random == !path.empty()) {
    std::cerr << "error: give either a tower file or --random\n";
    return kExitDiagnostic;
  }
  Stopwatch sw;
  VerifyReport r;
  r.seed = c.seed;
  r.trials = c.trials;
  if (random) {
    r.doc = generate_instance(*prop, c.seed);
    r.reproduction = reproduction_command(*prop, c.seed);
  } else {
    r.doc = parse_tower_file(path);
  }
  VerifyOptions vo;
  vo.regularity = RegularityOptions{c.trials, c.seed};
  r.verdict = run_property(*prop, r.doc, vo);
  if (c.timing) r.seconds = sw.seconds();
  std::cout << (c.json ? render_json(r) : render_text(r));
  return exit_code(r.verdict.outcome);
}

int cmd_corpus(const std::string& prop_name, std::size_t count, const Common& c) {
  auto prop = parse_property(prop_name);
  if (!prop) {
    std::cerr << "error: unknown profile '" << prop_name << "'\n";
    return kExitDiagnostic;
  }
  Stopwatch sw;
  CorpusOptions opts;
  opts.count = count;
  opts.seed = c.seed;
  opts.trials = c.trials;
  CorpusSummary s = run_corpus(*prop, opts);
  std::optional<double> secs;
  if (c.timing) secs = sw.seconds();
  if (c.json) {
    std::cout << render_json(s, secs);
  } else {
    std::cout << render_text(s);
    if (secs) std::cout << "time: " << *secs << " s\n";
  }
  if (s.counterexamples > 0) return 1;
  return s.clean() ? 0 : kExitDiagnostic;
}

int cmd_kappa(const std::string& path, const Common& c) {
  TowerDocument doc = parse_tower_file(path);
  DGRingRealization a = realize(doc.spec.localized());
  ResidueDGField k = residue_dg_field(a);
  std::cout << (c.json ? render_kappa_json(doc, k) : render_kappa_text(doc, k));
  return k.all_checks_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of commutative DG-rings given as Koszul and trivial-extension towers"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_trials) {
    sub->add_option("--seed", common.seed, "random seed");
    if (with_trials) sub->add_option("--trials", common.trials, "random trials per search stage")->check(CLI::PositiveNumber);
    sub->add_flag("--json", common.json, "emit JSON instead of text");
    sub->add_flag("--timing", common.timing, "include wall-clock time");
  };

  std::string file, prop;
  bool random = false;
  std::size_t count = 0;

  CLI::App* report = app.add_subcommand("report", "regularity report for a tower");
  report->add_option("file", file, "tower file")->required();
  add_common(report, true);

  CLI::App* verify = app.add_subcommand("verify", "check one property on a tower");
  verify->add_option("property", prop, "kos-amp, sop, double-cm, gl, main, derived-quotient, redka, nakayama, "
                                       "serre-points or engine")
      ->required();
  verify->add_option("file", file, "tower file");
  verify->add_flag("--random", random, "use the generated instance for --seed");
  add_common(verify, true);

  CLI::App* corpus = app.add_subcommand("corpus", "run a property over a seeded random corpus");
  corpus->add_option("profile", prop, "property name")->required();
  corpus->add_option("--count", count, "applicable instances wanted (default depends on the profile)");
  add_common(corpus, true);

  CLI::App* kappa = app.add_subcommand("kappa", "residue DG-field of a sequence-regular tower");
  kappa->add_option("file", file, "tower file")->required();
  add_common(kappa, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitDiagnostic;
  }

  try {
    if (*report) return cmd_report(file, common);
    if (*verify) return cmd_verify(prop, file, random, common);
    if (*corpus) return cmd_corpus(prop, count, common);
    if (*kappa) return cmd_kappa(file, common);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitDiagnostic;
}
