// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "seqreg/report.hpp"

using namespace seqreg;

namespace {

struct Result {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

const DetailValue* detail(const PropertyVerdict& v, const std::string& key) {
  for (const auto& [k, val] : v.details) {
    if (k == key) return &val;
  }
  return nullptr;
}

std::int64_t int_detail(const PropertyVerdict& v, const std::string& key) {
  const DetailValue* d = detail(v, key);
  return d && std::holds_alternative<std::int64_t>(*d) ? std::get<std::int64_t>(*d) : -1;
}

std::size_t list_detail(const PropertyVerdict& v, const std::string& key) {
  const DetailValue* d = detail(v, key);
  return d && std::holds_alternative<std::vector<std::string>>(*d) ? std::get<std::vector<std::string>>(*d).size() : 0;
}

std::string counts(const CorpusSummary& s) {
  return std::to_string(s.passed) + "/" + std::to_string(s.applicable) + " pass, " +
         std::to_string(s.counterexamples) + " counterexamples, " + std::to_string(s.budget) + " budget, " +
         std::to_string(s.inconclusive) + " inconclusive";
}

CorpusSummary corpus(Property p, std::size_t count, std::uint64_t seed = 7) {
  CorpusOptions o;
  o.count = count;
  o.seed = seed;
  o.keep_all = true;
  return run_corpus(p, o);
}

// Every applicable instance passes exactly.
void require_all_pass(Result& r, const CorpusSummary& s, std::size_t count) {
  r.require(s.applicable >= count, "only " + std::to_string(s.applicable) + " applicable instances");
  r.require(s.counterexamples == 0 && s.budget == 0 && s.inconclusive == 0, "not every instance passed");
  r.require(s.passed == s.applicable, "pass count differs from applicable count");
  for (const auto& f : s.failures) r.require(false, "fails: " + reproduction_command(s.profile, f.seed));
}

const char* kKoszulExample = "vars x y\nquotient [x*y]\nkoszul [x]\n";

Result koszul_example() {
  Result r;
  for (const char* field : {"field 32003\n", "field Q\n"}) {
    TowerDocument doc = parse_tower(std::string(field) + kKoszulExample);
    const auto t0 = std::chrono::steady_clock::now();
    TowerReport rep = run_report(doc, {});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto& g = rep.regularity;
    const std::string tag = doc.spec.field().is_rational() ? " over Q" : " over F_32003";
    r.require(g.sequence_regular.value, "not sequence-regular" + tag);
    r.require(g.amplitude.amp() == 1, "amp != 1" + tag);
    r.require(g.h0_is_regular_local && g.local_dim == 1, "H^0 not regular of dimension 1" + tag);
    r.require(g.kappa.has_value(), "no kappa" + tag);
    if (g.kappa) {
      const auto& steps = g.kappa->spec.steps();
      const Poly y = Poly::variable(doc.spec.field(), 2, 1);
      bool is_k_of_y = steps.size() == 2 && std::holds_alternative<KoszulStep>(steps[1]) &&
                       std::get<KoszulStep>(steps[1]).elements == std::vector<Poly>{y};
      r.require(is_k_of_y, "kappa is not K(A; y)" + tag);
      r.require(g.kappa->amplitude.amp() == 1 && g.kappa->all_checks_pass(), "kappa checks" + tag);
    }
    r.require(secs < 5.0, "took " + std::to_string(secs) + " s" + tag);
  }
  return r;
}

Result trivext_counterexample() {
  Result r;
  TowerDocument doc = parse_tower("field 32003\nvars x\nquotient []\ntrivext 2 [x]\n");
  const auto t0 = std::chrono::steady_clock::now();
  TowerReport rep = run_report(doc, {});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto& g = rep.regularity;
  r.require(g.h0_is_regular_local && g.local_dim == 1, "H^0 not regular of dimension 1");
  r.require(g.seq_depth.depth == 0 && g.seq_depth.certified, "seq_depth is not exactly 0");
  r.require(!g.is_local_cm, "reported local-CM");
  r.require(!g.sequence_regular.value, "reported sequence-regular");
  r.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  return r;
}

Result main_corpus() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  CorpusSummary s = corpus(Property::main, 100);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.require(s.applicable >= 100, "fewer than 100 instances");
  r.require(s.counterexamples == 0 && s.budget == 0, "counterexamples or budget failures");
  std::size_t certified = 0;
  for (const auto& i : s.instances) {
    if (!i.verdict.certified) continue;
    ++certified;
    r.require(i.verdict.outcome == Outcome::pass, "certified instance fails: " + reproduction_command(s.profile, i.seed));
  }
  r.require(secs < 600.0, "took " + std::to_string(secs) + " s");
  r.note += (r.note.empty() ? "" : "; ") + counts(s) + ", " + std::to_string(certified) + " certified";
  return r;
}

Result kos_amp_corpus() {
  Result r;
  CorpusSummary s = corpus(Property::kos_amp, 100);
  require_all_pass(r, s, 100);
  for (const auto& i : s.instances) {
    if (i.verdict.outcome != Outcome::pass) continue;
    r.require(int_detail(i.verdict, "predicted") == int_detail(i.verdict, "computed"), "inexact instance");
  }
  r.note += (r.note.empty() ? "" : "; ") + counts(s);
  return r;
}

Result sop_double_cm() {
  Result r;
  CorpusSummary a = corpus(Property::sop, 100);
  CorpusSummary b = corpus(Property::double_cm, 100);
  require_all_pass(r, a, 100);
  require_all_pass(r, b, 100);
  r.note += (r.note.empty() ? "" : "; ") + std::string("sop ") + counts(a) + "; double-cm " + counts(b);
  return r;
}

Result gl_corpus() {
  Result r;
  CorpusSummary s = corpus(Property::gl, 20);
  require_all_pass(r, s, 20);
  std::size_t kappa_pairs = 0;
  for (const auto& i : s.instances) {
    if (i.verdict.outcome != Outcome::pass) continue;
    r.require(int_detail(i.verdict, "matrices") >= 50, "fewer than 50 matrices");
    r.require(int_detail(i.verdict, "agreeing") == int_detail(i.verdict, "matrices"), "fingerprints differ");
    if (detail(i.verdict, "residue_fields_agree")) ++kappa_pairs;
  }
  r.require(kappa_pairs > 0, "no sequence-regular instance compared two residue DG-fields");
  r.note += (r.note.empty() ? "" : "; ") + counts(s) + ", " + std::to_string(kappa_pairs) + " kappa comparisons";
  return r;
}

Result redka_corpus() {
  Result r;
  CorpusSummary s = corpus(Property::redka, 100);
  require_all_pass(r, s, 100);
  for (const auto& i : s.instances) {
    if (i.verdict.outcome != Outcome::pass) continue;
    r.require(int_detail(i.verdict, "flat_dimension") == int_detail(i.verdict, "local_dim"), "flat dimension");
  }
  r.note += (r.note.empty() ? "" : "; ") + counts(s);
  return r;
}

Result serre_corpus() {
  Result r;
  CorpusSummary s = corpus(Property::serre_points, 30);
  require_all_pass(r, s, 30);
  std::size_t points = 0;
  for (const auto& i : s.instances) {
    if (i.verdict.outcome != Outcome::pass) continue;
    r.require(list_detail(i.verdict, "points") >= 10, "fewer than 10 points");
    r.require(list_detail(i.verdict, "not_sequence_regular") == 0, "a sampled point is not sequence-regular");
    points += list_detail(i.verdict, "points");
  }
  r.note += (r.note.empty() ? "" : "; ") + counts(s) + ", " + std::to_string(points) + " points";
  return r;
}

Result engine_corpus() {
  Result r;
  CorpusSummary s = corpus(Property::engine, 100);
  require_all_pass(r, s, 100);
  r.note += (r.note.empty() ? "" : "; ") + counts(s);
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"Koszul example over F_32003 and Q", koszul_example},
      {"trivial extension by the residue field", trivext_counterexample},
      {"main equivalence on 100 towers", main_corpus},
      {"Koszul amplitude formula", kos_amp_corpus},
      {"systems of parameters and double CM", sop_double_cm},
      {"GL invariance and residue DG-field uniqueness", gl_corpus},
      {"reduction to the residue field and flat dimension", redka_corpus},
      {"sequence-regularity at sampled points", serre_corpus},
      {"engine self-consistency", engine_corpus},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r.pass = false;
      r.note = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu: %s  %s (%.2f s)%s%s\n", k + 1, r.pass ? "PASS" : "FAIL", criteria[k].first.c_str(), secs,
                r.note.empty() ? "" : ": ", r.note.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
