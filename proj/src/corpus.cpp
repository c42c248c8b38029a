#include "seqreg/corpus.hpp"

#include <random>
#include <thread>

#include "seqreg/errors.hpp"
#include "seqreg/linalg.hpp"

namespace seqreg {

namespace {

class TowerGenerator {
 public:
  TowerGenerator(std::uint64_t seed, int nvars)
      : rng_(seed), field_(Field::prime(kCorpusPrime)), n_(nvars) {
    static const char* names[] = {"x", "y", "z"};
    for (int i = 0; i < n_; ++i) vars_.emplace_back(names[i]);
  }

  std::mt19937_64& rng() { return rng_; }
  int n() const { return n_; }

  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  FieldElem coeff() {
    return field_.from_int(std::uniform_int_distribution<std::int64_t>(1, kCorpusPrime - 1)(rng_));
  }
  Poly term(int degree) {
    std::vector<int> e(static_cast<std::size_t>(n_), 0);
    for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(uniform(0, n_ - 1))];
    return Poly::monomial(field_, n_, Monomial(e), coeff());
  }
  Poly variable() { return Poly::variable(field_, n_, uniform(0, n_ - 1)); }
  Poly one() { return Poly::constant(field_, n_, 1); }

  // Sum of `terms` monomials of degrees in [1, max_deg].
  Poly element(int max_deg, int terms) {
    while (true) {
      Poly p(field_, n_);
      for (int k = 0; k < terms; ++k) p += term(uniform(1, max_deg));
      if (!p.is_zero()) return p;
    }
  }
  Poly homogeneous(int degree, int terms) {
    while (true) {
      Poly p(field_, n_);
      for (int k = 0; k < terms; ++k) p += term(degree);
      if (!p.is_zero()) return p;
    }
  }
  Poly linear() {
    while (true) {
      Poly p(field_, n_);
      for (int i = 0; i < n_; ++i) {
        if (chance(0.7)) p += Poly::variable(field_, n_, i).scaled(coeff());
      }
      if (!p.is_zero()) return p;
    }
  }
  // c linear forms with independent linear parts.
  std::vector<Poly> independent_linear(int c) {
    while (true) {
      std::vector<Poly> out;
      for (int i = 0; i < c; ++i) out.push_back(linear());
      DenseMatrix m(field_, out.size(), static_cast<std::size_t>(n_));
      for (std::size_t i = 0; i < out.size(); ++i) {
        auto coeffs = linear_coefficients(out[i]);
        for (int j = 0; j < n_; ++j) m.at(i, static_cast<std::size_t>(j)) = coeffs[static_cast<std::size_t>(j)];
      }
      if (static_cast<int>(m.rank()) == c) return out;
    }
  }

  DGRingSpec spec(std::vector<Poly> base) const { return DGRingSpec(field_, vars_, std::move(base)); }
  Ideal ideal(const std::vector<Poly>& gens) const { return Ideal(field_, n_, gens); }

 private:
  std::mt19937_64 rng_;
  Field field_;
  int n_;
  std::vector<std::string> vars_;
};

struct Family {
  DGRingSpec spec;
  // Factors of product generators; natural candidates for zero divisors.
  std::vector<Poly> factors;
};

constexpr int kGlMaxKoszul = 5;

int pick_nvars(std::mt19937_64& rng, int min_vars) {
  std::discrete_distribution<int> d({0.0, 1.0, 3.0, 3.0});
  int n = 0;
  while (n < min_vars) n = d(rng);
  return n;
}

Poly product_or_element(TowerGenerator& g, std::vector<Poly>& factors) {
  if (g.chance(0.45)) {
    int d1 = g.uniform(1, 2);
    Poly a = g.element(d1, g.uniform(1, 2));
    Poly b = g.element(kCorpusMaxDegree - d1, g.uniform(1, 2));
    factors.push_back(a);
    factors.push_back(b);
    return a * b;
  }
  return g.element(kCorpusMaxDegree, g.uniform(1, 3));
}

Poly pick_factor_or(TowerGenerator& g, const std::vector<Poly>& factors, Poly fallback) {
  if (factors.empty()) return fallback;
  return factors[static_cast<std::size_t>(g.uniform(0, static_cast<int>(factors.size()) - 1))];
}

Family general_tower(TowerGenerator& g, bool force_trivext = false) {
  Family f;
  std::vector<Poly> base;
  int c = g.chance(0.15) ? 0 : g.uniform(1, g.n() == 1 ? 1 : 2);
  for (int i = 0; i < c; ++i) base.push_back(product_or_element(g, f.factors));
  f.spec = g.spec(base);
  int steps = g.chance(0.15) ? 0 : g.uniform(1, kCorpusMaxSteps);
  if (force_trivext) steps = std::max(steps, 1);
  for (int s = 0; s < steps; ++s) {
    if (!(force_trivext && s == 0) && g.chance(0.55)) {
      std::vector<Poly> elems;
      int k = g.uniform(1, std::min(2, g.n()));
      for (int i = 0; i < k; ++i) {
        double r = std::uniform_real_distribution<double>(0, 1)(g.rng());
        if (r < 0.35) elems.push_back(g.variable());
        else if (r < 0.7) elems.push_back(g.element(2, g.uniform(1, 2)));
        else elems.push_back(pick_factor_or(g, f.factors, g.linear()));
      }
      f.spec.add_koszul(elems);
    } else {
      Ideal ambient = g.ideal(f.spec.h0_generators());
      int shift = g.uniform(1, 2);
      if (!force_trivext && g.chance(0.4)) {
        f.spec.add_trivext(PresentedModule::free(ambient, 1), shift);
      } else {
        Poly r = g.chance(0.5) ? g.variable() : g.element(2, 1);
        f.spec.add_trivext(PresentedModule::cyclic(ambient, {r}), shift);
      }
    }
  }
  return f;
}

Family complete_intersection_tower(TowerGenerator& g) {
  Family f;
  std::vector<Poly> base;
  int c = g.uniform(0, std::min(2, g.n() - 1));
  for (int i = 0; i < c; ++i) base.push_back(product_or_element(g, f.factors));
  f.spec = g.spec(base);
  if (g.chance(0.5)) {
    double r = std::uniform_real_distribution<double>(0, 1)(g.rng());
    Poly e = r < 0.3 ? g.variable() : r < 0.6 ? g.linear() : r < 0.8 ? pick_factor_or(g, f.factors, g.variable())
                                                                      : g.element(2, g.uniform(1, 2));
    f.spec.add_koszul({e});
  }
  return f;
}

// Towers whose H^0 is regular by construction: each cut equation f either
// defines H^0 directly or enters as f*h in the base and is then killed by a
// Koszul step.
Family sequence_regular_tower(TowerGenerator& g, bool homogeneous) {
  Family f;
  int c = g.uniform(0, g.n() - 1);
  std::vector<Poly> cuts = g.independent_linear(c);
  std::vector<Poly> base, killed;
  for (auto& cut : cuts) {
    if (!homogeneous && g.chance(0.5)) cut += g.term(2);
    if (g.chance(0.6)) {
      Poly h = homogeneous ? g.homogeneous(cut.total_degree() == 1 ? g.uniform(1, 2) : 1, g.uniform(1, 2))
                           : g.element(1, g.uniform(1, 2));
      f.factors.push_back(h);
      base.push_back(cut * h);
      killed.push_back(cut);
    } else {
      base.push_back(cut);
    }
  }
  f.spec = g.spec(base);
  int steps = 0;
  if (!killed.empty()) {
    f.spec.add_koszul(killed);
    ++steps;
  }
  while (steps < kCorpusMaxSteps && g.chance(0.35)) {
    if (!base.empty() && g.chance(0.5)) {
      f.spec.add_koszul({base[static_cast<std::size_t>(g.uniform(0, static_cast<int>(base.size()) - 1))]});
    } else {
      f.spec.add_trivext(PresentedModule::free(g.ideal(f.spec.h0_generators()), 1), g.uniform(1, 2));
    }
    ++steps;
  }
  return f;
}

Poly ci_test_element(TowerGenerator& g, const Family& f) {
  double r = std::uniform_real_distribution<double>(0, 1)(g.rng());
  if (r < 0.4) return g.linear();
  if (r < 0.6) return g.variable();
  if (r < 0.8) return g.element(2, g.uniform(1, 2));
  if (!f.factors.empty() && g.chance(0.5)) return pick_factor_or(g, f.factors, g.variable());
  Poly l = g.linear();
  return l * l;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t corpus_seed, std::size_t index) {
  // splitmix64 of the pair.
  std::uint64_t z = corpus_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return (z ^ (z >> 31)) & 0xffffffffffffULL;
}

std::string reproduction_command(Property profile, std::uint64_t seed) {
  return "seqreg verify " + std::string(property_name(profile)) + " --random --seed " + std::to_string(seed);
}

TowerDocument generate_instance(Property profile, std::uint64_t seed) {
  std::mt19937_64 pre(seed);
  const bool ci = profile == Property::kos_amp || profile == Property::sop || profile == Property::double_cm;
  TowerGenerator g(seed * 2 + 1, pick_nvars(pre, ci ? 2 : 1));
  TowerDocument doc;
  Family f;
  switch (profile) {
    case Property::kos_amp:
    case Property::sop:
    case Property::double_cm: {
      f = complete_intersection_tower(g);
      int k = g.uniform(1, std::min(2, g.n()));
      for (int i = 0; i < k; ++i) doc.elements.push_back(ci_test_element(g, f));
      break;
    }
    case Property::redka:
    case Property::derived_quotient:
    case Property::nakayama:
      f = sequence_regular_tower(g, false);
      break;
    case Property::serre_points:
      f = sequence_regular_tower(g, true);
      break;
    case Property::gl:
      f = g.chance(0.5) ? sequence_regular_tower(g, false) : general_tower(g);
      break;
    case Property::main:
    case Property::engine: {
      double r = std::uniform_real_distribution<double>(0, 1)(g.rng());
      if (r < 0.35) f = general_tower(g);
      else if (r < 0.55) f = general_tower(g, true);
      else if (r < 0.8) f = sequence_regular_tower(g, false);
      else f = complete_intersection_tower(g);
      break;
    }
  }
  if (profile == Property::derived_quotient) {
    int k = g.uniform(1, std::min(2, g.n()));
    for (int i = 0; i < k; ++i) {
      double r = std::uniform_real_distribution<double>(0, 1)(g.rng());
      Poly l = g.linear();
      doc.elements.push_back(r < 0.4 ? l : r < 0.6 ? g.variable() : r < 0.8 ? l * l : g.element(2, g.uniform(1, 2)));
    }
  } else if (profile == Property::nakayama) {
    int k = g.uniform(1, 2);
    for (int i = 0; i < k; ++i) {
      double r = std::uniform_real_distribution<double>(0, 1)(g.rng());
      doc.elements.push_back(r < 0.3 ? g.linear() : r < 0.55 ? g.variable() : r < 0.8 ? g.element(2, 2)
                                                                                       : g.one() + g.element(1, 1));
    }
  } else if (profile == Property::gl) {
    // At most kGlMaxKoszul Koszul elements in all, so the cone stays small
    // enough for 50 full cohomology comparisons.
    std::size_t in_tower = 0;
    for (const auto& st : f.spec.steps()) {
      if (const auto* ks = std::get_if<KoszulStep>(&st)) in_tower += ks->elements.size();
    }
    const int room = std::max(1, kGlMaxKoszul - static_cast<int>(in_tower));
    int k = g.uniform(1, std::min({3, g.n(), room}));
    for (int i = 0; i < k; ++i) doc.elements.push_back(g.chance(0.5) ? g.linear() : g.element(2, g.uniform(1, 2)));
  }
  f.spec.set_label(std::string(property_name(profile)) + " instance " + std::to_string(seed));
  doc.spec = f.spec;
  return doc;
}

std::size_t default_corpus_count(Property profile) {
  switch (profile) {
    case Property::gl:
      return 20;
    case Property::serre_points:
      return 30;
    default:
      return 100;
  }
}

CorpusSummary run_corpus(Property profile, const CorpusOptions& opts) {
  CorpusSummary s;
  s.profile = profile;
  s.seed = opts.seed;
  s.requested = opts.count ? opts.count : default_corpus_count(profile);
  const std::size_t cap = 25 * s.requested;
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());

  auto run_one = [&](std::size_t index) {
    InstanceOutcome o;
    o.index = index;
    o.seed = instance_seed(opts.seed, index);
    TowerDocument doc = generate_instance(profile, o.seed);
    o.tower = format_tower(doc);
    VerifyOptions vo;
    vo.regularity.trials = opts.trials;
    vo.regularity.seed = o.seed;
    try {
      o.verdict = run_property(profile, doc, vo);
    } catch (const Error& e) {
      o.verdict.property = profile;
      o.verdict.outcome = Outcome::counterexample;
      o.verdict.message = std::string("error: ") + e.what();
    }
    return o;
  };

  std::size_t next = 0;
  while (s.applicable < s.requested && next < cap) {
    const std::size_t batch = std::min<std::size_t>(threads, cap - next);
    std::vector<InstanceOutcome> results(batch);
    std::vector<std::thread> workers;
    for (std::size_t b = 1; b < batch; ++b) workers.emplace_back([&, b] { results[b] = run_one(next + b); });
    results[0] = run_one(next);
    for (auto& w : workers) w.join();
    next += batch;
    for (auto& o : results) {
      if (s.applicable >= s.requested) break;
      ++s.generated;
      const Outcome out = o.verdict.outcome;
      if (out != Outcome::not_applicable) ++s.applicable;
      switch (out) {
        case Outcome::pass:
          ++s.passed;
          if (o.verdict.certified) ++s.certified;
          break;
        case Outcome::counterexample:
          ++s.counterexamples;
          break;
        case Outcome::inconclusive:
          ++s.inconclusive;
          break;
        case Outcome::budget:
          ++s.budget;
          break;
        case Outcome::not_applicable:
          break;
      }
      if (out == Outcome::counterexample || out == Outcome::budget) s.failures.push_back(o);
      if (opts.keep_all) s.instances.push_back(std::move(o));
    }
  }
  return s;
}

}  // namespace seqreg
