#include <gtest/gtest.h>

#include <random>

#include "seqreg/errors.hpp"
#include "seqreg/points.hpp"
#include "seqreg/report.hpp"
#include "support.hpp"

namespace seqreg {
namespace {

using testing::Ring;

const char* kExample =
    "# K(A; x) over k[x,y]/(xy)\n"
    "field 32003\n"
    "vars x y\n"
    "quotient [x*y]\n"
    "koszul [x]\n";

int error_line(const std::string& text) {
  try {
    parse_tower(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(Dsl, ParsesTheKoszulExample) {
  TowerDocument d = parse_tower(kExample);
  EXPECT_EQ(d.spec.field(), Field::prime(32003));
  EXPECT_EQ(d.spec.vars(), (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(d.spec.base_ideal().size(), 1u);
  ASSERT_EQ(d.spec.steps().size(), 1u);
  EXPECT_TRUE(std::holds_alternative<KoszulStep>(d.spec.steps()[0]));
  EXPECT_FALSE(d.spec.point());
}

TEST(Dsl, EmptyStepsGiveAPlainQuotient) {
  TowerDocument d = parse_tower("field Q\nvars x y\nquotient [x^2 - y^3]\n");
  EXPECT_TRUE(d.spec.steps().empty());
  EXPECT_EQ(realize(d.spec).amplitude(), (AmplitudeProfile{0, 0}));
}

TEST(Dsl, TrivextForms) {
  TowerDocument d = parse_tower(
      "field 7\nvars x y\nquotient []\ntrivext 2 [x]\ntrivext 1 free 2\ntrivext 3 module 2 [[x, 0], [0, y]]\n");
  ASSERT_EQ(d.spec.steps().size(), 3u);
  const auto& a = std::get<TrivExtStep>(d.spec.steps()[0]);
  const auto& b = std::get<TrivExtStep>(d.spec.steps()[1]);
  const auto& c = std::get<TrivExtStep>(d.spec.steps()[2]);
  EXPECT_EQ(a.shift, 2);
  EXPECT_EQ(a.module.ngens(), 1u);
  EXPECT_EQ(b.module.ngens(), 2u);
  EXPECT_EQ(c.shift, 3);
  EXPECT_EQ(c.module.ngens(), 2u);
}

TEST(Dsl, VerifierInputs) {
  TowerDocument d = parse_tower(std::string(kExample) +
                                "point [0, 1]\nelements [y, x + y]\nmatrix [[1, x], [0, 1]]\npoints [[0, 3], [0, -2]]\n");
  EXPECT_EQ(d.elements.size(), 2u);
  ASSERT_EQ(d.matrices.size(), 1u);
  EXPECT_EQ(d.matrices[0].rows(), 2u);
  EXPECT_EQ(d.points.size(), 2u);
  ASSERT_TRUE(d.spec.point());
  EXPECT_EQ((*d.spec.point())[1], Field::prime(32003).from_int(1));
}

TEST(Dsl, Diagnostics) {
  EXPECT_EQ(error_line("field 32003\nvars x\nquotient []\ntrivext 0 [x]\n"), 4);
  EXPECT_EQ(error_line("field 32001\nvars x\n"), 1);
  EXPECT_EQ(error_line("field R\nvars x\n"), 1);
  EXPECT_EQ(error_line("field 5\nvars x\nfrobnicate [x]\n"), 3);
  EXPECT_EQ(error_line("field 5\nvars x y\nquotient [x*z]\n"), 3);
  EXPECT_EQ(error_line("field 5\nvars x y\nkoszul [x]\nquotient [y]\n"), 4);
  EXPECT_EQ(error_line("field 5\nvars x y\npoint [1]\n"), 3);
  EXPECT_EQ(error_line("field 5\nvars x x\n"), 2);
  EXPECT_EQ(error_line("field 5\nvars x\nquotient [x\n"), 3);
  try {
    parse_tower("field 5\nvars x\nquotient []\ntrivext 0 [x]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 9);
  }
}

TEST(Dsl, RoundTripOnGeneratedTowers) {
  for (Property p : all_properties()) {
    for (std::uint64_t s = 0; s < 8; ++s) {
      TowerDocument d = generate_instance(p, s);
      std::string once = format_tower(d);
      std::string twice = format_tower(parse_tower(once));
      ASSERT_EQ(once, twice) << property_name(p) << " seed " << s;
    }
  }
}

TEST(Points, SampledPointsLieOnTheVariety) {
  Ring f = Ring::fp({"x", "y", "z"});
  std::mt19937_64 rng(4);
  Ideal i = f.ideal({"x*y - z^2", "x^2 - y*z"});
  auto pts = sample_points(i, 12, rng);
  ASSERT_EQ(pts.size(), 12u);
  for (const auto& p : pts) {
    for (const auto& g : i.generators()) EXPECT_TRUE(g.eval(p).is_zero());
  }
}

TEST(Points, RationalPointsAndEmptyVariety) {
  Ring q = Ring::qq({"x", "y"});
  std::mt19937_64 rng(1);
  auto pts = sample_points(q.ideal({"x^2 - 4", "x*y - 6"}), 5, rng);
  for (const auto& p : pts) {
    EXPECT_TRUE(p[1] == q.field.from_int(3) || p[1] == q.field.from_int(-3));
  }
  EXPECT_THROW(sample_points(q.ideal({"x^2 + 1"}), 1, rng), BudgetExceeded);
  EXPECT_THROW(sample_points(q.ideal({"1"}), 1, rng), BudgetExceeded);
}

TEST(Points, UnivariateRoots) {
  Ring f = Ring::fp({"x", "y"}, 13);
  auto roots = univariate_roots(f("y^2 - 4"), 1);
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& r : roots) EXPECT_TRUE((r * r - f.field.from_int(4)).is_zero());
  EXPECT_TRUE(univariate_roots(f("y^2 - 2"), 1).empty());
}

// A local unit times f lies in I exactly when (I : f) leaves the maximal ideal.
bool locally_contains_by_colon(const Ideal& i, const Poly& f) { return colon(i, f).is_unit_locally(); }

TEST(LocalBasis, MembershipAgreesWithColonOracle) {
  Ring f = Ring::fp({"x", "y"});
  std::mt19937_64 rng(9);
  for (int k = 0; k < 40; ++k) {
    Ideal i(f.field, 2, {testing::random_poly(f, rng, 3, 3), testing::random_poly(f, rng, 3, 3)});
    for (int t = 0; t < 3; ++t) {
      Poly g = testing::random_poly(f, rng, 2, 2);
      Poly probe = t == 0 ? g * i.generators()[0] : g;
      ASSERT_EQ(i.contains_locally(probe), locally_contains_by_colon(i, probe));
    }
    for (const auto& e : i.standard_basis_local().elements()) ASSERT_TRUE(locally_contains_by_colon(i, e));
  }
}

TEST(LocalBasis, HomogeneousIdealsKeepTheirGrevlexLeads) {
  Ring f = Ring::fp({"x", "y", "z"});
  Ideal i = f.ideal({"x*y - z^2", "x^2 - y*z", "y^3 - x*z^2"});
  MonomialOrder order(OrderKind::grevlex, 3);
  std::vector<Monomial> local = minimalize_monomials(i.standard_basis_local().lead_ideal(), order);
  std::vector<Monomial> global = minimalize_monomials(i.lead_monomials(OrderKind::grevlex), order);
  EXPECT_EQ(local, global);
}

TEST(Report, KoszulExample) {
  TowerReport r = run_report(parse_tower(kExample), {});
  EXPECT_TRUE(r.regularity.sequence_regular.value);
  EXPECT_EQ(r.regularity.amplitude.amp(), 1);
  ASSERT_TRUE(r.regularity.kappa);
  EXPECT_EQ(r.main.outcome, Outcome::pass);
  EXPECT_EQ(exit_code(r.main.outcome), 0);
}

TEST(Report, TrivextCounterexample) {
  TowerReport r = run_report(parse_tower("field 32003\nvars x\nquotient []\ntrivext 2 [x]\n"), {});
  EXPECT_EQ(r.regularity.seq_depth.depth, 0);
  EXPECT_FALSE(r.regularity.sequence_regular.value);
  EXPECT_FALSE(r.regularity.is_local_cm);
  EXPECT_TRUE(r.regularity.h0_is_regular_local);
}

TEST(Report, JsonIsByteIdentical) {
  TowerDocument d = parse_tower(std::string(kExample) + "point [0, 5]\n");
  RegularityOptions o{16, 42};
  EXPECT_EQ(render_json(run_report(d, o)), render_json(run_report(d, o)));
  TowerReport timed = run_report(d, o);
  EXPECT_EQ(render_json(timed).find("timing"), std::string::npos);
  timed.seconds = 0.5;
  EXPECT_NE(render_json(timed).find("timing"), std::string::npos);
}

TEST(Report, ExitCodes) {
  EXPECT_EQ(exit_code(Outcome::pass), 0);
  EXPECT_EQ(exit_code(Outcome::not_applicable), 0);
  EXPECT_EQ(exit_code(Outcome::counterexample), 1);
  EXPECT_EQ(exit_code(Outcome::inconclusive), 2);
  EXPECT_EQ(exit_code(Outcome::budget), 2);
}

TEST(Report, Fnv1a) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Corpus, SummaryIndependentOfThreads) {
  CorpusOptions a;
  a.count = 12;
  a.seed = 3;
  a.threads = 1;
  a.keep_all = true;
  CorpusOptions b = a;
  b.threads = 4;
  CorpusSummary x = run_corpus(Property::main, a), y = run_corpus(Property::main, b);
  EXPECT_EQ(render_json(x), render_json(y));
  ASSERT_EQ(x.instances.size(), y.instances.size());
  for (std::size_t i = 0; i < x.instances.size(); ++i) EXPECT_EQ(x.instances[i].tower, y.instances[i].tower);
  EXPECT_TRUE(x.clean());
}

TEST(Corpus, InstancesAreReproducible) {
  std::uint64_t s = instance_seed(7, 5);
  EXPECT_EQ(format_tower(generate_instance(Property::kos_amp, s)), format_tower(generate_instance(Property::kos_amp, s)));
  EXPECT_NE(instance_seed(7, 5), instance_seed(7, 6));
  EXPECT_EQ(reproduction_command(Property::sop, 11), "seqreg verify sop --random --seed 11");
}

TEST(Corpus, GeneratedTowersRespectLimits) {
  for (Property p : all_properties()) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      TowerDocument d = generate_instance(p, instance_seed(1, s));
      EXPECT_EQ(d.spec.field(), Field::prime(kCorpusPrime));
      EXPECT_LE(d.spec.nvars(), kCorpusMaxVars);
      EXPECT_LE(static_cast<int>(d.spec.steps().size()), kCorpusMaxSteps);
      for (const auto& g : d.spec.h0_generators()) EXPECT_LE(g.total_degree(), kCorpusMaxDegree);
    }
  }
}

}  // namespace
}  // namespace seqreg
