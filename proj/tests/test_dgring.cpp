#include <gtest/gtest.h>

#include "seqreg/dgring.hpp"
#include "seqreg/errors.hpp"
#include "support.hpp"

namespace seqreg {
namespace {

using testing::Ring;

class DGRingTest : public ::testing::Test {
 protected:
  Ring r = Ring::qq({"x", "y"});
  Ring line = Ring::qq({"x"});

  DGRingSpec quotient(const Ring& ring, const std::vector<std::string>& gens) {
    std::vector<Poly> ps;
    for (const auto& g : gens) ps.push_back(ring(g));
    return DGRingSpec(ring.field, ring.vars, ps);
  }
  // A = k[x,y]/(xy), then K(A; x).
  DGRingSpec example() { return koszul(quotient(r, {"x*y"}), {r("x")}); }
  // k[x] with the residue field placed in degree -2.
  DGRingSpec trivext_residue() {
    DGRingSpec s = quotient(line, {});
    s.add_trivext(PresentedModule::cyclic(Ideal(line.field, 1, {}), {line("x")}), 2);
    return s;
  }
  PresentedModule cyclic(const std::vector<std::string>& gens) {
    std::vector<Poly> ps;
    for (const auto& g : gens) ps.push_back(r(g));
    return PresentedModule::cyclic(Ideal(r.field, 2, {}), ps);
  }
};

TEST_F(DGRingTest, PlainQuotientIsAmplitudeZero) {
  DGRingRealization a = realize(quotient(r, {"x*y"}));
  EXPECT_EQ(a.complex().lowest_degree(), 0);
  EXPECT_EQ(a.amplitude(), (AmplitudeProfile{0, 0}));
  EXPECT_TRUE(has_constant_amplitude(a));
}

TEST_F(DGRingTest, KoszulOverNodeHasAmplitudeOne) {
  DGRingRealization a = realize(example());
  EXPECT_EQ(a.complex().lowest_degree(), -1);
  EXPECT_TRUE(a.h0().equals(r.ideal({"x"})));
  EXPECT_TRUE(a.cohomology_locally_nonzero(-1));
  EXPECT_EQ(a.amplitude(), (AmplitudeProfile{-1, 0}));
  EXPECT_EQ(a.amplitude().amp(), 1);
  // Ann(x) = (y) in S/(xy), and (y) is isomorphic to S/(x).
  EXPECT_EQ(fingerprint(a.cohomology(-1)), fingerprint(cyclic({"x"})));
  EXPECT_TRUE(has_constant_amplitude(a));
}

TEST_F(DGRingTest, KoszulOnRegularSequenceIsARing) {
  DGRingRealization a = realize(koszul(quotient(r, {}), {r("x"), r("y")}));
  EXPECT_EQ(a.amplitude(), (AmplitudeProfile{0, 0}));
  EXPECT_FALSE(a.cohomology_locally_nonzero(-1));
  EXPECT_FALSE(a.cohomology_locally_nonzero(-2));
  EXPECT_EQ(fingerprint(a.cohomology(0)), fingerprint(cyclic({"x", "y"})));
}

TEST_F(DGRingTest, TrivialExtensionByResidueField) {
  DGRingRealization b = realize(trivext_residue());
  const auto& c = b.complex();
  EXPECT_EQ(c.lowest_degree(), -2);
  EXPECT_EQ(c.term(0).ngens(), 1u);
  EXPECT_EQ(c.term(-1).ngens(), 0u);
  EXPECT_TRUE(c.differential(-2).is_zero());
  PresentedModule k = PresentedModule::cyclic(Ideal(line.field, 1, {}), {line("x")});
  EXPECT_EQ(fingerprint(b.cohomology(-2)), fingerprint(k));
  EXPECT_EQ(b.amplitude(), (AmplitudeProfile{-2, 0}));
  EXPECT_FALSE(has_constant_amplitude(b));
}

TEST_F(DGRingTest, TrivialExtensionShiftMustBePositive) {
  DGRingSpec s = quotient(line, {});
  EXPECT_THROW(s.add_trivext(PresentedModule::free(Ideal(line.field, 1, {}), 1), 0), InvalidInput);
}

TEST_F(DGRingTest, TrivialExtensionWithPartialSupportIsNotConstant) {
  DGRingSpec s = quotient(r, {});
  s.add_trivext(cyclic({"x"}), 1);
  DGRingRealization a = realize(s);
  EXPECT_EQ(a.amplitude().amp(), 1);
  EXPECT_FALSE(has_constant_amplitude(a));
}

TEST_F(DGRingTest, RejectsUnitsAndZeroRings) {
  EXPECT_THROW(realize(quotient(r, {"1+x"})), InvalidInput);
  EXPECT_THROW(realize(koszul(quotient(r, {"x*y"}), {r("1+y")})), InvalidInput);
  try {
    realize(koszul(quotient(r, {}), {r("2+x")}));
    FAIL() << "unit accepted";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("not in the maximal ideal"), std::string::npos);
  }
}

TEST_F(DGRingTest, LocalizeAtPointTranslates) {
  DGRingSpec s = localize_at_point(quotient(r, {"x*y"}), r.point({0, 1}));
  DGRingRealization a = realize(s);
  EXPECT_TRUE(a.h0_ideal().equals(r.ideal({"x*y + x"})));
  const auto& leads = a.h0_ideal().standard_basis_local().lead_ideal();
  ASSERT_EQ(leads.size(), 1u);
  EXPECT_EQ(leads[0], Monomial::variable(0));
  EXPECT_EQ(a.h0_ideal().dim_local_at_origin(), 1);

  DGRingSpec base = quotient(r, {"x*y"});
  DGRingRealization same = realize(localize_at_point(base, r.point({0, 0})));
  EXPECT_TRUE(same.h0_ideal().equals(r.ideal({"x*y"})));
}

TEST_F(DGRingTest, KoszulAtTranslatedPoint) {
  // At (0,1) the node is smooth and K(A; x) has H^-1 free of rank 1 there.
  DGRingRealization a = realize(localize_at_point(example(), r.point({0, 1})));
  EXPECT_EQ(a.amplitude().amp(), 1);
  EXPECT_EQ(min_generators_at_origin(a.cohomology(-1)), 1);
}

TEST_F(DGRingTest, PointOffTheLocusIsRejected) {
  EXPECT_THROW(realize(localize_at_point(quotient(r, {"x*y"}), r.point({1, 1}))), InvalidInput);
}

TEST_F(DGRingTest, KoszulConeSatisfiesDifferentialSquareZero) {
  DGRingRealization a = realize(koszul(quotient(r, {"x*y", "x^2"}), {r("x+y"), r("y^2")}));
  const auto& c = a.complex();
  for (int i = c.lowest_degree(); i < 0; ++i) {
    PolyMatrix dd = c.differential(i + 1) * c.differential(i);
    for (const auto& col : dd.columns()) EXPECT_TRUE(c.term(i + 2).is_relation(col));
  }
}

// Rescaling the lifts by units, or adding elements of J_A, leaves every
// cohomology fingerprint unchanged.
TEST_F(DGRingTest, LiftIndependenceProperty) {
  std::mt19937_64 rng(11);
  Ring fp = Ring::fp({"x", "y", "z"});
  std::vector<std::vector<std::string>> bases = {{"x*y"}, {"x^2 - y^3"}, {"x*z", "y*z"}, {}};
  std::vector<std::vector<std::string>> elems = {{"x"}, {"y", "z"}, {"x+z"}, {"x*y", "z"}};
  for (const auto& base : bases) {
    for (const auto& el : elems) {
      std::vector<Poly> b;
      for (const auto& g : base) b.push_back(fp(g));
      DGRingSpec s(fp.field, fp.vars, b);
      std::vector<Poly> e, e2;
      for (const auto& g : el) {
        e.push_back(fp(g));
        Poly unit = fp("1") + testing::random_poly(fp, rng, 2, 2) * fp("x");
        Poly shifted = fp(g) * unit;
        if (!b.empty()) shifted += b[0] * testing::random_poly(fp, rng, 2, 1);
        e2.push_back(shifted);
      }
      auto lhs = cohomology_fingerprints(realize(koszul(s, e)).complex());
      auto rhs = cohomology_fingerprints(realize(koszul(s, e2)).complex());
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST_F(DGRingTest, H0CrossCheckOnRandomTowers) {
  std::mt19937_64 rng(5);
  Ring fp = Ring::fp({"x", "y"});
  for (int t = 0; t < 12; ++t) {
    Poly g = testing::random_poly(fp, rng, 3, 3);
    g -= Poly::constant(fp.field, 2, g.constant_term());
    Poly a = testing::random_poly(fp, rng, 2, 2);
    a -= Poly::constant(fp.field, 2, a.constant_term());
    if (g.is_zero() || a.is_zero()) continue;
    DGRingSpec s(fp.field, fp.vars, {g});
    s.add_koszul({a});
    DGRingRealization real = realize(s);
    EXPECT_NO_THROW(real.h0());
  }
}

}  // namespace
}  // namespace seqreg
