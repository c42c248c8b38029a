#include <gtest/gtest.h>

#include "seqreg/errors.hpp"
#include "support.hpp"

namespace seqreg {
namespace {

using testing::Ring;

TEST(FieldTest, RationalsCanonical) {
  Field q = Field::rationals();
  FieldElem a = q.parse("6/-4");
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(a.rational().get_den(), 2);
  EXPECT_TRUE((a * a.inverse()).is_one());
}

TEST(FieldTest, PrimeResidues) {
  Field f = Field::prime(7);
  EXPECT_EQ(f.from_int(-1).residue(), 6u);
  EXPECT_TRUE((f.from_int(3) * f.from_int(5)).is_one());
  EXPECT_EQ(f.parse("1/2"), f.from_int(4));
  EXPECT_THROW(Field::prime(8), InvalidInput);
  EXPECT_THROW(Field::prime(2147483659ULL), InvalidInput);
  EXPECT_THROW(f.zero().inverse(), InvalidInput);
}

TEST(FieldTest, MixedFieldsRejected) {
  EXPECT_THROW(Field::prime(5).one() + Field::rationals().one(), InvalidInput);
}

TEST(PolyTest, AddCancels) {
  Ring r = Ring::qq({"x", "y"});
  EXPECT_EQ(r("x + y") + r("x - y"), r("2*x"));
  EXPECT_EQ(r("x^2 - 3y") + Poly(r.field, 2), r("x^2 - 3y"));
  Ring f2 = Ring::fp({"x"}, 2);
  EXPECT_TRUE((f2("x") + f2("x")).is_zero());
}

TEST(PolyTest, Multiply) {
  Ring r = Ring::qq({"x", "y"});
  EXPECT_EQ(r("x") * r("y"), r("x y"));
  EXPECT_EQ(r("(x+y)*(x-y)"), r("x^2 - y^2"));
  Poly p = r("3x^2 y - 1/2 y + 7");
  EXPECT_EQ(p * r("1"), p);
}

TEST(PolyTest, Translate) {
  Ring r = Ring::qq({"x", "y"});
  EXPECT_EQ(r("x y").translate(r.point({0, 1})), r("x y + x"));
  Poly p = r("x^3 - 2 x y + 5");
  EXPECT_EQ(p.translate(r.point({0, 0})), p);
  Ring r1 = Ring::qq({"x"});
  EXPECT_EQ(r1("1 - x").translate(r1.point({1})), r1("-x"));
  EXPECT_THROW(p.translate(r.point({1})), InvalidInput);
}

TEST(PolyTest, LinearPart) {
  Ring r = Ring::qq({"x", "y"});
  EXPECT_EQ(r("x - y^2").linear_part(), r("x"));
  EXPECT_TRUE(r("x y").linear_part().is_zero());
  EXPECT_EQ(r("3 + x + x^2").linear_part(), r("x"));
}

TEST(PolyTest, EvalAndLocalUnit) {
  Ring r = Ring::qq({"x", "y"});
  EXPECT_TRUE(r("x y + 1").eval(r.point({0, 0})).is_one());
  EXPECT_TRUE(r("x y + 1").is_local_unit());
  EXPECT_FALSE(r("x").is_local_unit());
  EXPECT_TRUE(r("x^2 - y").eval(r.point({2, 4})).is_zero());
}

TEST(PolyTest, ArityAndFieldMismatch) {
  Ring a = Ring::qq({"x", "y"});
  Ring b = Ring::qq({"x"});
  Ring c = Ring::fp({"x", "y"});
  EXPECT_THROW(a("x") + b("x"), InvalidInput);
  EXPECT_THROW(a("x") * c("x"), InvalidInput);
}

TEST(ParseTest, Diagnostics) {
  Ring r = Ring::qq({"x", "y"});
  try {
    r("x + z");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
  }
  EXPECT_THROW(r("x +"), ParseError);
  EXPECT_THROW(r("(x"), ParseError);
  EXPECT_EQ(r("-(x-1)^2"), r("-x^2 + 2x - 1"));
  EXPECT_EQ(r("2/4 x"), r("1/2*x"));
}

TEST(PolyProperty, RingAxiomsOnRandomTriples) {
  for (auto field : {Field::rationals(), Field::prime(32003)}) {
    Ring r(field, {"x", "y", "z"});
    std::mt19937_64 rng(11);
    for (int k = 0; k < 1000; ++k) {
      Poly a = testing::random_poly(r, rng), b = testing::random_poly(r, rng), c = testing::random_poly(r, rng);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_TRUE((a - a).is_zero());
    }
  }
}

TEST(PolyProperty, TranslateRoundTripAndLinearity) {
  Ring r = Ring::fp({"x", "y", "z"});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coord(-20, 20);
  for (int k = 0; k < 300; ++k) {
    Poly p = testing::random_poly(r, rng, 6, 4);
    Poly q = testing::random_poly(r, rng, 6, 4);
    auto c = r.point({coord(rng), coord(rng), coord(rng)});
    std::vector<FieldElem> neg;
    for (const auto& e : c) neg.push_back(-e);
    ASSERT_EQ(p.translate(c).translate(neg), p);
    ASSERT_EQ((p + q).linear_part(), p.linear_part() + q.linear_part());
    ASSERT_EQ(p.translate(c).eval(r.point({0, 0, 0})), p.eval(c));
  }
}

TEST(PolyProperty, LeadOfProductIsProductOfLeads) {
  Ring r = Ring::qq({"x", "y", "z"});
  std::mt19937_64 rng(3);
  for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
    MonomialOrder ord(kind, 3);
    auto lead = [&](const Poly& p) {
      Monomial best = p.terms().front().mono;
      for (const auto& t : p.terms()) {
        if (ord.compare(t.mono, best) > 0) best = t.mono;
      }
      return best;
    };
    for (int k = 0; k < 300; ++k) {
      Poly a = testing::random_poly(r, rng), b = testing::random_poly(r, rng);
      if (a.is_zero() || b.is_zero()) continue;
      ASSERT_EQ(lead(a * b), lead(a) * lead(b));
    }
  }
}

TEST(MonomialOrderTest, LocalOrderPutsOneFirst) {
  MonomialOrder local(OrderKind::neg_grevlex_local, 2);
  MonomialOrder global(OrderKind::grevlex, 2);
  Monomial one;
  Monomial x = Monomial::variable(0);
  Monomial y2 = Monomial::variable(1) * Monomial::variable(1);
  EXPECT_GT(local.compare(one, x), 0);
  EXPECT_GT(local.compare(x, y2), 0);
  EXPECT_LT(global.compare(one, x), 0);
  EXPECT_GT(global.compare(Monomial::variable(0), Monomial::variable(1)), 0);
}

}  // namespace
}  // namespace seqreg
