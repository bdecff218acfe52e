#include <gtest/gtest.h>

#include <map>

#include "hcs/error.hpp"
#include "hcs/poly.hpp"
#include "support/oracles.hpp"

using namespace hcs;

namespace {

RingPtr t12() { return PolyRing::make({"t1", "t2"}); }
Poly P(const RingPtr& r, const char* s) { return parse_poly(r, s); }

}  // namespace

TEST(PolyRing, RejectsBadVariableLists) {
  EXPECT_THROW(PolyRing::make({"x", ""}), DomainError);
  EXPECT_THROW(PolyRing::make({"x", "x"}), DomainError);
  auto r = PolyRing::make({"x", "y"});
  EXPECT_EQ(r->index_of("y"), 1u);
  EXPECT_FALSE(r->index_of("z"));
}

TEST(Poly, Multiplication) {
  auto r = t12();
  EXPECT_EQ(P(r, "(t1-1)*(t1-2)"), P(r, "t1^2 - 3*t1 + 2"));
  EXPECT_TRUE((P(r, "t1^2 + 7") * Poly(r)).is_zero());
  // (1 + (t1-2)) (1 - (t1-2)) expanded by hand: -t1^2 + 4 t1 - 3.
  EXPECT_EQ(P(r, "1 + (t1-2)") * P(r, "1 - (t1-2)"), P(r, "-t1^2 + 4*t1 - 3"));
  EXPECT_EQ(P(r, "1 + (t1-2)") * P(r, "1 - (t1-2)"), P(r, "1 - (t1-2)^2"));
}

TEST(Poly, RingMismatch) {
  auto a = PolyRing::make({"x"});
  auto b = PolyRing::make({"y"});
  EXPECT_THROW(Poly::variable(a, 0) * Poly::variable(b, 0), RingMismatch);
  EXPECT_THROW(Poly::variable(a, 0) + Poly::variable(b, 0), RingMismatch);
  // Structurally equal rings interoperate.
  EXPECT_NO_THROW(Poly::variable(a, 0) * Poly::variable(PolyRing::make({"x"}), 0));
}

TEST(Poly, CanonicalPrinting) {
  auto r = PolyRing::make({"x", "y"});
  EXPECT_EQ(P(r, "x*y^2*(-1/2)").to_string(), "-1/2*x*y^2");
  EXPECT_EQ(P(r, "2 - 3*x + x^2").to_string(), "x^2 - 3*x + 2");
  EXPECT_EQ(P(r, "y^3 + x^2").to_string(), "y^3 + x^2");
  EXPECT_EQ(P(r, "x*y + x^2 + y^2").to_string(), "x^2 + x*y + y^2");
  EXPECT_EQ(P(r, "4/6").to_string(), "2/3");
  EXPECT_EQ(P(r, "-3/-6*x").to_string(), "1/2*x");
  EXPECT_EQ(Poly(r).to_string(), "0");
}

TEST(Poly, ParseErrors) {
  auto r = PolyRing::make({"x", "y"});
  EXPECT_THROW(P(r, "x +"), ParseError);
  EXPECT_THROW(P(r, "z"), ParseError);
  EXPECT_THROW(P(r, "(x"), ParseError);
  EXPECT_THROW(P(r, "x / y"), ParseError);
  EXPECT_THROW(P(r, "x / 0"), ParseError);
  EXPECT_THROW(P(r, "x^-1"), ParseError);
  EXPECT_THROW(P(r, "x^9999999"), ParseError);
  EXPECT_THROW(P(r, ""), ParseError);
}

TEST(Poly, PrintParseRoundTrip) {
  auto r = PolyRing::make({"x", "y", "z"});
  oracle::RandomPolys gen(7);
  for (int k = 0; k < 200; ++k) {
    Poly f = gen.poly(r, 4, 5, 9).scaled(Rational(1, gen.uniform(1, 7)));
    EXPECT_EQ(P(r, f.to_string().c_str()), f) << f.to_string();
  }
}

TEST(Poly, RingAxioms) {
  auto r = PolyRing::make({"x", "y", "z"});
  oracle::RandomPolys gen(11);
  for (int k = 0; k < 100; ++k) {
    Poly f = gen.poly(r, 3), g = gen.poly(r, 3), h = gen.poly(r, 3);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(Poly, DivideExact) {
  auto r = t12();
  EXPECT_EQ(divide_exact(P(r, "t1^2 - 3*t1 + 2"), P(r, "t1 - 1")), P(r, "t1 - 2"));
  EXPECT_THROW(divide_exact(P(r, "t1^2 + 1"), P(r, "t1 - 1")), DomainError);
}

TEST(ApplyShift, UnitShifts) {
  auto r = t12();
  std::map<std::string, Poly> s1{{"t1", P(r, "t1 + 1")}};
  EXPECT_EQ(apply_shift(P(r, "t1 - 2"), s1), P(r, "t1 - 1"));
  EXPECT_EQ(apply_shift(P(r, "1 + (t1-2)^2"), s1), P(r, "1 + (t1-1)^2"));
  Poly f = P(r, "t1^3*t2 - 5*t2 + 1/3");
  EXPECT_EQ(apply_shift(f, {}), f);
  EXPECT_THROW(apply_shift(f, {{"t9", P(r, "t1")}}), DomainError);
}

TEST(ApplyShift, IsRingHomomorphism) {
  auto r = PolyRing::make({"t1", "t2", "t3"});
  oracle::RandomPolys gen(3);
  auto up = Substitution::from_map(r, {{"t1", P(r, "t1 + 1")}, {"t3", P(r, "t3 - 2")}});
  auto down = Substitution::from_map(r, {{"t1", P(r, "t1 - 1")}, {"t3", P(r, "t3 + 2")}});
  EXPECT_TRUE(up.followed_by(down).is_identity());
  for (int k = 0; k < 100; ++k) {
    Poly f = gen.poly(r, 3), g = gen.poly(r, 3);
    EXPECT_EQ(up.apply(f + g), up.apply(f) + up.apply(g));
    EXPECT_EQ(up.apply(f * g), up.apply(f) * up.apply(g));
    EXPECT_EQ(down.apply(up.apply(f)), f);
  }
}

TEST(Substitution, Printing) {
  auto r = t12();
  auto s = Substitution::from_map(r, {{"t1", P(r, "t1 + 1")}});
  EXPECT_EQ(s.to_string(), "{t1 -> t1 + 1}");
  EXPECT_TRUE(s.moves(0));
  EXPECT_FALSE(s.moves(1));
}

TEST(LeadingTerm, Orders) {
  auto r = t12();
  auto [m1, c1] = leading_term(P(r, "t1^2 + t2"), MonomialOrder::lex());
  EXPECT_EQ(m1, Monomial({2, 0}));
  EXPECT_EQ(c1, 1);
  auto [m2, c2] = leading_term(P(r, "t1^2 + t2^3"), MonomialOrder::grevlex());
  EXPECT_EQ(m2, Monomial({0, 3}));
  EXPECT_EQ(c2, 1);
  auto [m3, c3] = leading_term(P(r, "5"), MonomialOrder::grevlex());
  EXPECT_TRUE(m3.is_one());
  EXPECT_EQ(c3, 5);
  EXPECT_THROW(leading_term(Poly(r), MonomialOrder::lex()), DomainError);
}

TEST(LeadingTerm, GrevlexTieBreak) {
  auto r = PolyRing::make({"x", "y", "z"});
  // Same degree: grevlex prefers the smaller exponent of the last variable.
  auto [m, c] = leading_term(P(r, "x*z + y^2"), MonomialOrder::grevlex());
  EXPECT_EQ(m, Monomial({0, 2, 0}));
  auto [m2, c2] = leading_term(P(r, "x*z + y^2"), MonomialOrder::lex());
  EXPECT_EQ(m2, Monomial({1, 0, 1}));
  // block(1): x dominates regardless of degree.
  auto [m3, c3] = leading_term(P(r, "x + y^5"), MonomialOrder::block(1));
  EXPECT_EQ(m3, Monomial({1, 0, 0}));
}

TEST(LeadingTerm, IsMultiplicative) {
  auto r = PolyRing::make({"x", "y", "z"});
  oracle::RandomPolys gen(5);
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(1), MonomialOrder::block(2)}) {
    for (int k = 0; k < 60; ++k) {
      Poly f = gen.poly(r, 3, 4), g = gen.poly(r, 3, 4);
      auto [mf, cf] = leading_term(f, order);
      auto [mg, cg] = leading_term(g, order);
      auto [mfg, cfg] = leading_term(f * g, order);
      EXPECT_EQ(mfg, mf * mg) << order.name();
      EXPECT_EQ(cfg, cf * cg) << order.name();
    }
  }
}
