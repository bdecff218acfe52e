#include <gtest/gtest.h>

#include "hcs/error.hpp"
#include "hcs/harish_chandra.hpp"
#include "support/oracles.hpp"

using namespace hcs;

namespace {

PrimeIdeal pr(const HCDatum& w, const char* g) { return PrimeIdeal::principal(parse_poly(w.ring(), g)); }

const HCGenerator& gen(const HCDatum& w, const char* name) { return w.generators()[*w.index_of(name)]; }

HCDatum with_identity(const HCDatum& w) {
  auto gens = w.generators();
  gens.emplace_back("One", Substitution::identity(w.ring()), Substitution::identity(w.ring()));
  return HCDatum(w.ring(), gens);
}

}  // namespace

TEST(Weyl, Datum) {
  auto w1 = weyl_datum(1);
  ASSERT_EQ(w1.generators().size(), 2u);
  EXPECT_EQ(gen(w1, "Y1").automorphism().image(0), parse_poly(w1.ring(), "t1 + 1"));
  auto w2 = weyl_datum(2);
  ASSERT_EQ(w2.generators().size(), 4u);
  EXPECT_FALSE(gen(w2, "Y2").automorphism().moves(0));
  EXPECT_EQ(gen(w2, "X2").automorphism().image(1), parse_poly(w2.ring(), "t2 - 1"));
  EXPECT_THROW(weyl_datum(0), DomainError);
}

TEST(Weyl, ShiftsInvert) {
  auto w = weyl_datum(3);
  oracle::RandomPolys rnd(9);
  for (int k = 0; k < 40; ++k) {
    Poly f = rnd.poly(w.ring(), 4, 4);
    for (int i = 1; i <= 3; ++i) {
      const auto& y = gen(w, ("Y" + std::to_string(i)).c_str());
      const auto& x = gen(w, ("X" + std::to_string(i)).c_str());
      EXPECT_EQ(y.automorphism().apply(x.automorphism().apply(f)), f);
    }
  }
}

TEST(Generator, InverseIsChecked) {
  auto r = PolyRing::make({"t1"});
  auto up = Substitution::from_map(r, {{"t1", parse_poly(r, "t1 + 1")}});
  auto down = Substitution::from_map(r, {{"t1", parse_poly(r, "t1 - 1")}});
  auto twice = Substitution::from_map(r, {{"t1", parse_poly(r, "t1 - 2")}});
  EXPECT_THROW(HCGenerator("U", up, twice), DomainError);
  EXPECT_NO_THROW(HCGenerator("U", up, down));
  EXPECT_THROW(HCDatum(r, {HCGenerator("U", up, down), HCGenerator("U", down, up)}), DomainError);
}

TEST(EquivU, Examples) {
  auto w = weyl_datum(2);
  EXPECT_TRUE(equiv_u(pr(w, "t1 - 2"), pr(w, "t1 - 1"), gen(w, "Y1")));
  EXPECT_FALSE(equiv_u(pr(w, "t1 - 1"), pr(w, "t1 - 1"), gen(w, "Y1")));
  EXPECT_TRUE(equiv_u(pr(w, "1 + (t1-2)^2"), pr(w, "t2"), gen(w, "Y1")));
  EXPECT_THROW(PrimeIdeal::principal(parse_poly(w.ring(), "3")), DomainError);
}

TEST(EquivU, WeylSingleStepFails) {
  auto w = weyl_datum(2);
  auto f = pr(w, "1 + (t1-2)^2");
  auto p = pr(w, "t1 - 1");
  for (const auto& u : w.generators()) EXPECT_FALSE(equiv_u(f, p, u)) << u.name();
}

TEST(EquivU, IdentityGeneratorIsNonComaximality) {
  auto w = with_identity(weyl_datum(2));
  const auto& one = gen(w, "One");
  std::vector<PrimeIdeal> ps{pr(w, "t1 - 1"), pr(w, "t1 - 2"), pr(w, "t2"), pr(w, "1 + (t1-2)^2"),
                             PrimeIdeal::maximal_at(w.ring(), {1, 0})};
  for (const auto& a : ps) {
    EXPECT_TRUE(equiv_u(a, a, one));
    for (const auto& b : ps) EXPECT_EQ(equiv_u(a, b, one), !is_comaximal(a.ideal(), b.ideal()));
  }
}

TEST(Reachable, WeylChain) {
  auto w = weyl_datum(2);
  auto found = equiv_reachable(pr(w, "1 + (t1-2)^2"), {pr(w, "t2"), pr(w, "t1 - 1")}, w, 3);
  ASSERT_EQ(found.size(), 2u);
  const auto& hit = found[1];
  EXPECT_EQ(hit.candidate_index, 1u);
  ASSERT_EQ(hit.chain.length(), 2u);
  EXPECT_EQ(hit.chain.primes[1], pr(w, "t2"));
  EXPECT_EQ(w.generators()[hit.chain.generator_indices[0]].name(), "Y1");
  EXPECT_EQ(w.generators()[hit.chain.generator_indices[1]].name(), "Y2");
  for (const auto& r : found) EXPECT_TRUE(verify_chain(r.chain, w));
}

TEST(Reachable, DepthOneMissesTheChain) {
  auto w = weyl_datum(2);
  auto found = equiv_reachable(pr(w, "1 + (t1-2)^2"), {pr(w, "t1 - 1")}, w, 1);
  EXPECT_TRUE(found.empty());
}

TEST(Reachable, SelfLoopWithIdentity) {
  auto w = with_identity(weyl_datum(1));
  auto p = pr(w, "t1 - 1");
  auto found = equiv_reachable(p, {p}, w, 1);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].chain.length(), 1u);
}

TEST(Reachable, ShiftLadder) {
  auto w = weyl_datum(1);
  // Each X1 step moves <t1 - c> to <t1 - c - 1>; the rungs must be candidates.
  std::vector<PrimeIdeal> ladder{pr(w, "t1 - 2"), pr(w, "t1 - 3"), pr(w, "t1 - 4"), pr(w, "t1 - 5")};
  auto found = equiv_reachable(pr(w, "t1 - 1"), ladder, w, 4);
  ASSERT_EQ(found.size(), 4u);
  EXPECT_EQ(found[3].chain.length(), 4u);
  for (auto k : found[3].chain.generator_indices) EXPECT_EQ(w.generators()[k].name(), "X1");
  EXPECT_TRUE(equiv_reachable(pr(w, "t1 - 1"), ladder, w, 3).size() == 3u);
  EXPECT_TRUE(equiv_reachable(pr(w, "t1 - 1"), {pr(w, "t1 - 5")}, w, 4).empty());
}

TEST(Reachable, MixedCoheightIsRejected) {
  auto w = weyl_datum(2);
  EXPECT_THROW(equiv_reachable(pr(w, "t1"), {PrimeIdeal::maximal_at(w.ring(), {0, 0})}, w, 2), DomainError);
  EXPECT_THROW(equiv_reachable(pr(w, "t1"), {}, w, 0), DomainError);
}

TEST(AssassinBound, WeylHeightOne) {
  auto w = weyl_datum(2);
  auto p = pr(w, "t1 - 1");
  auto bound = assassin_bound(p, {pr(w, "t2"), pr(w, "1 + (t1-2)^2"), p}, w, 3);
  ASSERT_EQ(bound.admitted.size(), 3u);
  EXPECT_EQ(bound.admitted[0], p);
  for (std::size_t i = 1; i < bound.admitted.size(); ++i) {
    EXPECT_TRUE(verify_chain(bound.chains[i], w));
    EXPECT_EQ(bound.chains[i].primes.front(), bound.admitted[i]);
    EXPECT_EQ(bound.chains[i].primes.back(), p);
  }
}

TEST(AssassinBound, Trivial) {
  auto w = weyl_datum(2);
  auto m = PrimeIdeal::maximal_at(w.ring(), {1, 1});
  EXPECT_THROW(assassin_bound(m, {pr(w, "t2")}, w, 2), DomainError);
  auto only = assassin_bound(m, {}, w, 2);
  ASSERT_EQ(only.admitted.size(), 1u);
  EXPECT_EQ(only.admitted[0], m);
}

TEST(StepMatrix, ShiftIsDirected) {
  auto w = weyl_datum(1);
  std::vector<PrimeIdeal> c{pr(w, "t1 - 1"), pr(w, "t1 - 2")};
  auto m = single_step_matrix(c, w);
  const std::size_t y = *w.index_of("Y1");
  EXPECT_TRUE(m[1][0][y]);
  EXPECT_FALSE(m[0][1][y]);
  EXPECT_FALSE(m[0][0][y]);
  EXPECT_FALSE(m[1][1][y]);
}

TEST(StepMatrix, IdentityDiagonal) {
  auto w = with_identity(weyl_datum(2));
  std::vector<PrimeIdeal> c{pr(w, "t1 - 1"), pr(w, "t2"), pr(w, "1 + (t1-2)^2")};
  auto m = single_step_matrix(c, w);
  const std::size_t one = *w.index_of("One");
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(m[i][i][one]);
}

TEST(Chains, PreserveCoheight) {
  auto w = weyl_datum(2);
  std::vector<PrimeIdeal> c{pr(w, "t2"), pr(w, "t1 - 1"), pr(w, "t2 + 1"), pr(w, "t1 - 3"), pr(w, "1 + (t1-2)^2")};
  for (const auto& r : equiv_reachable(pr(w, "t1"), c, w, 4)) {
    EXPECT_TRUE(verify_chain(r.chain, w));
    for (const auto& q : r.chain.primes) EXPECT_EQ(coheight(q), 1);
  }
  ChainWitness bogus{{pr(w, "t1 - 1"), pr(w, "t1 - 1")}, {*w.index_of("Y1")}};
  EXPECT_FALSE(verify_chain(bogus, w));
}
