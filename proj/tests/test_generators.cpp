#include <set>

#include "support.hpp"

using namespace twistlab;
using twistlab::testing::bilinear_z2xz2;

TEST(GroupGroupoid, Examples) {
  for (std::size_t n : {2, 3}) {
    const auto t = group_groupoid(FiniteGroup::cyclic(n));
    EXPECT_TRUE(validate_twist(t).ok());
    EXPECT_TRUE(is_effective_zero_fiber(t).effective);
    EXPECT_EQ(t.num_units(), 1u);
    EXPECT_EQ(fixed_point_basis(t), std::vector<ArrowIndex>{0});
  }
  const auto inc = group_groupoid(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4), {0, 2});
  EXPECT_TRUE(validate_twist(inc).ok());
  EXPECT_TRUE(is_effective_zero_fiber(inc).effective);
}

TEST(GroupGroupoid, RejectsBadGradings) {
  const auto z4 = FiniteGroup::cyclic(4);
  EXPECT_THROW(group_groupoid(z4, FiniteGroup::cyclic(2), {0, 1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(group_groupoid(FiniteGroup::cyclic(2), z4, {0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(group_groupoid(z4, FiniteGroup::cyclic(2), {0, 1, 0, 1}, false));
}

TEST(PairGroupoid, Examples) {
  const auto one = pair_groupoid(1);
  EXPECT_EQ(one.num_units(), 1u);
  EXPECT_EQ(one.num_arrows(), 1u);
  const auto three = pair_groupoid(3);
  EXPECT_EQ(three.num_arrows(), 9u);
  EXPECT_TRUE(validate_twist(three).ok());
  EXPECT_THROW(pair_groupoid(0), std::invalid_argument);
}

TEST(ActionGroupoid, Examples) {
  const auto z2 = FiniteGroup::cyclic(2);
  const auto z3 = FiniteGroup::cyclic(3);
  const auto swap = action_groupoid(2, z2, {{0, 1}, {1, 0}}, z2, {0, 1});
  EXPECT_EQ(swap.num_arrows(), 4u);
  EXPECT_TRUE(validate_twist(swap).ok());
  const auto cyc = action_groupoid(3, z3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, z3, {0, 1, 2});
  EXPECT_EQ(cyc.num_arrows(), 9u);
  EXPECT_TRUE(validate_twist(cyc).ok());
  EXPECT_TRUE(is_effective_zero_fiber(cyc).effective);
  // arrow (g, p) runs from p to g.p with degree c(g)
  const auto a = *cyc.groupoid().find_arrow("(2,2)");
  EXPECT_EQ(cyc.groupoid().src(a), 2u);
  EXPECT_EQ(cyc.groupoid().rng(a), 1u);
  EXPECT_EQ(cyc.degree(a), 2u);
}

TEST(ActionGroupoid, RejectsNonFreeAndNonActions) {
  const auto z2 = FiniteGroup::cyclic(2);
  EXPECT_THROW(action_groupoid(3, z2, {{0, 1, 2}, {1, 0, 2}}, z2, {0, 1}), std::invalid_argument);
  EXPECT_THROW(action_groupoid(2, z2, {{1, 0}, {1, 0}}, z2, {0, 1}), std::invalid_argument);
  EXPECT_THROW(action_groupoid(2, z2, {{0, 1}}, z2, {0, 1}), std::invalid_argument);
  EXPECT_THROW(action_groupoid(2, z2, {{0, 1}, {1, 0}}, FiniteGroup::trivial(), {0, 0}), std::invalid_argument);
}

TEST(TwistedGroup, Examples) {
  const auto zero = twisted_group(2, 2, {{{0, 0}, {0, 0}}});
  for (auto v : zero.cocycle().values()) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-15);
  const auto t = bilinear_z2xz2();
  EXPECT_TRUE(validate_twist(t).ok());
  EXPECT_EQ(center_dimension(t), 1u);
  EXPECT_EQ(center_dimension(zero), 4u);
  const auto z3 = twisted_group(3, 3, {{{0, 0}, {1, 0}}});
  EXPECT_TRUE(validate_twist(z3).ok());
  EXPECT_EQ(center_dimension(z3), 1u);
  EXPECT_THROW(twisted_group(2, 4, {{{0, 0}, {1, 0}}}), std::invalid_argument);
  EXPECT_THROW(twisted_group(0, 2, {}), std::invalid_argument);
}

TEST(RandomizeCocycle, PairGroupoid) {
  const auto t = pair_groupoid(3);
  const auto p = randomize_cocycle(t, 2024);
  EXPECT_TRUE(validate_twist(p).ok());
  bool changed = false;
  for (std::size_t i = 0; i < p.cocycle().values().size(); ++i)
    changed |= std::abs(p.cocycle().values()[i] - 1.0) > 1e-6;
  EXPECT_TRUE(changed);
  EXPECT_TRUE(cohomologous(t.groupoid(), p.cocycle(), TwoCocycle(9)).has_value());
  // deterministic in the seed
  EXPECT_EQ(randomize_cocycle(t, 2024).cocycle().values(), p.cocycle().values());
  EXPECT_NE(randomize_cocycle(t, 2025).cocycle().values(), p.cocycle().values());
}

TEST(RandomizeCocycle, UnitCochainLeavesTwistUnchanged) {
  const auto t = bilinear_z2xz2();
  const auto p = perturb_cocycle(t, Cochain(4, 1.0));
  EXPECT_EQ(p.cocycle().values(), t.cocycle().values());
}

TEST(Corpus, EveryInstanceIsValidAndEffective) {
  const auto corpus = full_corpus(5);
  EXPECT_EQ(corpus.size(), base_corpus().size() * 6);
  std::set<std::string> names;
  for (const auto& nt : corpus) {
    EXPECT_TRUE(names.insert(nt.name).second) << nt.name;
    EXPECT_TRUE(validate_twist(nt.twist).ok()) << nt.name;
    EXPECT_TRUE(validate_cocycle(nt.twist).ok()) << nt.name;
    EXPECT_TRUE(is_effective_zero_fiber(nt.twist).effective) << nt.name;
  }
}

TEST(Corpus, CoversTheRequiredFamilies) {
  std::set<std::string> names;
  for (const auto& nt : base_corpus()) names.insert(nt.name);
  for (const char* n : {"group:Z1", "group:Z2", "group:Z3", "group:Z4", "group:Z2xZ2", "group:Z5", "group:Z6",
                        "group:Z7", "group:Z8", "group:Z2xZ4", "group:Z2xZ2xZ2", "pair:1", "pair:5",
                        "action:Z2-swap", "action:Z3-cyclic", "twisted:Z2xZ2", "twisted:Z3xZ3"})
    EXPECT_TRUE(names.count(n)) << n;
}

TEST(RandomNormalizer, IsHomogeneousNormalizer) {
  std::mt19937_64 rng(60);
  for (const auto& nt : base_corpus())
    for (int k = 0; k < 10; ++k) {
      const auto n = random_homogeneous_normalizer(nt.twist, rng);
      EXPECT_FALSE(n.is_zero());
      EXPECT_TRUE(is_homogeneous_normalizer(nt.twist, n).has_value()) << nt.name;
    }
}
