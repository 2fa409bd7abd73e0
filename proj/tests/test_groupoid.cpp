#include <algorithm>
#include <set>
#include <tuple>

#include "support.hpp"

using namespace twistlab;
using twistlab::testing::arrow;

namespace {

std::set<std::string> rules(const Report& r) {
  std::set<std::string> out;
  for (const auto& v : r.violations) out.insert(v.rule);
  return out;
}

using Triple = std::tuple<ArrowIndex, ArrowIndex, ArrowIndex>;

// Independent associativity scan straight from the tables.
std::set<Triple> associativity_oracle(const FiniteGroupoid& g) {
  std::set<Triple> bad;
  const auto n = g.num_arrows();
  const auto& c = g.composition_table();
  for (ArrowIndex a = 0; a < n; ++a)
    for (ArrowIndex b = 0; b < n; ++b)
      for (ArrowIndex d = 0; d < n; ++d) {
        const auto ab = c[a * n + b];
        const auto bd = c[b * n + d];
        if (ab == kNone || bd == kNone) continue;
        const auto left = c[ab * n + d];
        const auto right = c[a * n + bd];
        if (left != right) bad.insert({a, b, d});
      }
  return bad;
}

}  // namespace

TEST(ValidateGroupoid, GroupZ2) {
  const auto t = group_groupoid(FiniteGroup::cyclic(2));
  EXPECT_TRUE(validate_groupoid(t.groupoid()).ok());
}

TEST(ValidateGroupoid, PairGroupoid) {
  const auto t = pair_groupoid(3);
  EXPECT_EQ(t.num_arrows(), 9u);
  EXPECT_TRUE(validate_groupoid(t.groupoid()).ok());
  EXPECT_TRUE(associativity_oracle(t.groupoid()).empty());
}

TEST(ValidateGroupoid, CorruptedCompositionMatchesTripleScan) {
  const auto t = pair_groupoid(3);
  const auto& g = t.groupoid();
  const auto bad = g.with_composition(arrow(t, "(0,1)"), arrow(t, "(1,2)"), arrow(t, "(0,0)"));
  const auto report = validate_groupoid(bad);
  ASSERT_FALSE(report.ok());
  const auto names = rules(report);
  EXPECT_TRUE(names.count("associativity"));
  EXPECT_TRUE(names.count("composition-endpoints"));

  std::set<Triple> reported;
  for (const auto& v : report.violations)
    if (v.rule == "associativity") {
      ASSERT_EQ(v.witnesses.size(), 3u);
      reported.insert({v.witnesses[0], v.witnesses[1], v.witnesses[2]});
    }
  const auto oracle = associativity_oracle(bad);
  EXPECT_FALSE(oracle.empty());
  EXPECT_EQ(reported, oracle);
}

TEST(ValidateGroupoid, CorruptedInverse) {
  const auto t = pair_groupoid(2);
  const auto& g = t.groupoid();
  // (0,1)(1,0) now lands on (0,1) instead of the identity at 0
  const auto bad = g.with_composition(arrow(t, "(0,1)"), arrow(t, "(1,0)"), arrow(t, "(0,1)"));
  const auto names = rules(validate_groupoid(bad));
  EXPECT_TRUE(names.count("inverse") || names.count("composition-endpoints"));
}

TEST(ValidateGroupoid, MissingComposableEntry) {
  const auto t = pair_groupoid(2);
  const auto bad = t.groupoid().with_composition(arrow(t, "(0,1)"), arrow(t, "(1,1)"), kNone);
  const auto report = validate_groupoid(bad);
  ASSERT_FALSE(report.ok());
  EXPECT_TRUE(rules(report).count("composability"));
  bool witnessed = false;
  for (const auto& v : report.violations)
    if (v.rule == "composability" && v.witnesses == std::vector<std::size_t>{arrow(t, "(0,1)"), arrow(t, "(1,1)")})
      witnessed = true;
  EXPECT_TRUE(witnessed);
}

TEST(ValidateGroupoid, DefinedNonComposableEntry) {
  const auto t = pair_groupoid(2);
  const auto bad = t.groupoid().with_composition(arrow(t, "(0,1)"), arrow(t, "(0,0)"), arrow(t, "(0,0)"));
  EXPECT_TRUE(rules(validate_groupoid(bad)).count("composability"));
}

TEST(ValidateGroupoid, UnitEmbedding) {
  // a one-unit groupoid whose declared identity arrow is not an identity
  FiniteGroupoid g({"x"}, {"e", "a"}, {0, 0}, {0, 0}, {0, 1, 1, 0}, {0, 1}, {1});
  EXPECT_FALSE(validate_groupoid(g).ok());
}

TEST(ValidateGroupoid, EmptyAndSingleArrow) {
  FiniteGroupoid empty({}, {}, {}, {}, {}, {}, {});
  EXPECT_TRUE(validate_groupoid(empty).ok());
  EXPECT_EQ(empty.num_arrows(), 0u);
  const auto one = pair_groupoid(1);
  EXPECT_TRUE(validate_groupoid(one.groupoid()).ok());
  EXPECT_EQ(one.num_arrows(), 1u);
}

TEST(Groupoid, Accessors) {
  const auto t = pair_groupoid(3);
  const auto& g = t.groupoid();
  const auto a = arrow(t, "(2,1)");
  EXPECT_EQ(g.rng(a), 2u);
  EXPECT_EQ(g.src(a), 1u);
  EXPECT_EQ(g.inverse(a), arrow(t, "(1,2)"));
  EXPECT_EQ(g.compose(a, arrow(t, "(1,0)")), arrow(t, "(2,0)"));
  EXPECT_EQ(g.compose(a, arrow(t, "(2,0)")), kNone);
  EXPECT_TRUE(g.is_unit_arrow(arrow(t, "(1,1)")));
  EXPECT_EQ(g.unit_of_arrow(arrow(t, "(1,1)")), 1u);
  EXPECT_EQ(g.arrows_with_source(0).size(), 3u);
  for (auto b : g.arrows_with_source(0)) EXPECT_EQ(g.src(b), 0u);
  EXPECT_EQ(g.find_unit("(2,2)"), std::optional<UnitIndex>(2));
  EXPECT_FALSE(g.find_arrow("(3,3)").has_value());
}

TEST(Groupoid, ConstructorRejectsBadShapes) {
  EXPECT_THROW(FiniteGroupoid({"x"}, {"e"}, {0}, {0}, {0, 0}, {0}, {0}), std::invalid_argument);
  EXPECT_THROW(FiniteGroupoid({"x"}, {"e"}, {1}, {0}, {0}, {0}, {0}), std::invalid_argument);
}

TEST(Bisection, PairGroupoid) {
  const auto t = pair_groupoid(3);
  const auto& g = t.groupoid();
  const std::vector<ArrowIndex> good{arrow(t, "(1,2)"), arrow(t, "(2,1)")};
  const std::vector<ArrowIndex> bad_src{arrow(t, "(1,2)"), arrow(t, "(0,2)")};
  const std::vector<ArrowIndex> bad_rng{arrow(t, "(1,2)"), arrow(t, "(1,0)")};
  EXPECT_TRUE(is_bisection(g, good));
  EXPECT_FALSE(is_bisection(g, bad_src));
  EXPECT_FALSE(is_bisection(g, bad_rng));
  EXPECT_NO_THROW(Bisection(g, good));
  EXPECT_THROW(Bisection(g, bad_src), std::invalid_argument);
  const Bisection b(g, good);
  EXPECT_EQ(b.over_source(g, 2), std::optional<ArrowIndex>(arrow(t, "(1,2)")));
  EXPECT_FALSE(b.over_source(g, 0).has_value());
}

TEST(Orbits, ActionWithTwoOrbits) {
  const auto z2 = FiniteGroup::cyclic(2);
  const auto t = action_groupoid(4, z2, {{0, 1, 2, 3}, {1, 0, 3, 2}}, z2, {0, 1});
  const auto o = orbits(t.groupoid());
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0], (std::vector<UnitIndex>{0, 1}));
  EXPECT_EQ(o[1], (std::vector<UnitIndex>{2, 3}));
  EXPECT_EQ(orbits(pair_groupoid(4).groupoid()).size(), 1u);
}

TEST(Grading, ValidateAndEffectiveness) {
  const auto z3 = group_groupoid(FiniteGroup::cyclic(3));
  EXPECT_TRUE(validate_grading(z3.groupoid(), z3.grading()).ok());
  EXPECT_TRUE(is_effective_zero_fiber(z3).effective);

  const auto z2 = group_groupoid(FiniteGroup::cyclic(2), FiniteGroup::trivial(), {0, 0}, false);
  const auto eff = is_effective_zero_fiber(z2);
  EXPECT_FALSE(eff.effective);
  EXPECT_EQ(eff.witness, std::optional<ArrowIndex>(1));

  EXPECT_TRUE(is_effective_zero_fiber(pair_groupoid(3)).effective);

  Grading broken = z3.grading();
  broken.degree[1] = 2;  // c(1) = 2 but c(1+1) = c(2) = 2 != 4 = 1
  const auto report = validate_grading(z3.groupoid(), broken);
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(rules(report).count("homomorphism"));
  broken.degree[0] = 1;
  EXPECT_TRUE(rules(validate_grading(z3.groupoid(), broken)).count("unit-degree"));
}

TEST(Grading, EffectivenessMatchesBruteForce) {
  for (const auto& nt : base_corpus()) {
    const auto& t = nt.twist;
    const auto& g = t.groupoid();
    bool principal = true;
    for (ArrowIndex a = 0; a < t.num_arrows(); ++a)
      if (t.degree(a) == t.gamma().identity() && g.src(a) == g.rng(a) && !g.is_unit_arrow(a)) principal = false;
    EXPECT_EQ(is_effective_zero_fiber(t).effective, principal) << nt.name;
  }
  const auto z4 = group_groupoid(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2), {0, 1, 0, 1}, false);
  EXPECT_FALSE(is_effective_zero_fiber(z4).effective);
  EXPECT_EQ(is_effective_zero_fiber(z4).witness, std::optional<ArrowIndex>(2));
}
