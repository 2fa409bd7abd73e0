#include "support.hpp"
#include "twistlab/cartan.hpp"

using namespace twistlab;
using twistlab::testing::bilinear_z2xz2;

namespace {

const CartanCheck& check(const CartanReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::invalid_argument("no check " + name);
}

}  // namespace

TEST(CartanCheck, PairGroupoidPasses) {
  const auto r = cartan_check(pair_groupoid(3));
  EXPECT_TRUE(r.precondition_ok);
  ASSERT_EQ(r.checks.size(), 4u);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.passed());
}

TEST(CartanCheck, TrivialGradingOnGroupFailsPrecondition) {
  const auto t = group_groupoid(FiniteGroup::cyclic(2), FiniteGroup::trivial(), {0, 0}, false);
  const auto r = cartan_check(t);
  EXPECT_FALSE(r.precondition_ok);
  EXPECT_EQ(r.precondition_witness, std::optional<ArrowIndex>(1));
  EXPECT_FALSE(r.passed());
}

TEST(CartanCheck, BilinearZ2xZ2Passes) {
  const auto r = cartan_check(bilinear_z2xz2());
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(check(r, "masa").passed);
}

TEST(CartanCheck, WholeCorpus) {
  for (const auto& nt : full_corpus(1)) EXPECT_TRUE(cartan_check(nt.twist).passed()) << nt.name;
}

TEST(CartanCheck, CheckNamesAreStable) {
  const auto r = cartan_check(pair_groupoid(2));
  std::vector<std::string> names;
  for (const auto& c : r.checks) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"masa", "expectation", "normalizer-span", "unit"}));
}
