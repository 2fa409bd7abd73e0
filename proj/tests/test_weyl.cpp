#include "support.hpp"
#include "twistlab/weyl.hpp"

using namespace twistlab;
using twistlab::testing::arrow;
using twistlab::testing::bilinear_z2xz2;
using twistlab::testing::delta;
using twistlab::testing::elements_near;

namespace {

std::vector<Complex> random_diagonal(std::size_t units, std::mt19937_64& rng, bool positive) {
  std::uniform_real_distribution<double> u(0.2, 2.0);
  std::vector<Complex> d(units);
  for (auto& v : d) v = positive ? Complex(u(rng), 0.0) : std::polar(u(rng), u(rng) * 3.0);
  return d;
}

}  // namespace

TEST(Alpha, BisectionMapsSourceToRange) {
  const auto t = pair_groupoid(3);
  EXPECT_EQ(alpha(t, delta(t, "(2,1)"), 1), 2u);
  const auto g = group_groupoid(FiniteGroup::cyclic(5));
  EXPECT_EQ(alpha(g, delta(g, "3"), 0), 0u);
}

TEST(Alpha, OutsideDomainThrows) {
  const auto t = pair_groupoid(3);
  EXPECT_THROW(alpha(t, delta(t, "(2,1)"), 0), std::invalid_argument);
  EXPECT_THROW(alpha(t, delta(t, "(2,1)"), 3), std::out_of_range);
}

TEST(Alpha, DefiningEquationOnRandomNormalizers) {
  std::mt19937_64 rng(30);
  for (const auto& nt : full_corpus(1)) {
    const auto& t = nt.twist;
    const auto& g = t.groupoid();
    for (int k = 0; k < 4; ++k) {
      const auto n = random_homogeneous_normalizer(t, rng);
      const auto ns = adjoint(t, n);
      for (UnitIndex x = 0; x < t.num_units(); ++x) {
        if (!in_domain(t, n, x)) continue;
        const auto y = alpha(t, n, x);
        // the unique arrow of supp(n) over x ends at y
        for (auto a : n.support())
          if (g.src(a) == x) EXPECT_EQ(g.rng(a), y) << nt.name;
        for (UnitIndex z = 0; z < t.num_units(); ++z) {
          const auto lhs = diagonal_value(t, convolve(t, convolve(t, ns, unit_indicator(t, z)), n), x);
          const double rhs = (z == y ? 1.0 : 0.0) * normalizer_density(t, n, x);
          EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-10) << nt.name;
        }
      }
    }
  }
}

TEST(Functional, CanonicalValues) {
  const auto t = randomize_cocycle(pair_groupoid(3), 5);
  const auto& g = t.groupoid();
  for (ArrowIndex a = 0; a < t.num_arrows(); ++a) {
    const WeylFunctional psi(t, AlgebraElement::delta(9, a), g.src(a));
    EXPECT_EQ(psi.degree(), 0u);
    for (ArrowIndex b = 0; b < t.num_arrows(); ++b)
      EXPECT_NEAR(std::abs(functional_eval(t, psi, AlgebraElement::delta(9, b)) - (a == b ? 1.0 : 0.0)), 0.0, 1e-12);
  }
}

TEST(Functional, ConstructorPreconditions) {
  const auto t = pair_groupoid(3);
  EXPECT_THROW(WeylFunctional(t, delta(t, "(0,1)"), 0), std::invalid_argument);
  EXPECT_THROW(WeylFunctional(t, delta(t, "(0,1)") + delta(t, "(0,2)"), 1), std::invalid_argument);
  EXPECT_THROW(WeylFunctional(t, delta(t, "(0,1)"), 5), std::invalid_argument);
}

TEST(Functional, DiagonalScalingAndEigenLaw) {
  std::mt19937_64 rng(32);
  for (const auto& nt : full_corpus(1)) {
    const auto& t = nt.twist;
    const auto n = random_homogeneous_normalizer(t, rng);
    for (UnitIndex x = 0; x < t.num_units(); ++x) {
      if (!in_domain(t, n, x)) continue;
      const WeylFunctional psi(t, n, x);
      const auto d = diagonal_element(t, random_diagonal(t.num_units(), rng, true));
      const WeylFunctional scaled(t, convolve(t, n, d), x);
      const auto d1 = random_diagonal(t.num_units(), rng, false);
      const auto d2 = random_diagonal(t.num_units(), rng, false);
      const auto y = alpha(t, n, x);
      for (ArrowIndex b = 0; b < t.num_arrows(); ++b) {
        const auto a = AlgebraElement::delta(t.num_arrows(), b);
        const Complex v = functional_eval(t, psi, a);
        EXPECT_NEAR(std::abs(functional_eval(t, scaled, a) - v), 0.0, 1e-12) << nt.name;
        const auto sandwiched = convolve(t, diagonal_element(t, d1), convolve(t, a, diagonal_element(t, d2)));
        EXPECT_NEAR(std::abs(functional_eval(t, psi, sandwiched) - d1[y] * v * d2[x]), 0.0, 1e-12) << nt.name;
      }
    }
  }
}

TEST(Germs, Examples) {
  const auto t = bilinear_z2xz2();
  const auto g = delta(t, "(1,1)");
  const auto h = delta(t, "(0,1)");
  EXPECT_TRUE(germ_equal_G(t, g, 0, g, 0));
  EXPECT_TRUE(germ_equal_Sigma(t, g, 0, g, 0));
  EXPECT_FALSE(germ_equal_G(t, g, 0, h, 0));
  EXPECT_FALSE(germ_equal_Sigma(t, g, 0, h, 0));
  const auto gi = delta(t, "(1,1)", Complex(0.0, 1.0));
  EXPECT_TRUE(germ_equal_G(t, g, 0, gi, 0));
  EXPECT_FALSE(germ_equal_Sigma(t, g, 0, gi, 0));

  using R = GermRelation;
  const auto g2 = delta(t, "(1,1)", 2.0);
  const auto gm = delta(t, "(1,1)", -1.0);
  EXPECT_TRUE(germ_equal_via_factorization(t, g, 0, g2, 0, R::Sigma));
  EXPECT_TRUE(germ_equal_Sigma(t, g, 0, g2, 0));
  EXPECT_FALSE(germ_equal_via_factorization(t, g, 0, gm, 0, R::Sigma));
  EXPECT_TRUE(germ_equal_via_factorization(t, g, 0, gm, 0, R::G));
  EXPECT_FALSE(germ_equal_via_factorization(t, g, 0, gi, 0, R::Sigma));
  EXPECT_TRUE(germ_equal_via_factorization(t, g, 0, gi, 0, R::G));
}

TEST(Germs, DifferentBasesAreDifferentGerms) {
  const auto t = pair_groupoid(3);
  const auto n = delta(t, "(0,1)") + delta(t, "(1,0)");
  EXPECT_FALSE(germ_equal_G(t, n, 0, n, 1));
  EXPECT_TRUE(germ_equal_G(t, n, 1, delta(t, "(0,1)"), 1));
  EXPECT_TRUE(germ_equal_Sigma(t, n, 0, delta(t, "(1,0)"), 0));
  EXPECT_THROW(germ_equal_G(t, n, 2, n, 2), std::invalid_argument);
  EXPECT_THROW(germ_equal_Sigma(t, delta(t, "(0,1)") + delta(t, "(0,2)"), 1, n, 1), std::invalid_argument);
}

TEST(Germs, CriteriaAgreeOnRandomNormalizers) {
  std::mt19937_64 rng(34);
  for (const auto& nt : full_corpus(1)) {
    const auto& t = nt.twist;
    for (int k = 0; k < 6; ++k) {
      const auto n1 = random_homogeneous_normalizer(t, rng);
      const auto n2 = random_homogeneous_normalizer(t, rng);
      for (UnitIndex x = 0; x < t.num_units(); ++x) {
        if (!in_domain(t, n1, x) || !in_domain(t, n2, x)) continue;
        EXPECT_EQ(germ_equal_G(t, n1, x, n2, x), germ_equal_via_factorization(t, n1, x, n2, x, GermRelation::G));
        EXPECT_EQ(germ_equal_Sigma(t, n1, x, n2, x),
                  germ_equal_via_factorization(t, n1, x, n2, x, GermRelation::Sigma));
      }
    }
  }
}

TEST(Germs, EveryNormalizerGermIsCanonical) {
  std::mt19937_64 rng(36);
  for (const auto& nt : full_corpus(1)) {
    const auto& t = nt.twist;
    const auto& g = t.groupoid();
    const auto n = random_homogeneous_normalizer(t, rng);
    for (UnitIndex x = 0; x < t.num_units(); ++x) {
      if (!in_domain(t, n, x)) continue;
      std::size_t matches = 0;
      for (ArrowIndex a = 0; a < t.num_arrows(); ++a) {
        if (g.src(a) != x) continue;
        const bool same = germ_equal_G(t, n, x, AlgebraElement::delta(t.num_arrows(), a), x);
        matches += same;
        if (same) EXPECT_NE(n[a], Complex(0.0)) << nt.name;
      }
      EXPECT_EQ(matches, 1u) << nt.name;
    }
  }
}

TEST(Normalizers, ExpectationIntertwining) {
  std::mt19937_64 rng(38);
  for (const auto& nt : full_corpus(1)) {
    const auto& t = nt.twist;
    for (int k = 0; k < 5; ++k) {
      const auto n = random_homogeneous_normalizer(t, rng);
      const auto a = random_element(t.num_arrows(), rng);
      const auto ns = adjoint(t, n);
      const auto lhs = convolve(t, ns, convolve(t, delta_expectation(t, a), n));
      const auto rhs = delta_expectation(t, convolve(t, ns, convolve(t, a, n)));
      EXPECT_TRUE(elements_near(lhs, rhs, 1e-10)) << nt.name;
    }
  }
}

TEST(Normalizers, DiagonalPartFixesItsBase) {
  std::mt19937_64 rng(40);
  for (const auto& nt : full_corpus(1)) {
    const auto& t = nt.twist;
    for (int k = 0; k < 5; ++k) {
      const auto n = random_homogeneous_normalizer(t, rng);
      for (UnitIndex x = 0; x < t.num_units(); ++x) {
        if (std::abs(diagonal_value(t, n, x)) == 0.0) continue;
        EXPECT_EQ(alpha(t, n, x), x);
        const auto h = unit_indicator(t, x);
        const auto nh = convolve(t, n, h);
        EXPECT_TRUE(elements_near(nh, convolve(t, h, n), 1e-12));
        for (auto a : nh.support()) EXPECT_EQ(a, t.groupoid().unit_arrow(x));
      }
    }
  }
}
