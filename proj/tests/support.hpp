#pragma once

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "twistlab/generators.hpp"

namespace twistlab::testing {

inline ArrowIndex arrow(const GradedTwist& t, const std::string& name) {
  const auto a = t.groupoid().find_arrow(name);
  if (!a) throw std::invalid_argument("no arrow " + name);
  return *a;
}

inline AlgebraElement delta(const GradedTwist& t, const std::string& name, Complex scale = 1.0) {
  return AlgebraElement::delta(t.num_arrows(), arrow(t, name), scale);
}

/// Z/2 x Z/2 with sigma((a1,a2),(b1,b2)) = (-1)^{a2 b1}.
inline GradedTwist bilinear_z2xz2() { return twisted_group(2, 2, {{{0, 0}, {1, 0}}}); }

inline ::testing::AssertionResult elements_near(const AlgebraElement& f, const AlgebraElement& g, double tol) {
  if (f.size() != g.size()) return ::testing::AssertionFailure() << "size " << f.size() << " vs " << g.size();
  const double d = distance(f, g);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "distance " << d << " exceeds " << tol;
}

}  // namespace twistlab::testing
