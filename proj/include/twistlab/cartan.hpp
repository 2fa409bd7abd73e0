#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistlab/algebra.hpp"

namespace twistlab {

struct CartanCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<ArrowIndex> witnesses;
};

struct CartanReport {
  /// False when the degree-zero fiber has isotropy; no further checks then.
  bool precondition_ok = true;
  std::optional<ArrowIndex> precondition_witness;
  std::vector<CartanCheck> checks;

  [[nodiscard]] bool passed() const;
};

/// Checks on the concrete algebra that (A, D) is a Gamma-Cartan pair, with
/// D spanned by the unit indicators and A_0 by the indicators of R = c^-1(e):
///   masa               the commutant of D inside A_0 is D (kernel solve)
///   expectation        Delta restricted to A_0 is a faithful conditional
///                      expectation onto D (idempotent, bimodular, positive
///                      definite Gram form)
///   normalizer-span    every delta_a is a homogeneous normalizer and they
///                      span A (dimension count)
///   unit               the sum of unit indicators is a unit for A
CartanReport cartan_check(const GradedTwist& t);

}  // namespace twistlab
