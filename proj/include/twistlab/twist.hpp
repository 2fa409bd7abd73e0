#pragma once

#include <optional>
#include <vector>

#include "twistlab/cocycle.hpp"
#include "twistlab/group.hpp"
#include "twistlab/groupoid.hpp"

namespace twistlab {

/// A degree map c: arrows -> Gamma.
struct Grading {
  FiniteGroup group = FiniteGroup::trivial();
  std::vector<GroupElement> degree;
};

/// Empty iff c is a groupoid homomorphism into Gamma.
/// Violations: "size", "degree-range", "homomorphism", "unit-degree", "inverse-degree".
Report validate_grading(const FiniteGroupoid& g, const Grading& c);

/// A finite groupoid with a 2-cocycle (the twist T x_sigma G) and a grading.
/// The grading of the twist itself is c composed with the quotient map.
class GradedTwist {
 public:
  GradedTwist() = default;
  GradedTwist(FiniteGroupoid groupoid, TwoCocycle cocycle, Grading grading);

  [[nodiscard]] const FiniteGroupoid& groupoid() const noexcept { return groupoid_; }
  [[nodiscard]] const TwoCocycle& cocycle() const noexcept { return cocycle_; }
  [[nodiscard]] const Grading& grading() const noexcept { return grading_; }
  [[nodiscard]] const FiniteGroup& gamma() const noexcept { return grading_.group; }
  [[nodiscard]] GroupElement degree(ArrowIndex a) const { return grading_.degree[a]; }
  [[nodiscard]] std::size_t num_arrows() const noexcept { return groupoid_.num_arrows(); }
  [[nodiscard]] std::size_t num_units() const noexcept { return groupoid_.num_units(); }
  [[nodiscard]] Complex sigma(ArrowIndex a, ArrowIndex b) const { return cocycle_(a, b); }

  [[nodiscard]] GradedTwist with_cocycle(TwoCocycle cocycle) const;

 private:
  FiniteGroupoid groupoid_;
  TwoCocycle cocycle_;
  Grading grading_;
};

/// Groupoid, cocycle and grading reports, concatenated. The cocycle and
/// grading are only checked once the groupoid itself is valid.
Report validate_twist(const GradedTwist& t);

Report validate_cocycle(const GradedTwist& t, double tol = kAlgebraTol);

struct EffectivenessResult {
  bool effective = true;
  /// A non-identity arrow of c^-1(e) with src == rng, when not effective.
  std::optional<ArrowIndex> witness;
};

/// Whether the degree-zero fiber R = c^-1(e) is principal.
EffectivenessResult is_effective_zero_fiber(const GradedTwist& t);

}  // namespace twistlab
