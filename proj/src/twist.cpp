#include "twistlab/twist.hpp"

#include <stdexcept>
#include <string>

namespace twistlab {

Report validate_grading(const FiniteGroupoid& g, const Grading& c) {
  Report report;
  if (c.degree.size() != g.num_arrows()) {
    report.add("size", {}, "grading has " + std::to_string(c.degree.size()) + " degrees for " +
                               std::to_string(g.num_arrows()) + " arrows");
    return report;
  }
  bool in_range = true;
  for (ArrowIndex a = 0; a < g.num_arrows(); ++a)
    if (c.degree[a] >= c.group.size()) {
      report.add("degree-range", {a}, "degree of " + g.arrow_name(a) + " is not an element of Gamma");
      in_range = false;
    }
  if (!in_range) return report;
  const auto& gamma = c.group;
  for (ArrowIndex a = 0; a < g.num_arrows(); ++a) {
    for (ArrowIndex b : g.arrows_with_range(g.src(a))) {
      const auto ab = g.compose(a, b);
      if (ab == kNone) continue;
      if (c.degree[ab] != gamma.mul(c.degree[a], c.degree[b]))
        report.add("homomorphism", {a, b},
                   "c(" + g.arrow_name(a) + "*" + g.arrow_name(b) + ") != c(" + g.arrow_name(a) + ")c(" +
                       g.arrow_name(b) + ")");
    }
    if (g.is_unit_arrow(a) && c.degree[a] != gamma.identity())
      report.add("unit-degree", {a}, "identity arrow " + g.arrow_name(a) + " has nonzero degree");
    const auto ai = g.inverse(a);
    if (ai != kNone && c.degree[ai] != gamma.inv(c.degree[a]))
      report.add("inverse-degree", {a, ai}, "c(" + g.arrow_name(a) + "^-1) != c(" + g.arrow_name(a) + ")^-1");
  }
  return report;
}

GradedTwist::GradedTwist(FiniteGroupoid groupoid, TwoCocycle cocycle, Grading grading)
    : groupoid_(std::move(groupoid)), cocycle_(std::move(cocycle)), grading_(std::move(grading)) {
  if (cocycle_.num_arrows() != groupoid_.num_arrows())
    throw std::invalid_argument("GradedTwist: cocycle size does not match groupoid");
  if (grading_.degree.size() != groupoid_.num_arrows())
    throw std::invalid_argument("GradedTwist: grading size does not match groupoid");
  for (auto d : grading_.degree)
    if (d >= grading_.group.size()) throw std::invalid_argument("GradedTwist: degree outside Gamma");
}

GradedTwist GradedTwist::with_cocycle(TwoCocycle cocycle) const { return GradedTwist(groupoid_, std::move(cocycle), grading_); }

Report validate_twist(const GradedTwist& t) {
  Report report = validate_groupoid(t.groupoid());
  if (!report.ok()) return report;
  report.append(validate_cocycle(t.groupoid(), t.cocycle()));
  report.append(validate_grading(t.groupoid(), t.grading()));
  return report;
}

Report validate_cocycle(const GradedTwist& t, double tol) { return validate_cocycle(t.groupoid(), t.cocycle(), tol); }

EffectivenessResult is_effective_zero_fiber(const GradedTwist& t) {
  const auto& g = t.groupoid();
  for (ArrowIndex a = 0; a < g.num_arrows(); ++a)
    if (t.degree(a) == t.gamma().identity() && g.src(a) == g.rng(a) && !g.is_unit_arrow(a)) return {false, a};
  return {true, std::nullopt};
}

}  // namespace twistlab
