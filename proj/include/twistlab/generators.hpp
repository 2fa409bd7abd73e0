#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "twistlab/algebra.hpp"

namespace twistlab {

/// One-unit groupoid of `group` with trivial cocycle, graded by a
/// homomorphism c into gamma. Throws std::invalid_argument if c is not a
/// homomorphism, or not injective while require_injective is set (a
/// non-injective c leaves isotropy in the degree-zero fiber).
GradedTwist group_groupoid(const FiniteGroup& group, const FiniteGroup& gamma, const std::vector<GroupElement>& c,
                           bool require_injective = true);
/// group_groupoid with c = id into the group itself.
GradedTwist group_groupoid(const FiniteGroup& group);

/// Pair groupoid on n units: arrows (i,j) with rng i and src j, (i,j)(j,k) = (i,k).
/// Trivial cocycle and trivial grading.
GradedTwist pair_groupoid(std::size_t n);

/// Transformation groupoid of a free action. action[g][p] is g.p; arrows
/// (g,p) go from p to g.p and are graded by c(g). Throws std::invalid_argument
/// for non-actions, non-free actions and non-injective or non-homomorphic c.
GradedTwist action_groupoid(std::size_t num_points, const FiniteGroup& group,
                            const std::vector<std::vector<std::size_t>>& action, const FiniteGroup& gamma,
                            const std::vector<GroupElement>& c);
/// The left-regular action of the group on itself, graded by c = id.
GradedTwist regular_action_groupoid(const FiniteGroup& group);

using ExponentMatrix = std::array<std::array<long, 2>, 2>;

/// Z/n1 x Z/n2 with sigma(a, b) = exp(2 pi i a^T M b / lcm(n1, n2)) and c = id.
/// Throws std::invalid_argument if M does not give a well-defined phase.
GradedTwist twisted_group(std::size_t n1, std::size_t n2, const ExponentMatrix& m);

/// Multiplies the cocycle by coboundary(b).
GradedTwist perturb_cocycle(const GradedTwist& t, const Cochain& b);
/// Deterministic random unit-modulus cochain, 1 on identity arrows.
Cochain random_cochain(const FiniteGroupoid& g, std::uint64_t seed);
/// perturb_cocycle with random_cochain(seed).
GradedTwist randomize_cocycle(const GradedTwist& t, std::uint64_t seed);

/// Random element with coefficients uniform in [-1,1] + i[-1,1].
AlgebraElement random_element(std::size_t num_arrows, std::mt19937_64& rng);
/// Random nonzero homogeneous normalizer: nonzero coefficients on a random
/// bisection inside one degree fiber. Degree chosen among those with arrows.
AlgebraElement random_homogeneous_normalizer(const GradedTwist& t, std::mt19937_64& rng);

struct NamedTwist {
  std::string name;
  GradedTwist twist;
};

/// The structured corpus: abelian groups of order <= 8 with c = id, pair
/// groupoids n <= 5, free actions, twisted Z2xZ2 and Z3xZ3, plus a few
/// extra shapes (nonabelian Gamma, non-identity gradings, multiple orbits).
std::vector<NamedTwist> base_corpus();
/// base_corpus() with `perturbations` seeded coboundary perturbations of each.
std::vector<NamedTwist> full_corpus(std::size_t perturbations = 5);

}  // namespace twistlab
