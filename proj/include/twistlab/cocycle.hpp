#pragma once

#include <optional>
#include <vector>

#include "twistlab/groupoid.hpp"
#include "twistlab/types.hpp"

namespace twistlab {

/// Circle-valued function on composable pairs, stored densely over
/// arrows x arrows (entries on non-composable pairs are ignored and kept 1).
class TwoCocycle {
 public:
  TwoCocycle() = default;
  /// The trivial cocycle on a groupoid with num_arrows arrows.
  explicit TwoCocycle(std::size_t num_arrows);
  TwoCocycle(std::size_t num_arrows, std::vector<Complex> values);

  [[nodiscard]] std::size_t num_arrows() const noexcept { return n_; }
  [[nodiscard]] Complex operator()(ArrowIndex a, ArrowIndex b) const { return values_[a * n_ + b]; }
  [[nodiscard]] const std::vector<Complex>& values() const noexcept { return values_; }

  /// Copy with one value replaced.
  [[nodiscard]] TwoCocycle with_value(ArrowIndex a, ArrowIndex b, Complex value) const;
  /// Pointwise product.
  [[nodiscard]] TwoCocycle times(const TwoCocycle& other) const;
  /// Pointwise complex conjugate (the inverse cocycle).
  [[nodiscard]] TwoCocycle conjugate() const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> values_;
};

/// Empty iff sigma has unit modulus, is normalized on identity arrows and
/// satisfies the cocycle identity on every composable triple (within tol).
/// Violations: "unit-modulus", "normalization", "cocycle-identity".
Report validate_cocycle(const FiniteGroupoid& g, const TwoCocycle& sigma, double tol = kAlgebraTol);

/// Unit-modulus function on arrows, equal to 1 on identity arrows.
using Cochain = std::vector<Complex>;

/// sigma_b(a, b) = b(a) b(b) conj(b(ab)). Throws std::invalid_argument if
/// b is not unit-modulus or not normalized on identity arrows.
TwoCocycle coboundary(const FiniteGroupoid& g, const Cochain& b);

/// Looks for b with sigma1 = sigma2 * coboundary(b) on every composable pair.
///
/// Per orbit, fixes a spanning tree of arrows out of a base unit and reduces
/// the problem to the isotropy group H there. On H the difference cocycle
/// rho is a coboundary iff the twisted group algebra C^rho H has a
/// one-dimensional representation; that representation is found as a joint
/// eigenvector of the left-regular operators on the subspace where all
/// their group commutators act trivially. The candidate is propagated along
/// the tree and checked on every composable pair; nullopt if the check fails.
std::optional<Cochain> cohomologous(const FiniteGroupoid& g, const TwoCocycle& sigma1, const TwoCocycle& sigma2,
                                    double tol = 1e-8);

}  // namespace twistlab
