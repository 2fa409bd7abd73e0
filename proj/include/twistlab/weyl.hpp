#pragma once

#include "twistlab/algebra.hpp"

namespace twistlab {

/// (n* n)(x): the squared modulus |n|(x)^2 of a normalizer at x.
double normalizer_density(const GradedTwist& t, const AlgebraElement& n, UnitIndex x);

/// x is in dom(n) iff (n* n)(x) > tol.
bool in_domain(const GradedTwist& t, const AlgebraElement& n, UnitIndex x, double tol = kAlgebraTol);

/// The partial homeomorphism of the unit space induced by a normalizer:
/// the unique y with (n* delta_y n)(x) = (n* n)(x), computed purely from the
/// algebra. Throws std::invalid_argument if x is not in dom(n) and
/// ToleranceError if no unique y satisfies the defining equation.
UnitIndex alpha(const GradedTwist& t, const AlgebraElement& n, UnitIndex x);

/// The pair (n, x) standing for the eigenfunctional
///   psi(a) = Delta(n* a)(x) / |n|(x).
class WeylFunctional {
 public:
  /// Throws std::invalid_argument unless n is a homogeneous normalizer and
  /// (n* n)(x) > 0.
  WeylFunctional(const GradedTwist& t, AlgebraElement normalizer, UnitIndex base);

  [[nodiscard]] const AlgebraElement& normalizer() const noexcept { return normalizer_; }
  [[nodiscard]] UnitIndex base() const noexcept { return base_; }
  [[nodiscard]] GroupElement degree() const noexcept { return degree_; }

 private:
  AlgebraElement normalizer_;
  UnitIndex base_;
  GroupElement degree_;
};

Complex functional_eval(const GradedTwist& t, const WeylFunctional& psi, const AlgebraElement& a);

/// Germ equivalence through the expectation: same base x and Delta(n1* n2)(x)
/// nonzero (G) or strictly positive (Sigma). Throws std::invalid_argument if a
/// pair is not in the domain set (n homogeneous normalizer, (n* n)(x) > 0).
bool germ_equal_G(const GradedTwist& t, const AlgebraElement& n1, UnitIndex x1, const AlgebraElement& n2,
                  UnitIndex x2);
bool germ_equal_Sigma(const GradedTwist& t, const AlgebraElement& n1, UnitIndex x1, const AlgebraElement& n2,
                      UnitIndex x2);

enum class GermRelation { G, Sigma };

/// Germ equivalence straight from the definition: are there diagonal d, d'
/// with n1 d = n2 d' and d(x), d'(x) nonzero (G) or positive (Sigma)?
/// Solved as a two-unknown kernel problem on the column n delta_x.
bool germ_equal_via_factorization(const GradedTwist& t, const AlgebraElement& n1, UnitIndex x1,
                                  const AlgebraElement& n2, UnitIndex x2, GermRelation relation);

}  // namespace twistlab
