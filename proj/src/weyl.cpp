#include "twistlab/weyl.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twistlab {

double normalizer_density(const GradedTwist& t, const AlgebraElement& n, UnitIndex x) {
  return diagonal_value(t, convolve(t, adjoint(t, n), n), x).real();
}

bool in_domain(const GradedTwist& t, const AlgebraElement& n, UnitIndex x, double tol) {
  return normalizer_density(t, n, x) > tol;
}

UnitIndex alpha(const GradedTwist& t, const AlgebraElement& n, UnitIndex x) {
  if (x >= t.num_units()) throw std::out_of_range("alpha: unknown unit");
  const double density = normalizer_density(t, n, x);
  if (density <= kAlgebraTol) throw std::invalid_argument("alpha: unit " + t.groupoid().unit_name(x) + " is not in dom(n)");
  const auto ns = adjoint(t, n);
  UnitIndex found = kNone;
  for (UnitIndex y = 0; y < t.num_units(); ++y) {
    const Complex v = diagonal_value(t, convolve(t, convolve(t, ns, unit_indicator(t, y)), n), x);
    if (std::abs(v) <= kAlgebraTol) continue;
    if (found != kNone || std::abs(v - density) > kAlgebraTol * std::max(1.0, density))
      throw ToleranceError("alpha: defining equation has no unique solution at " + t.groupoid().unit_name(x));
    found = y;
  }
  if (found == kNone) throw ToleranceError("alpha: defining equation has no solution");
  return found;
}

WeylFunctional::WeylFunctional(const GradedTwist& t, AlgebraElement normalizer, UnitIndex base)
    : normalizer_(std::move(normalizer)), base_(base) {
  if (base_ >= t.num_units()) throw std::invalid_argument("WeylFunctional: unknown unit");
  const auto deg = is_homogeneous_normalizer(t, normalizer_);
  if (!deg) throw std::invalid_argument("WeylFunctional: not a homogeneous normalizer");
  if (!in_domain(t, normalizer_, base_)) throw std::invalid_argument("WeylFunctional: (n* n)(x) is zero");
  degree_ = *deg;
}

Complex functional_eval(const GradedTwist& t, const WeylFunctional& psi, const AlgebraElement& a) {
  const auto& n = psi.normalizer();
  const Complex num = diagonal_value(t, convolve(t, adjoint(t, n), a), psi.base());
  return num / std::sqrt(normalizer_density(t, n, psi.base()));
}

namespace {

void require_domain(const GradedTwist& t, const AlgebraElement& n, UnitIndex x) {
  if (x >= t.num_units()) throw std::invalid_argument("germ: unknown unit");
  if (!in_domain(t, n, x)) throw std::invalid_argument("germ: (n* n)(x) is zero");
  if (!is_homogeneous_normalizer(t, n)) throw std::invalid_argument("germ: not a homogeneous normalizer");
}

Complex germ_pairing(const GradedTwist& t, const AlgebraElement& n1, const AlgebraElement& n2, UnitIndex x) {
  return diagonal_value(t, convolve(t, adjoint(t, n1), n2), x);
}

}  // namespace

bool germ_equal_G(const GradedTwist& t, const AlgebraElement& n1, UnitIndex x1, const AlgebraElement& n2,
                  UnitIndex x2) {
  require_domain(t, n1, x1);
  require_domain(t, n2, x2);
  if (x1 != x2) return false;
  return std::abs(germ_pairing(t, n1, n2, x1)) > kAlgebraTol;
}

bool germ_equal_Sigma(const GradedTwist& t, const AlgebraElement& n1, UnitIndex x1, const AlgebraElement& n2,
                      UnitIndex x2) {
  require_domain(t, n1, x1);
  require_domain(t, n2, x2);
  if (x1 != x2) return false;
  const Complex v = germ_pairing(t, n1, n2, x1);
  const double mag = std::abs(v);
  if (mag <= kAlgebraTol) return false;
  return v.real() > 0.0 && std::abs(v.imag()) <= kAlgebraTol * std::max(1.0, mag);
}

bool germ_equal_via_factorization(const GradedTwist& t, const AlgebraElement& n1, UnitIndex x1,
                                  const AlgebraElement& n2, UnitIndex x2, GermRelation relation) {
  require_domain(t, n1, x1);
  require_domain(t, n2, x2);
  if (x1 != x2) return false;
  // Off x we may take d = d' = 0, so n1 d = n2 d' reduces to
  // (n1 delta_x) p = (n2 delta_x) q for scalars p = d(x), q = d'(x).
  const auto dx = unit_indicator(t, x1);
  const auto u = convolve(t, n1, dx);
  const auto w = convolve(t, n2, dx);
  ComplexMatrix system(t.num_arrows(), 2);
  for (ArrowIndex a = 0; a < t.num_arrows(); ++a) {
    system(a, 0) = u[a];
    system(a, 1) = -w[a];
  }
  const auto kernel = null_space(system);
  if (kernel.cols() == 0) return false;
  if (kernel.cols() == 2) return true;  // both columns vanish; unreachable inside the domain set
  const Complex p = kernel(0, 0);
  const Complex q = kernel(1, 0);
  if (std::abs(p) <= 1e-8 || std::abs(q) <= 1e-8) return false;
  if (relation == GermRelation::G) return true;
  // Need lambda with lambda p > 0 and lambda q > 0, i.e. q / p real positive.
  const Complex ratio = q / p;
  return ratio.real() > 0.0 && std::abs(ratio.imag()) <= 1e-8 * std::abs(ratio);
}

}  // namespace twistlab
