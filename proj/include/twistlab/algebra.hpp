#pragma once

#include <optional>
#include <vector>

#include "twistlab/group.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

/// An element of C_c(Sigma; G) in the canonical trivialization: one complex
/// coefficient per arrow.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t num_arrows) : coeffs_(num_arrows) {}
  explicit AlgebraElement(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

  /// The indicator delta_a, optionally scaled.
  static AlgebraElement delta(std::size_t num_arrows, ArrowIndex a, Complex scale = 1.0);

  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  Complex& operator[](ArrowIndex a) { return coeffs_[a]; }
  const Complex& operator[](ArrowIndex a) const { return coeffs_[a]; }
  [[nodiscard]] const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

  /// Arrows whose coefficient has modulus above tol.
  [[nodiscard]] std::vector<ArrowIndex> support(double tol = kAlgebraTol) const;
  [[nodiscard]] bool is_zero(double tol = kAlgebraTol) const { return support(tol).empty(); }
  /// Largest coefficient modulus (sup norm on coefficients).
  [[nodiscard]] double max_abs() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(Complex s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }

 private:
  std::vector<Complex> coeffs_;
};

/// Largest coefficient distance between two elements.
double distance(const AlgebraElement& f, const AlgebraElement& g);

/// Twisted convolution
///   (f*g)(c) = sum over composable (a, b) with ab = c of f(a) g(b) sigma(a, b).
AlgebraElement convolve(const GradedTwist& t, const AlgebraElement& f, const AlgebraElement& g);

/// f*(c) = conj(f(c^-1)) conj(sigma(c, c^-1)). The correction phase makes
/// the left regular representations *-preserving.
AlgebraElement adjoint(const GradedTwist& t, const AlgebraElement& f);

/// Left regular representation on l^2(Gx) in the basis {delta_a : src(a) = x}.
struct RegularRepMatrix {
  UnitIndex base_unit = 0;
  std::vector<ArrowIndex> basis;
  ComplexMatrix matrix;
};

/// Entry (z, e) is f(z e^-1) sigma(z e^-1, e). Throws std::out_of_range for
/// an unknown unit.
RegularRepMatrix regular_rep(const GradedTwist& t, const AlgebraElement& f, UnitIndex x);

/// max over units of the spectral norm of the regular representation.
double reduced_norm(const GradedTwist& t, const AlgebraElement& f);

/// The conditional expectation onto the diagonal: restriction to identity arrows.
AlgebraElement delta_expectation(const GradedTwist& t, const AlgebraElement& f);

/// Coefficient of f at the identity arrow of x, i.e. the function Delta(f) at x.
inline Complex diagonal_value(const GradedTwist& t, const AlgebraElement& f, UnitIndex x) {
  return f[t.groupoid().unit_arrow(x)];
}

/// The diagonal element sum_x values[x] delta_{unit(x)}.
AlgebraElement diagonal_element(const GradedTwist& t, const std::vector<Complex>& values);
/// The unit-arrow indicator at x.
AlgebraElement unit_indicator(const GradedTwist& t, UnitIndex x);

/// (omega . f)(a) = omega(c(a)) f(a). Throws std::invalid_argument if Gamma
/// is not abelian or omega is not a character.
AlgebraElement dual_action(const GradedTwist& t, const Character& omega, const AlgebraElement& f);

/// Phi_s(f): restriction of f to the arrows of degree s. Works for any Gamma.
AlgebraElement spectral_component(const GradedTwist& t, GroupElement s, const AlgebraElement& f);

/// Phi_s(f) as the character average (1/|Gamma|) sum_omega conj(omega(s)) (omega . f).
/// Abelian Gamma only.
AlgebraElement spectral_component_by_characters(const GradedTwist& t, GroupElement s, const AlgebraElement& f);

/// The arrows of R = c^-1(e); their indicators span the fixed-point algebra.
std::vector<ArrowIndex> fixed_point_basis(const GradedTwist& t);

/// The arrows of degree s (a basis of the spectral subspace A_s).
std::vector<ArrowIndex> degree_fiber(const GradedTwist& t, GroupElement s);

/// n d n* and n* d n lie in D for every unit indicator d.
bool is_normalizer(const GradedTwist& t, const AlgebraElement& n, double tol = kAlgebraTol);

/// The degree of n if n is a nonzero normalizer supported in a single degree.
std::optional<GroupElement> is_homogeneous_normalizer(const GradedTwist& t, const AlgebraElement& n,
                                                      double tol = kAlgebraTol);

/// One nonzero product delta_a * delta_b = coefficient delta_{ab}.
struct StructureConstant {
  ArrowIndex left;
  ArrowIndex right;
  ArrowIndex result;
  Complex coefficient;
};
std::vector<StructureConstant> structure_constants(const GradedTwist& t);

/// Dimension of the center of the algebra, by solving [f, delta_a] = 0.
std::size_t center_dimension(const GradedTwist& t);

}  // namespace twistlab
