#include "twistlab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace twistlab {

AlgebraElement AlgebraElement::delta(std::size_t num_arrows, ArrowIndex a, Complex scale) {
  AlgebraElement f(num_arrows);
  f.coeffs_.at(a) = scale;
  return f;
}

std::vector<ArrowIndex> AlgebraElement::support(double tol) const {
  std::vector<ArrowIndex> s;
  for (ArrowIndex a = 0; a < coeffs_.size(); ++a)
    if (std::abs(coeffs_[a]) > tol) s.push_back(a);
  return s;
}

double AlgebraElement::max_abs() const {
  double m = 0.0;
  for (auto c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.size() != size()) throw std::invalid_argument("AlgebraElement: size mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.size() != size()) throw std::invalid_argument("AlgebraElement: size mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

double distance(const AlgebraElement& f, const AlgebraElement& g) { return (f - g).max_abs(); }

namespace {

void check_size(const GradedTwist& t, const AlgebraElement& f) {
  if (f.size() != t.num_arrows())
    throw std::invalid_argument("algebra element has " + std::to_string(f.size()) + " coefficients, twist has " +
                                std::to_string(t.num_arrows()) + " arrows");
}

}  // namespace

AlgebraElement convolve(const GradedTwist& t, const AlgebraElement& f, const AlgebraElement& g) {
  check_size(t, f);
  check_size(t, g);
  const auto& gr = t.groupoid();
  AlgebraElement out(t.num_arrows());
  for (ArrowIndex a = 0; a < gr.num_arrows(); ++a) {
    if (f[a] == Complex{}) continue;
    for (ArrowIndex b : gr.arrows_with_range(gr.src(a))) {
      if (g[b] == Complex{}) continue;
      out[gr.compose(a, b)] += f[a] * g[b] * t.sigma(a, b);
    }
  }
  return out;
}

AlgebraElement adjoint(const GradedTwist& t, const AlgebraElement& f) {
  check_size(t, f);
  const auto& gr = t.groupoid();
  AlgebraElement out(t.num_arrows());
  for (ArrowIndex c = 0; c < gr.num_arrows(); ++c) {
    const auto ci = gr.inverse(c);
    out[c] = std::conj(f[ci]) * std::conj(t.sigma(c, ci));
  }
  return out;
}

RegularRepMatrix regular_rep(const GradedTwist& t, const AlgebraElement& f, UnitIndex x) {
  check_size(t, f);
  const auto& gr = t.groupoid();
  if (x >= gr.num_units()) throw std::out_of_range("regular_rep: unknown unit " + std::to_string(x));
  RegularRepMatrix rep;
  rep.base_unit = x;
  rep.basis = gr.arrows_with_source(x);
  const std::size_t d = rep.basis.size();
  rep.matrix = ComplexMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const ArrowIndex zeta = rep.basis[i];
      const ArrowIndex eta = rep.basis[j];
      const ArrowIndex a = gr.compose(zeta, gr.inverse(eta));
      rep.matrix(i, j) = f[a] * t.sigma(a, eta);
    }
  return rep;
}

double reduced_norm(const GradedTwist& t, const AlgebraElement& f) {
  double best = 0.0;
  for (UnitIndex x = 0; x < t.num_units(); ++x) best = std::max(best, spectral_norm(regular_rep(t, f, x).matrix));
  return best;
}

AlgebraElement delta_expectation(const GradedTwist& t, const AlgebraElement& f) {
  check_size(t, f);
  AlgebraElement out(t.num_arrows());
  for (UnitIndex x = 0; x < t.num_units(); ++x) {
    const auto u = t.groupoid().unit_arrow(x);
    out[u] = f[u];
  }
  return out;
}

AlgebraElement diagonal_element(const GradedTwist& t, const std::vector<Complex>& values) {
  if (values.size() != t.num_units()) throw std::invalid_argument("diagonal_element: one value per unit expected");
  AlgebraElement out(t.num_arrows());
  for (UnitIndex x = 0; x < t.num_units(); ++x) out[t.groupoid().unit_arrow(x)] = values[x];
  return out;
}

AlgebraElement unit_indicator(const GradedTwist& t, UnitIndex x) {
  return AlgebraElement::delta(t.num_arrows(), t.groupoid().unit_arrow(x));
}

AlgebraElement dual_action(const GradedTwist& t, const Character& omega, const AlgebraElement& f) {
  check_size(t, f);
  if (!t.gamma().is_abelian()) throw std::invalid_argument("dual_action: Gamma is not abelian");
  if (!is_character(t.gamma(), omega)) throw std::invalid_argument("dual_action: omega is not a character of Gamma");
  AlgebraElement out(t.num_arrows());
  for (ArrowIndex a = 0; a < t.num_arrows(); ++a) out[a] = omega[t.degree(a)] * f[a];
  return out;
}

AlgebraElement spectral_component(const GradedTwist& t, GroupElement s, const AlgebraElement& f) {
  check_size(t, f);
  if (s >= t.gamma().size()) throw std::invalid_argument("spectral_component: element not in Gamma");
  AlgebraElement out(t.num_arrows());
  for (ArrowIndex a = 0; a < t.num_arrows(); ++a)
    if (t.degree(a) == s) out[a] = f[a];
  return out;
}

AlgebraElement spectral_component_by_characters(const GradedTwist& t, GroupElement s, const AlgebraElement& f) {
  check_size(t, f);
  if (s >= t.gamma().size()) throw std::invalid_argument("spectral_component: element not in Gamma");
  const auto chars = characters(t.gamma());
  AlgebraElement out(t.num_arrows());
  for (const auto& omega : chars) out += std::conj(omega[s]) * dual_action(t, omega, f);
  out *= 1.0 / static_cast<double>(chars.size());
  return out;
}

std::vector<ArrowIndex> degree_fiber(const GradedTwist& t, GroupElement s) {
  std::vector<ArrowIndex> out;
  for (ArrowIndex a = 0; a < t.num_arrows(); ++a)
    if (t.degree(a) == s) out.push_back(a);
  return out;
}

std::vector<ArrowIndex> fixed_point_basis(const GradedTwist& t) { return degree_fiber(t, t.gamma().identity()); }

namespace {

bool supported_on_units(const GradedTwist& t, const AlgebraElement& f, double tol) {
  for (ArrowIndex a : f.support(tol))
    if (!t.groupoid().is_unit_arrow(a)) return false;
  return true;
}

}  // namespace

bool is_normalizer(const GradedTwist& t, const AlgebraElement& n, double tol) {
  check_size(t, n);
  const auto ns = adjoint(t, n);
  for (UnitIndex x = 0; x < t.num_units(); ++x) {
    const auto d = unit_indicator(t, x);
    if (!supported_on_units(t, convolve(t, convolve(t, n, d), ns), tol)) return false;
    if (!supported_on_units(t, convolve(t, convolve(t, ns, d), n), tol)) return false;
  }
  return true;
}

std::optional<GroupElement> is_homogeneous_normalizer(const GradedTwist& t, const AlgebraElement& n, double tol) {
  const auto supp = n.support(tol);
  if (supp.empty()) return std::nullopt;
  const GroupElement s = t.degree(supp.front());
  for (auto a : supp)
    if (t.degree(a) != s) return std::nullopt;
  if (!is_normalizer(t, n, tol)) return std::nullopt;
  return s;
}

std::vector<StructureConstant> structure_constants(const GradedTwist& t) {
  const auto& g = t.groupoid();
  std::vector<StructureConstant> out;
  for (ArrowIndex a = 0; a < g.num_arrows(); ++a)
    for (ArrowIndex b : g.arrows_with_range(g.src(a))) out.push_back({a, b, g.compose(a, b), t.sigma(a, b)});
  return out;
}

std::size_t center_dimension(const GradedTwist& t) {
  const std::size_t n = t.num_arrows();
  if (n == 0) return 0;
  // Column k of block a holds [delta_a, delta_k].
  ComplexMatrix system(n * n, n);
  for (ArrowIndex a = 0; a < n; ++a) {
    const auto da = AlgebraElement::delta(n, a);
    for (ArrowIndex k = 0; k < n; ++k) {
      const auto dk = AlgebraElement::delta(n, k);
      const auto comm = convolve(t, da, dk) - convolve(t, dk, da);
      for (ArrowIndex r = 0; r < n; ++r) system(a * n + r, k) = comm[r];
    }
  }
  return null_space(system).cols();
}

}  // namespace twistlab
