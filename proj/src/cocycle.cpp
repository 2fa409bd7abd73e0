#include "twistlab/cocycle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "twistlab/linalg.hpp"

namespace twistlab {

TwoCocycle::TwoCocycle(std::size_t num_arrows) : n_(num_arrows), values_(num_arrows * num_arrows, Complex(1.0, 0.0)) {}

TwoCocycle::TwoCocycle(std::size_t num_arrows, std::vector<Complex> values) : n_(num_arrows), values_(std::move(values)) {
  if (values_.size() != n_ * n_) throw std::invalid_argument("TwoCocycle: expected |arrows|^2 values");
}

TwoCocycle TwoCocycle::with_value(ArrowIndex a, ArrowIndex b, Complex value) const {
  auto v = values_;
  v.at(a * n_ + b) = value;
  return TwoCocycle(n_, std::move(v));
}

TwoCocycle TwoCocycle::times(const TwoCocycle& other) const {
  if (other.n_ != n_) throw std::invalid_argument("TwoCocycle::times: size mismatch");
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= other.values_[i];
  return TwoCocycle(n_, std::move(v));
}

TwoCocycle TwoCocycle::conjugate() const {
  auto v = values_;
  for (auto& z : v) z = std::conj(z);
  return TwoCocycle(n_, std::move(v));
}

Report validate_cocycle(const FiniteGroupoid& g, const TwoCocycle& sigma, double tol) {
  Report report;
  const std::size_t na = g.num_arrows();
  if (sigma.num_arrows() != na) {
    report.add("size", {}, "cocycle is defined on " + std::to_string(sigma.num_arrows()) + " arrows, groupoid has " +
                               std::to_string(na));
    return report;
  }
  for (ArrowIndex a = 0; a < na; ++a)
    for (ArrowIndex b : g.arrows_with_range(g.src(a)))
      if (std::abs(std::abs(sigma(a, b)) - 1.0) > tol)
        report.add("unit-modulus", {a, b},
                   "|sigma(" + g.arrow_name(a) + "," + g.arrow_name(b) + ")| = " + std::to_string(std::abs(sigma(a, b))));
  for (ArrowIndex a = 0; a < na; ++a) {
    const auto us = g.unit_arrow(g.src(a));
    const auto ur = g.unit_arrow(g.rng(a));
    if (!near(sigma(a, us), 1.0, tol) || !near(sigma(ur, a), 1.0, tol))
      report.add("normalization", {a}, "sigma is not 1 on identity pairs of " + g.arrow_name(a));
  }
  for (ArrowIndex a = 0; a < na; ++a)
    for (ArrowIndex b : g.arrows_with_range(g.src(a)))
      for (ArrowIndex c : g.arrows_with_range(g.src(b))) {
        const auto ab = g.compose(a, b);
        const auto bc = g.compose(b, c);
        if (ab == kNone || bc == kNone) continue;
        const Complex lhs = sigma(b, c) * std::conj(sigma(ab, c)) * sigma(a, bc) * std::conj(sigma(a, b));
        if (!near(lhs, 1.0, tol))
          report.add("cocycle-identity", {a, b, c},
                     "identity fails on (" + g.arrow_name(a) + "," + g.arrow_name(b) + "," + g.arrow_name(c) +
                         "): product " + std::to_string(lhs.real()) + (lhs.imag() < 0 ? " - " : " + ") +
                         std::to_string(std::abs(lhs.imag())) + "i");
      }
  return report;
}

TwoCocycle coboundary(const FiniteGroupoid& g, const Cochain& b) {
  const std::size_t na = g.num_arrows();
  if (b.size() != na) throw std::invalid_argument("coboundary: cochain must have one value per arrow");
  for (ArrowIndex a = 0; a < na; ++a) {
    if (std::abs(std::abs(b[a]) - 1.0) > kAlgebraTol)
      throw std::invalid_argument("coboundary: b(" + g.arrow_name(a) + ") is not of unit modulus");
    if (g.is_unit_arrow(a) && !near(b[a], 1.0, kAlgebraTol))
      throw std::invalid_argument("coboundary: b is not 1 on identity arrow " + g.arrow_name(a));
  }
  std::vector<Complex> values(na * na, Complex(1.0, 0.0));
  for (ArrowIndex a = 0; a < na; ++a)
    for (ArrowIndex c : g.arrows_with_range(g.src(a))) {
      const auto ac = g.compose(a, c);
      if (ac == kNone) continue;
      values[a * na + c] = b[a] * b[c] * std::conj(b[ac]);
    }
  return TwoCocycle(na, std::move(values));
}

namespace {

/// Finds u on the isotropy group `group` (arrows at one unit) with
/// rho(h,k) = u(h) u(k) conj(u(hk)), or nullopt.
std::optional<std::vector<Complex>> solve_on_isotropy(const FiniteGroupoid& g, const std::vector<ArrowIndex>& group,
                                                      const std::vector<std::size_t>& position,
                                                      const TwoCocycle& rho) {
  const std::size_t m = group.size();
  if (m == 1) return std::vector<Complex>{1.0};
  // Left-regular operators of the twisted group algebra: L_h e_k = rho(h,k) e_{hk}.
  std::vector<ComplexMatrix> left(m, ComplexMatrix(m, m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const auto hk = g.compose(group[i], group[k]);
      left[i](position[hk], k) = rho(group[i], group[k]);
    }
  ComplexMatrix stacked(m * m * m, m);
  const auto id = ComplexMatrix::identity(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto comm = left[i] * left[j] * left[i].adjoint() * left[j].adjoint() - id;
      const std::size_t row0 = (i * m + j) * m;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) stacked(row0 + r, c) = comm(r, c);
    }
  ComplexMatrix basis = null_space(stacked);
  if (basis.cols() == 0) return std::nullopt;

  // The L_h commute on this subspace; shrink it to a joint eigenspace.
  const Complex half_i(0.0, 0.5);
  for (std::size_t i = 0; i < m && basis.cols() > 1; ++i) {
    for (int part = 0; part < 2 && basis.cols() > 1; ++part) {
      const auto restricted = basis.adjoint() * left[i] * basis;
      const auto herm = part == 0 ? Complex(0.5) * (restricted + restricted.adjoint())
                                  : (-half_i) * (restricted - restricted.adjoint());
      basis = basis * lowest_eigenspace(herm);
    }
  }
  const auto v = basis.column(0);
  std::vector<Complex> u(m);
  for (std::size_t i = 0; i < m; ++i) u[i] = (v.adjoint() * left[i] * v)(0, 0);
  return u;
}

}  // namespace

std::optional<Cochain> cohomologous(const FiniteGroupoid& g, const TwoCocycle& sigma1, const TwoCocycle& sigma2,
                                    double tol) {
  const std::size_t na = g.num_arrows();
  if (sigma1.num_arrows() != na || sigma2.num_arrows() != na)
    throw std::invalid_argument("cohomologous: cocycle size does not match groupoid");
  const TwoCocycle rho = sigma1.times(sigma2.conjugate());
  Cochain b(na, Complex(0.0, 0.0));

  for (const auto& orbit : orbits(g)) {
    const UnitIndex base = orbit.front();
    // tree[y]: an arrow base -> y
    std::vector<ArrowIndex> tree(g.num_units(), kNone);
    std::vector<ArrowIndex> isotropy;
    std::vector<std::size_t> position(na, kNone);
    for (ArrowIndex a : g.arrows_with_source(base)) {
      if (tree[g.rng(a)] == kNone) tree[g.rng(a)] = a;
      if (g.rng(a) == base) {
        position[a] = isotropy.size();
        isotropy.push_back(a);
      }
    }
    tree[base] = g.unit_arrow(base);
    const auto u = solve_on_isotropy(g, isotropy, position, rho);
    if (!u) return std::nullopt;

    // gamma: y -> z factors as tree[z] * h * tree[y]^-1 with h in the isotropy group.
    for (UnitIndex y : orbit)
      for (ArrowIndex gamma : g.arrows_with_source(y)) {
        const UnitIndex z = g.rng(gamma);
        const ArrowIndex ty = tree[y];
        const ArrowIndex tz = tree[z];
        const ArrowIndex ty_inv = g.inverse(ty);
        const ArrowIndex h = g.compose(g.inverse(tz), g.compose(gamma, ty));
        const ArrowIndex h_ty_inv = g.compose(h, ty_inv);
        const Complex b_ty_inv = rho(ty, ty_inv);
        const Complex b_h_ty_inv = (*u)[position[h]] * b_ty_inv / rho(h, ty_inv);
        b[gamma] = b_h_ty_inv / rho(tz, h_ty_inv);
      }
  }

  for (auto& z : b) {
    const double mag = std::abs(z);
    if (mag == 0.0) return std::nullopt;
    z /= mag;
  }
  for (ArrowIndex a = 0; a < na; ++a)
    if (g.is_unit_arrow(a) && !near(b[a], 1.0, tol)) return std::nullopt;
  for (ArrowIndex a = 0; a < na; ++a)
    for (ArrowIndex c : g.arrows_with_range(g.src(a))) {
      const auto ac = g.compose(a, c);
      if (!near(b[a] * b[c] * std::conj(b[ac]), rho(a, c), tol)) return std::nullopt;
    }
  return b;
}

}  // namespace twistlab
