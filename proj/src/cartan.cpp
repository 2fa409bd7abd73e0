#include "twistlab/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace twistlab {

bool CartanReport::passed() const {
  if (!precondition_ok) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CartanCheck& c) { return c.passed; });
}

namespace {

constexpr double kCheckTol = kAlgebraTol;

CartanCheck check_masa(const GradedTwist& t, const std::vector<ArrowIndex>& fixed) {
  const auto& g = t.groupoid();
  const std::size_t n = t.num_arrows();
  CartanCheck check{"masa", true, "", {}};
  for (UnitIndex x = 0; x < t.num_units(); ++x)
    if (std::find(fixed.begin(), fixed.end(), g.unit_arrow(x)) == fixed.end()) {
      check.passed = false;
      check.witnesses.push_back(g.unit_arrow(x));
    }
  if (!check.passed) {
    check.detail = "D is not contained in A_0";
    return check;
  }
  if (fixed.empty()) {
    check.detail = "A_0 = D = 0";
    return check;
  }
  // Unknown a = sum_j a_j delta_{fixed[j]}; equations [a, delta_{unit(x)}] = 0.
  ComplexMatrix system(t.num_units() * n, fixed.size());
  for (std::size_t j = 0; j < fixed.size(); ++j) {
    const auto dj = AlgebraElement::delta(n, fixed[j]);
    for (UnitIndex x = 0; x < t.num_units(); ++x) {
      const auto dx = unit_indicator(t, x);
      const auto comm = convolve(t, dj, dx) - convolve(t, dx, dj);
      for (ArrowIndex r = 0; r < n; ++r) system(x * n + r, j) = comm[r];
    }
  }
  const auto kernel = null_space(system);
  for (std::size_t k = 0; k < kernel.cols(); ++k)
    for (std::size_t j = 0; j < fixed.size(); ++j)
      if (!g.is_unit_arrow(fixed[j]) && std::abs(kernel(j, k)) > 1e-8) check.witnesses.push_back(fixed[j]);
  std::sort(check.witnesses.begin(), check.witnesses.end());
  check.witnesses.erase(std::unique(check.witnesses.begin(), check.witnesses.end()), check.witnesses.end());
  check.passed = kernel.cols() == t.num_units() && check.witnesses.empty();
  check.detail = "commutant of D in A_0 has dimension " + std::to_string(kernel.cols()) + ", dim D = " +
                 std::to_string(t.num_units());
  return check;
}

CartanCheck check_expectation(const GradedTwist& t, const std::vector<ArrowIndex>& fixed) {
  const auto& g = t.groupoid();
  const std::size_t n = t.num_arrows();
  CartanCheck check{"expectation", true, "", {}};
  auto fail = [&](ArrowIndex a, const std::string& why) {
    if (check.passed) check.detail = why;
    check.passed = false;
    check.witnesses.push_back(a);
  };
  for (ArrowIndex a : fixed) {
    const auto da = AlgebraElement::delta(n, a);
    const auto e = delta_expectation(t, da);
    for (ArrowIndex s : e.support(kCheckTol))
      if (!g.is_unit_arrow(s)) fail(a, "Delta does not map into D");
    if (distance(delta_expectation(t, e), e) > kCheckTol) fail(a, "Delta is not idempotent");
    if (g.is_unit_arrow(a) && distance(e, da) > kCheckTol) fail(a, "Delta does not fix D");
    for (UnitIndex x = 0; x < t.num_units(); ++x)
      for (UnitIndex y = 0; y < t.num_units(); ++y) {
        const auto dx = unit_indicator(t, x);
        const auto dy = unit_indicator(t, y);
        const auto lhs = delta_expectation(t, convolve(t, convolve(t, dx, da), dy));
        const auto rhs = convolve(t, convolve(t, dx, e), dy);
        if (distance(lhs, rhs) > kCheckTol) fail(a, "Delta is not D-bimodular");
      }
  }
  // Gram forms Q_x(j,k) = Delta(delta_j^* delta_k)(x): each must be positive
  // semidefinite, and their sum positive definite (faithfulness).
  const std::size_t r = fixed.size();
  if (r > 0 && check.passed) {
    ComplexMatrix total(r, r);
    for (UnitIndex x = 0; x < t.num_units(); ++x) {
      ComplexMatrix q(r, r);
      for (std::size_t j = 0; j < r; ++j) {
        const auto dj_star = adjoint(t, AlgebraElement::delta(n, fixed[j]));
        for (std::size_t k = 0; k < r; ++k)
          q(j, k) = diagonal_value(t, convolve(t, dj_star, AlgebraElement::delta(n, fixed[k])), x);
      }
      if (q.max_abs_diff(q.adjoint()) > kCheckTol) {
        fail(g.unit_arrow(x), "Gram form of Delta is not Hermitian");
        continue;
      }
      if (hermitian_eigen(q).values.front() < -kCheckTol) fail(g.unit_arrow(x), "Delta is not positive");
      total = total + q;
    }
    if (check.passed) {
      const double lowest = hermitian_eigen(total).values.front();
      if (lowest <= kCheckTol) {
        check.passed = false;
        check.detail = "Delta is not faithful on A_0 (lowest Gram eigenvalue " + std::to_string(lowest) + ")";
      }
    }
  }
  if (check.passed) check.detail = "faithful conditional expectation onto D on A_0 (dim " + std::to_string(r) + ")";
  return check;
}

CartanCheck check_normalizer_span(const GradedTwist& t) {
  const std::size_t n = t.num_arrows();
  CartanCheck check{"normalizer-span", true, "", {}};
  std::vector<ArrowIndex> spanning;
  for (ArrowIndex a = 0; a < n; ++a) {
    const auto deg = is_homogeneous_normalizer(t, AlgebraElement::delta(n, a));
    if (deg && *deg == t.degree(a)) {
      spanning.push_back(a);
    } else {
      check.witnesses.push_back(a);
    }
  }
  std::size_t rank = 0;
  if (!spanning.empty()) {
    ComplexMatrix span(n, spanning.size());
    for (std::size_t j = 0; j < spanning.size(); ++j) span(spanning[j], j) = 1.0;
    rank = spanning.size() - null_space(span).cols();
  }
  check.passed = rank == n;
  check.detail = "homogeneous normalizers span a subspace of dimension " + std::to_string(rank) + " of " +
                 std::to_string(n);
  return check;
}

CartanCheck check_unit(const GradedTwist& t) {
  const std::size_t n = t.num_arrows();
  CartanCheck check{"unit", true, "", {}};
  const auto one = diagonal_element(t, std::vector<Complex>(t.num_units(), 1.0));
  for (ArrowIndex a = 0; a < n; ++a) {
    const auto da = AlgebraElement::delta(n, a);
    if (distance(convolve(t, one, da), da) > kCheckTol || distance(convolve(t, da, one), da) > kCheckTol)
      check.witnesses.push_back(a);
  }
  check.passed = check.witnesses.empty();
  check.detail = check.passed ? "sum of unit indicators is the unit of A" : "sum of unit indicators is not a unit";
  return check;
}

}  // namespace

CartanReport cartan_check(const GradedTwist& t) {
  CartanReport report;
  const auto eff = is_effective_zero_fiber(t);
  if (!eff.effective) {
    report.precondition_ok = false;
    report.precondition_witness = eff.witness;
    return report;
  }
  const auto fixed = fixed_point_basis(t);
  report.checks.push_back(check_masa(t, fixed));
  report.checks.push_back(check_expectation(t, fixed));
  report.checks.push_back(check_normalizer_span(t));
  report.checks.push_back(check_unit(t));
  return report;
}

}  // namespace twistlab
