#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistlab {

using Complex = std::complex<double>;

using ArrowIndex = std::size_t;
using UnitIndex = std::size_t;
using GroupElement = std::size_t;

/// Marker for an undefined entry in a partial table (composition, inverse).
inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Tolerance for algebraic identities (cocycle identity, associativity, ...).
inline constexpr double kAlgebraTol = 1e-10;
/// Tolerance for comparisons between operator norms.
inline constexpr double kNormTol = 1e-8;

/// One failed axiom together with the arrows (or elements) that witness it.
struct Violation {
  std::string rule;
  std::vector<std::size_t> witnesses;
  std::string detail;
};

/// Result of a validation pass. Violations are data, not errors.
struct Report {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  void add(std::string rule, std::vector<std::size_t> witnesses, std::string detail) {
    violations.push_back({std::move(rule), std::move(witnesses), std::move(detail)});
  }
  void append(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

/// A required precondition of an operation does not hold (e.g. the
/// degree-zero fiber has isotropy). Carries the witnessing indices.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, std::vector<std::size_t> witnesses = {})
      : std::runtime_error(what), witnesses_(std::move(witnesses)) {}
  [[nodiscard]] const std::vector<std::size_t>& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<std::size_t> witnesses_;
};

/// An internal numerical assertion failed (tolerance breach). Signals a bug,
/// never bad user input.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace twistlab
