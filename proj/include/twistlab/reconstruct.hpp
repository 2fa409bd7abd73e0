#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/weyl.hpp"

namespace twistlab {

/// What reconstruct() proves about the map Upsilon_G: G -> G_1.
struct ReconstructionCertificate {
  bool groupoid_valid = false;        // G_1 satisfies the groupoid axioms
  bool bijective = false;
  bool preserves_structure = false;   // units, src, rng, inverses, composition
  bool grading_commutes = false;      // c_{G_1} o Upsilon_G = c_G
  /// b with (pulled-back cocycle_1) = sigma * coboundary(b), when found.
  std::optional<Cochain> cocycle_witness;
  /// Whether cocycle_1 is cohomologous to the trivial cocycle on G_1.
  bool cocycle_class_trivial = false;
  /// Largest deviation of an extracted phase from unit modulus.
  double max_phase_deviation = 0.0;
  std::vector<std::string> failures;

  [[nodiscard]] bool passed() const {
    return groupoid_valid && bijective && preserves_structure && grading_commutes && cocycle_witness.has_value() &&
           failures.empty();
  }
};

/// The graded twist rebuilt from (A, D) and the grading, together with the
/// comparison map from the input.
struct ReconstructedTwist {
  /// G_1 over germ classes [n, x]_G, cocycle_1 from the functionals, c_{G_1}.
  GradedTwist twist;
  /// Canonical normalizer of each germ class (an indicator delta_a).
  std::vector<AlgebraElement> representatives;
  /// Upsilon_G: input arrow -> germ index.
  std::vector<ArrowIndex> upsilon;
  ReconstructionCertificate certificate;
  /// Fingerprint of the input twist's groupoid and grading.
  std::uint64_t source_fingerprint = 0;
};

std::uint64_t fingerprint(const GradedTwist& t);

/// Builds the Weyl twist from the algebra. Throws PreconditionError (with
/// witnesses) if the input fails validation, has a non-principal degree-zero
/// fiber, or fails cartan_check; throws ToleranceError if an extracted phase
/// deviates from unit modulus by more than 1e-8.
ReconstructedTwist reconstruct(const GradedTwist& t);

/// a-hat on G_1: germ g -> psi_{(rep_g, src g)}(a). Throws
/// std::invalid_argument if rt was not built from t.
AlgebraElement hat_map(const GradedTwist& t, const AlgebraElement& a, const ReconstructedTwist& rt);

struct RoundtripOptions {
  std::size_t samples = 16;
  std::uint64_t seed = 0x5eed;
  double norm_tol = kNormTol;
  double algebra_tol = kAlgebraTol;
};

struct NormSample {
  double input_norm = 0.0;
  double reconstructed_norm = 0.0;
};

struct RoundtripCertificate {
  ReconstructedTwist reconstruction;
  bool psi_injective = false;
  double max_homomorphism_error = 0.0;  // |Psi(ab) - Psi(a)Psi(b)|
  double max_adjoint_error = 0.0;       // |Psi(a*) - Psi(a)*|
  double max_linearity_error = 0.0;
  double max_norm_error = 0.0;
  std::vector<NormSample> norm_samples;

  [[nodiscard]] bool passed(const RoundtripOptions& opt = {}) const;
};

/// The certificate could not be established; message names the failing
/// assertion and the certificate is attached.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, RoundtripCertificate certificate)
      : std::runtime_error(what), certificate_(std::move(certificate)) {}
  [[nodiscard]] const RoundtripCertificate& certificate() const noexcept { return certificate_; }

 private:
  RoundtripCertificate certificate_;
};

/// reconstruct() plus the algebra-level checks: Psi is linear, injective, a
/// *-homomorphism and isometric for the reduced norms on random samples.
/// Throws VerificationError on the first failed assertion.
RoundtripCertificate verify_roundtrip(const GradedTwist& t, const RoundtripOptions& options = {});

}  // namespace twistlab
