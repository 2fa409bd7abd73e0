#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace twistlab::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kPreconditionFailure = 2, kInternalError = 3 };

struct AlgebraOptions {
  std::vector<std::string> norms;       // element specs
  std::vector<std::string> components;  // degree names
  std::string element = "all-ones";     // element used by --component
  bool cartan = false;
  bool structure = false;
  bool center = false;
};

struct GenerateOptions {
  std::string kind;               // pair | group | action | twisted | corpus
  std::vector<std::string> args;  // kind-specific positionals
  std::optional<std::string> gamma;
  std::optional<std::string> map;     // comma-separated degrees for group
  std::string matrix = "0,0,1,0";     // exponent matrix for twisted, row-major
  std::optional<std::uint64_t> perturb;
  std::size_t perturbations = 0;      // corpus only
  std::string output;                 // file (or directory for corpus); empty = stdout
};

/// Norm tolerance, TWISTLAB_TOL if set. Throws std::invalid_argument on a
/// malformed value.
double norm_tolerance();

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_algebra(const std::string& path, const AlgebraOptions& opt, std::ostream& out, std::ostream& err);
int cmd_reconstruct(const std::string& path, const std::string& certificate_path, std::ostream& out,
                    std::ostream& err);
int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace twistlab::cli
