#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "twistlab/reconstruct.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

using Json = nlohmann::ordered_json;

/// Malformed document. `where` is "line L, column C" for syntax errors and a
/// field path such as "arrows[2].src" for content errors.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  [[nodiscard]] const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// A parsed twist document. The groupoid may still violate the axioms; the
/// parser only resolves names and shapes so validation can report the rest.
struct TwistDocument {
  GradedTwist twist;
  Json metadata = Json::object();
};

/// Parses the twist format:
///
///   { "format": "twistlab-twist/1",
///     "metadata": {...},
///     "gamma": "Z2xZ2" | {"elements": [...], "table": [[...], ...]},
///     "units": ["x", {"id": "y", "arrow": "1_y"}, ...],
///     "arrows": [{"id": "x", "src": "x", "rng": "x", "degree": "0"}, ...],
///     "compositions": [{"left": "a", "right": "b", "result": "ab",
///                       "sigma_re": 1.0, "sigma_im": 0.0}, ...] }
///
/// The identity arrow of a unit given as a bare string is the arrow with the
/// same id; the object form names it explicitly. Compositions use
/// "left after right"; omitted sigma defaults to 1. Inverses are read off
/// the composition table.
TwistDocument parse_document(std::string_view text);
TwistDocument load_document(const std::filesystem::path& path);

Json to_json(const GradedTwist& t, const Json& metadata = Json::object());
std::string dump_document(const GradedTwist& t, const Json& metadata = Json::object());

/// Reconstruction certificate: Upsilon table, cocycle witness, grading
/// commutation, isometry samples, cocycle class, and the rebuilt twist.
Json certificate_json(const GradedTwist& input, const RoundtripCertificate& cert, const std::string& status);

/// Element spec: "all-ones", or "id=re[:im];id=re[:im];..." with arrow ids.
/// Throws DocumentError("element", ...) for unknown ids or bad numbers.
AlgebraElement parse_element(const GradedTwist& t, std::string_view spec);

}  // namespace twistlab
