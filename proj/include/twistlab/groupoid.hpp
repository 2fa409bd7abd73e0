#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistlab/types.hpp"

namespace twistlab {

/// A finite groupoid stored as dense tables over arrow indices.
///
/// Composition follows the convention compose(a, b) = "a after b", defined
/// exactly when src(a) == rng(b). The constructor only checks table shapes
/// and index ranges; the groupoid axioms are checked by validate_groupoid so
/// that malformed inputs can be reported instead of rejected. Entries of the
/// composition and inverse tables may be kNone.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  FiniteGroupoid(std::vector<std::string> unit_names, std::vector<std::string> arrow_names,
                 std::vector<UnitIndex> src, std::vector<UnitIndex> rng, std::vector<ArrowIndex> composition,
                 std::vector<ArrowIndex> inverse, std::vector<ArrowIndex> unit_arrow);

  [[nodiscard]] std::size_t num_units() const noexcept { return unit_names_.size(); }
  [[nodiscard]] std::size_t num_arrows() const noexcept { return arrow_names_.size(); }

  [[nodiscard]] UnitIndex src(ArrowIndex a) const { return src_[a]; }
  [[nodiscard]] UnitIndex rng(ArrowIndex a) const { return rng_[a]; }
  [[nodiscard]] bool composable(ArrowIndex a, ArrowIndex b) const { return src_[a] == rng_[b]; }
  /// Table entry for (a, b); kNone when undefined.
  [[nodiscard]] ArrowIndex compose(ArrowIndex a, ArrowIndex b) const { return composition_[a * num_arrows() + b]; }
  [[nodiscard]] ArrowIndex inverse(ArrowIndex a) const { return inverse_[a]; }
  [[nodiscard]] ArrowIndex unit_arrow(UnitIndex x) const { return unit_arrow_[x]; }
  [[nodiscard]] bool is_unit_arrow(ArrowIndex a) const { return unit_of_arrow_[a] != kNone; }
  /// Unit whose identity arrow is a, or kNone.
  [[nodiscard]] UnitIndex unit_of_arrow(ArrowIndex a) const { return unit_of_arrow_[a]; }

  /// Arrows with the given source, in increasing index order (the set Gx).
  [[nodiscard]] const std::vector<ArrowIndex>& arrows_with_source(UnitIndex x) const { return by_source_[x]; }
  /// Arrows with the given range, in increasing index order (the set xG).
  [[nodiscard]] const std::vector<ArrowIndex>& arrows_with_range(UnitIndex x) const { return by_range_[x]; }

  [[nodiscard]] const std::string& unit_name(UnitIndex x) const { return unit_names_[x]; }
  [[nodiscard]] const std::string& arrow_name(ArrowIndex a) const { return arrow_names_[a]; }
  [[nodiscard]] const std::vector<std::string>& unit_names() const noexcept { return unit_names_; }
  [[nodiscard]] const std::vector<std::string>& arrow_names() const noexcept { return arrow_names_; }
  [[nodiscard]] std::optional<UnitIndex> find_unit(std::string_view name) const;
  [[nodiscard]] std::optional<ArrowIndex> find_arrow(std::string_view name) const;

  [[nodiscard]] const std::vector<ArrowIndex>& composition_table() const noexcept { return composition_; }
  [[nodiscard]] const std::vector<UnitIndex>& src_table() const noexcept { return src_; }
  [[nodiscard]] const std::vector<UnitIndex>& rng_table() const noexcept { return rng_; }
  [[nodiscard]] const std::vector<ArrowIndex>& inverse_table() const noexcept { return inverse_; }
  [[nodiscard]] const std::vector<ArrowIndex>& unit_arrow_table() const noexcept { return unit_arrow_; }

  /// Copy with a single composition entry replaced.
  [[nodiscard]] FiniteGroupoid with_composition(ArrowIndex a, ArrowIndex b, ArrowIndex result) const;

 private:
  std::vector<std::string> unit_names_;
  std::vector<std::string> arrow_names_;
  std::vector<UnitIndex> src_;
  std::vector<UnitIndex> rng_;
  std::vector<ArrowIndex> composition_;
  std::vector<ArrowIndex> inverse_;
  std::vector<ArrowIndex> unit_arrow_;
  std::vector<UnitIndex> unit_of_arrow_;
  std::vector<std::vector<ArrowIndex>> by_source_;
  std::vector<std::vector<ArrowIndex>> by_range_;
};

/// Empty report iff every groupoid axiom holds. Violations are named
/// "unit-embedding", "composability", "composition-endpoints", "identity",
/// "inverse" and "associativity".
Report validate_groupoid(const FiniteGroupoid& g);

bool is_bisection(const FiniteGroupoid& g, std::span<const ArrowIndex> arrows);

/// A set of arrows on which src and rng are both injective.
class Bisection {
 public:
  /// Throws std::invalid_argument if src or rng is not injective on arrows.
  Bisection(const FiniteGroupoid& g, std::vector<ArrowIndex> arrows);
  [[nodiscard]] const std::vector<ArrowIndex>& arrows() const noexcept { return arrows_; }
  /// The arrow with source x, if any.
  [[nodiscard]] std::optional<ArrowIndex> over_source(const FiniteGroupoid& g, UnitIndex x) const;

 private:
  std::vector<ArrowIndex> arrows_;
};

/// Orbits of the unit space under the groupoid (connected components).
std::vector<std::vector<UnitIndex>> orbits(const FiniteGroupoid& g);

}  // namespace twistlab
