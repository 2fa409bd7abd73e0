#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistlab/types.hpp"

namespace twistlab {

/// A finite group given by its multiplication table. Elements are the
/// indices 0..size()-1; names are only used for I/O.
class FiniteGroup {
 public:
  /// Throws std::invalid_argument unless the table defines a group.
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<GroupElement>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  /// Z/n1 x Z/n2 x ... with elements named "(a1,a2,...)" (or "k" for one
  /// factor), indexed in mixed radix with the last factor fastest.
  static FiniteGroup abelian(const std::vector<std::size_t>& orders);
  /// Symmetric group on three letters.
  static FiniteGroup symmetric3();
  /// Named presets: "trivial", "Zn", "ZaxZbx...", "S3".
  static FiniteGroup from_preset(std::string_view preset);

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] GroupElement identity() const noexcept { return identity_; }
  [[nodiscard]] GroupElement mul(GroupElement a, GroupElement b) const { return table_[a][b]; }
  [[nodiscard]] GroupElement inv(GroupElement a) const { return inverse_[a]; }
  [[nodiscard]] const std::string& name(GroupElement a) const { return names_[a]; }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] const std::vector<std::vector<GroupElement>>& table() const noexcept { return table_; }
  [[nodiscard]] std::optional<GroupElement> find(std::string_view name) const;
  [[nodiscard]] bool is_abelian() const noexcept { return abelian_; }
  [[nodiscard]] std::size_t order_of(GroupElement a) const;
  /// Preset string this group was built from, empty for explicit tables.
  [[nodiscard]] const std::string& preset() const noexcept { return preset_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<GroupElement>> table_;
  std::vector<GroupElement> inverse_;
  GroupElement identity_ = 0;
  bool abelian_ = true;
  std::string preset_;
};

/// A character: values on the group elements.
using Character = std::vector<Complex>;

/// True iff values is a homomorphism into the circle group within tol.
bool is_character(const FiniteGroup& group, const Character& values, double tol = kAlgebraTol);

/// All characters of an abelian group (|result| == group.size()), trivial
/// character first. Throws std::invalid_argument for nonabelian groups.
std::vector<Character> characters(const FiniteGroup& group);

/// True iff map is a group homomorphism from `from` into `to`.
bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<GroupElement>& map);

}  // namespace twistlab
