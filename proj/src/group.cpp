#include "twistlab/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace twistlab {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<GroupElement>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("group must have at least one element");
  if (table_.size() != n) throw std::invalid_argument("group table has wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("group table has a row of wrong length");
    for (auto v : row)
      if (v >= n) throw std::invalid_argument("group table entry out of range");
  }
  // identity
  std::optional<GroupElement> e;
  for (GroupElement a = 0; a < n && !e; ++a) {
    bool is_e = true;
    for (GroupElement b = 0; b < n && is_e; ++b) is_e = table_[a][b] == b && table_[b][a] == b;
    if (is_e) e = a;
  }
  if (!e) throw std::invalid_argument("group table has no identity");
  identity_ = *e;
  for (GroupElement a = 0; a < n; ++a)
    for (GroupElement b = 0; b < n; ++b)
      for (GroupElement c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("group table is not associative at (" + names_[a] + "," + names_[b] + "," +
                                      names_[c] + ")");
  inverse_.assign(n, kNone);
  for (GroupElement a = 0; a < n; ++a) {
    for (GroupElement b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    if (inverse_[a] == kNone) throw std::invalid_argument("element " + names_[a] + " has no inverse");
  }
  for (GroupElement a = 0; a < n && abelian_; ++a)
    for (GroupElement b = 0; b < n && abelian_; ++b) abelian_ = table_[a][b] == table_[b][a];
}

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g({"0"}, {{0}});
  g.preset_ = "trivial";
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  auto g = abelian({n});
  return g;
}

FiniteGroup FiniteGroup::abelian(const std::vector<std::size_t>& orders) {
  if (orders.empty()) return trivial();
  std::size_t total = 1;
  for (auto o : orders) {
    if (o == 0) throw std::invalid_argument("cyclic factor of order zero");
    total *= o;
  }
  auto decode = [&](std::size_t idx) {
    std::vector<std::size_t> digits(orders.size());
    for (std::size_t k = orders.size(); k-- > 0;) {
      digits[k] = idx % orders[k];
      idx /= orders[k];
    }
    return digits;
  };
  auto encode = [&](const std::vector<std::size_t>& digits) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < orders.size(); ++k) idx = idx * orders[k] + digits[k];
    return idx;
  };
  std::vector<std::string> names(total);
  for (std::size_t i = 0; i < total; ++i) {
    auto d = decode(i);
    if (orders.size() == 1) {
      names[i] = std::to_string(d[0]);
    } else {
      std::string s = "(";
      for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
      names[i] = s + ")";
    }
  }
  std::vector<std::vector<GroupElement>> table(total, std::vector<GroupElement>(total));
  for (std::size_t i = 0; i < total; ++i) {
    auto a = decode(i);
    for (std::size_t j = 0; j < total; ++j) {
      auto b = decode(j);
      std::vector<std::size_t> c(orders.size());
      for (std::size_t k = 0; k < orders.size(); ++k) c[k] = (a[k] + b[k]) % orders[k];
      table[i][j] = encode(c);
    }
  }
  FiniteGroup g(std::move(names), std::move(table));
  std::string preset;
  for (std::size_t k = 0; k < orders.size(); ++k) preset += (k ? "xZ" : "Z") + std::to_string(orders[k]);
  g.preset_ = preset;
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  // permutations of {0,1,2} as images of (0,1,2)
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
  std::vector<std::vector<GroupElement>> table(6, std::vector<GroupElement>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      // (p_i o p_j)(k) = p_i(p_j(k))
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      table[i][j] = static_cast<GroupElement>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  FiniteGroup g(names, std::move(table));
  g.preset_ = "S3";
  return g;
}

FiniteGroup FiniteGroup::from_preset(std::string_view preset) {
  if (preset == "trivial") return trivial();
  if (preset == "S3") return symmetric3();
  std::vector<std::size_t> orders;
  std::string_view rest = preset;
  while (!rest.empty()) {
    if (rest.front() != 'Z') throw std::invalid_argument("unknown group preset '" + std::string(preset) + "'");
    rest.remove_prefix(1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || value == 0)
      throw std::invalid_argument("unknown group preset '" + std::string(preset) + "'");
    orders.push_back(value);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (!rest.empty()) {
      if (rest.front() != 'x') throw std::invalid_argument("unknown group preset '" + std::string(preset) + "'");
      rest.remove_prefix(1);
      if (rest.empty()) throw std::invalid_argument("unknown group preset '" + std::string(preset) + "'");
    }
  }
  if (orders.empty()) throw std::invalid_argument("empty group preset");
  return abelian(orders);
}

std::optional<GroupElement> FiniteGroup::find(std::string_view name) const {
  for (GroupElement a = 0; a < names_.size(); ++a)
    if (names_[a] == name) return a;
  return std::nullopt;
}

std::size_t FiniteGroup::order_of(GroupElement a) const {
  std::size_t k = 1;
  GroupElement p = a;
  while (p != identity_) {
    p = mul(p, a);
    ++k;
  }
  return k;
}

bool is_character(const FiniteGroup& group, const Character& values, double tol) {
  if (values.size() != group.size()) return false;
  for (auto v : values)
    if (std::abs(std::abs(v) - 1.0) > tol) return false;
  for (GroupElement a = 0; a < group.size(); ++a)
    for (GroupElement b = 0; b < group.size(); ++b)
      if (!near(values[group.mul(a, b)], values[a] * values[b], tol)) return false;
  return true;
}

std::vector<Character> characters(const FiniteGroup& group) {
  if (!group.is_abelian()) throw std::invalid_argument("characters: group is not abelian");
  const std::size_t n = group.size();
  // Greedy generating set: add elements until the generated subgroup is everything.
  std::vector<GroupElement> gens;
  std::vector<bool> covered(n, false);
  covered[group.identity()] = true;
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (GroupElement a = 0; a < n; ++a) {
        if (!covered[a]) continue;
        for (auto g : gens) {
          auto p = group.mul(a, g);
          if (!covered[p]) covered[p] = grew = true;
        }
      }
    }
  };
  for (GroupElement a = 0; a < n; ++a) {
    if (covered[a]) continue;
    gens.push_back(a);
    close();
  }
  std::vector<std::size_t> orders;
  for (auto g : gens) orders.push_back(group.order_of(g));

  std::vector<Character> result;
  std::vector<std::size_t> exps(gens.size(), 0);
  for (;;) {
    // Propagate generator values along words; reject inconsistent assignments.
    Character chi(n, Complex(0.0, 0.0));
    std::vector<bool> set(n, false);
    chi[group.identity()] = 1.0;
    set[group.identity()] = true;
    bool consistent = true;
    std::vector<GroupElement> frontier{group.identity()};
    while (!frontier.empty() && consistent) {
      std::vector<GroupElement> next;
      for (auto a : frontier)
        for (std::size_t k = 0; k < gens.size(); ++k) {
          const double angle = 2.0 * std::numbers::pi * static_cast<double>(exps[k]) / static_cast<double>(orders[k]);
          const Complex value = chi[a] * std::polar(1.0, angle);
          auto p = group.mul(a, gens[k]);
          if (!set[p]) {
            chi[p] = value;
            set[p] = true;
            next.push_back(p);
          } else if (!near(chi[p], value, 1e-9)) {
            consistent = false;
          }
        }
      frontier = std::move(next);
    }
    if (consistent && is_character(group, chi, 1e-9)) result.push_back(std::move(chi));
    std::size_t k = 0;
    while (k < exps.size() && ++exps[k] == orders[k]) exps[k++] = 0;
    if (k == exps.size()) break;
  }
  if (result.size() != n) throw std::logic_error("characters: enumeration did not produce |G| characters");
  return result;
}

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<GroupElement>& map) {
  if (map.size() != from.size()) return false;
  for (auto v : map)
    if (v >= to.size()) return false;
  for (GroupElement a = 0; a < from.size(); ++a)
    for (GroupElement b = 0; b < from.size(); ++b)
      if (map[from.mul(a, b)] != to.mul(map[a], map[b])) return false;
  return true;
}

}  // namespace twistlab
