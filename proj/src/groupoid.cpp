#include "twistlab/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace twistlab {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> unit_names, std::vector<std::string> arrow_names,
                               std::vector<UnitIndex> src, std::vector<UnitIndex> rng,
                               std::vector<ArrowIndex> composition, std::vector<ArrowIndex> inverse,
                               std::vector<ArrowIndex> unit_arrow)
    : unit_names_(std::move(unit_names)),
      arrow_names_(std::move(arrow_names)),
      src_(std::move(src)),
      rng_(std::move(rng)),
      composition_(std::move(composition)),
      inverse_(std::move(inverse)),
      unit_arrow_(std::move(unit_arrow)) {
  const std::size_t na = arrow_names_.size();
  const std::size_t nu = unit_names_.size();
  if (src_.size() != na || rng_.size() != na || inverse_.size() != na)
    throw std::invalid_argument("groupoid: src/rng/inverse tables must have one entry per arrow");
  if (composition_.size() != na * na) throw std::invalid_argument("groupoid: composition table must be |arrows|^2");
  if (unit_arrow_.size() != nu) throw std::invalid_argument("groupoid: unit_arrow table must have one entry per unit");
  for (std::size_t a = 0; a < na; ++a) {
    if (src_[a] >= nu || rng_[a] >= nu) throw std::invalid_argument("groupoid: src/rng out of range");
    if (inverse_[a] != kNone && inverse_[a] >= na) throw std::invalid_argument("groupoid: inverse out of range");
  }
  for (auto c : composition_)
    if (c != kNone && c >= na) throw std::invalid_argument("groupoid: composition entry out of range");
  unit_of_arrow_.assign(na, kNone);
  for (UnitIndex x = 0; x < nu; ++x) {
    if (unit_arrow_[x] >= na) throw std::invalid_argument("groupoid: unit_arrow out of range");
    if (unit_of_arrow_[unit_arrow_[x]] != kNone)
      throw std::invalid_argument("groupoid: two units share the identity arrow '" + arrow_names_[unit_arrow_[x]] + "'");
    unit_of_arrow_[unit_arrow_[x]] = x;
  }
  by_source_.assign(nu, {});
  by_range_.assign(nu, {});
  for (ArrowIndex a = 0; a < na; ++a) {
    by_source_[src_[a]].push_back(a);
    by_range_[rng_[a]].push_back(a);
  }
}

std::optional<UnitIndex> FiniteGroupoid::find_unit(std::string_view name) const {
  for (UnitIndex x = 0; x < unit_names_.size(); ++x)
    if (unit_names_[x] == name) return x;
  return std::nullopt;
}

std::optional<ArrowIndex> FiniteGroupoid::find_arrow(std::string_view name) const {
  for (ArrowIndex a = 0; a < arrow_names_.size(); ++a)
    if (arrow_names_[a] == name) return a;
  return std::nullopt;
}

FiniteGroupoid FiniteGroupoid::with_composition(ArrowIndex a, ArrowIndex b, ArrowIndex result) const {
  auto comp = composition_;
  comp.at(a * num_arrows() + b) = result;
  return FiniteGroupoid(unit_names_, arrow_names_, src_, rng_, std::move(comp), inverse_, unit_arrow_);
}

Report validate_groupoid(const FiniteGroupoid& g) {
  Report report;
  const std::size_t na = g.num_arrows();
  const auto name = [&](ArrowIndex a) { return a == kNone ? std::string("<undefined>") : g.arrow_name(a); };

  for (UnitIndex x = 0; x < g.num_units(); ++x) {
    const auto u = g.unit_arrow(x);
    if (g.src(u) != x || g.rng(u) != x)
      report.add("unit-embedding", {u}, "identity arrow " + name(u) + " of unit " + g.unit_name(x) +
                                            " does not have source and range " + g.unit_name(x));
  }

  for (ArrowIndex a = 0; a < na; ++a)
    for (ArrowIndex b = 0; b < na; ++b) {
      const auto ab = g.compose(a, b);
      const bool should = g.composable(a, b);
      if (should != (ab != kNone)) {
        report.add("composability", {a, b},
                   should ? "(" + name(a) + "," + name(b) + ") is composable but has no product"
                          : "(" + name(a) + "," + name(b) + ") is not composable but has product " + name(ab));
      } else if (ab != kNone && (g.src(ab) != g.src(b) || g.rng(ab) != g.rng(a))) {
        report.add("composition-endpoints", {a, b, ab},
                   name(a) + "*" + name(b) + " = " + name(ab) + " has the wrong source or range");
      }
    }

  for (ArrowIndex a = 0; a < na; ++a) {
    const auto left = g.compose(g.unit_arrow(g.rng(a)), a);
    const auto right = g.compose(a, g.unit_arrow(g.src(a)));
    if (left != a || right != a)
      report.add("identity", {a}, "identity arrows do not act trivially on " + name(a));
  }

  for (ArrowIndex a = 0; a < na; ++a) {
    const auto ai = g.inverse(a);
    if (ai == kNone) {
      report.add("inverse", {a}, name(a) + " has no inverse");
      continue;
    }
    if (g.inverse(ai) != a) report.add("inverse", {a, ai}, "inverse is not an involution at " + name(a));
    if (g.compose(a, ai) != g.unit_arrow(g.rng(a)) || g.compose(ai, a) != g.unit_arrow(g.src(a)))
      report.add("inverse", {a, ai}, name(a) + " composed with " + name(ai) + " is not an identity arrow");
  }

  for (ArrowIndex a = 0; a < na; ++a)
    for (ArrowIndex b : g.arrows_with_range(g.src(a)))
      for (ArrowIndex c : g.arrows_with_range(g.src(b))) {
        const auto ab = g.compose(a, b);
        const auto bc = g.compose(b, c);
        if (ab == kNone || bc == kNone) continue;  // already reported as composability
        const auto lhs = g.compose(ab, c);
        const auto rhs = g.compose(a, bc);
        if (lhs != rhs)
          report.add("associativity", {a, b, c},
                     "(" + name(a) + "*" + name(b) + ")*" + name(c) + " = " + name(lhs) + " but " + name(a) + "*(" +
                         name(b) + "*" + name(c) + ") = " + name(rhs));
      }
  return report;
}

bool is_bisection(const FiniteGroupoid& g, std::span<const ArrowIndex> arrows) {
  std::set<UnitIndex> sources;
  std::set<UnitIndex> ranges;
  for (auto a : arrows) {
    if (!sources.insert(g.src(a)).second) return false;
    if (!ranges.insert(g.rng(a)).second) return false;
  }
  return true;
}

Bisection::Bisection(const FiniteGroupoid& g, std::vector<ArrowIndex> arrows) : arrows_(std::move(arrows)) {
  std::sort(arrows_.begin(), arrows_.end());
  arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
  for (auto a : arrows_)
    if (a >= g.num_arrows()) throw std::invalid_argument("bisection: arrow out of range");
  if (!is_bisection(g, arrows_)) throw std::invalid_argument("bisection: src or rng is not injective");
}

std::optional<ArrowIndex> Bisection::over_source(const FiniteGroupoid& g, UnitIndex x) const {
  for (auto a : arrows_)
    if (g.src(a) == x) return a;
  return std::nullopt;
}

std::vector<std::vector<UnitIndex>> orbits(const FiniteGroupoid& g) {
  std::vector<UnitIndex> parent(g.num_units());
  std::iota(parent.begin(), parent.end(), UnitIndex{0});
  auto find = [&](UnitIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ArrowIndex a = 0; a < g.num_arrows(); ++a) {
    auto r1 = find(g.src(a));
    auto r2 = find(g.rng(a));
    if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
  }
  std::vector<std::vector<UnitIndex>> result;
  std::vector<std::size_t> slot(g.num_units(), kNone);
  for (UnitIndex x = 0; x < g.num_units(); ++x) {
    auto r = find(x);
    if (slot[r] == kNone) {
      slot[r] = result.size();
      result.emplace_back();
    }
    result[slot[r]].push_back(x);
  }
  return result;
}

}  // namespace twistlab
