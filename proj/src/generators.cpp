#include "twistlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace twistlab {

namespace {

bool injective(const std::vector<GroupElement>& map) {
  return std::set<GroupElement>(map.begin(), map.end()).size() == map.size();
}

}  // namespace

GradedTwist group_groupoid(const FiniteGroup& group, const FiniteGroup& gamma, const std::vector<GroupElement>& c,
                           bool require_injective) {
  if (!is_homomorphism(group, gamma, c)) throw std::invalid_argument("group_groupoid: c is not a homomorphism");
  if (require_injective && !injective(c)) throw std::invalid_argument("group_groupoid: c is not injective");
  const std::size_t n = group.size();
  std::vector<ArrowIndex> comp(n * n);
  std::vector<ArrowIndex> inv(n);
  for (GroupElement a = 0; a < n; ++a) {
    inv[a] = group.inv(a);
    for (GroupElement b = 0; b < n; ++b) comp[a * n + b] = group.mul(a, b);
  }
  FiniteGroupoid g({group.name(group.identity())}, group.names(), std::vector<UnitIndex>(n, 0),
                   std::vector<UnitIndex>(n, 0), std::move(comp), std::move(inv), {group.identity()});
  return {std::move(g), TwoCocycle(n), Grading{gamma, c}};
}

GradedTwist group_groupoid(const FiniteGroup& group) {
  std::vector<GroupElement> id(group.size());
  std::iota(id.begin(), id.end(), GroupElement{0});
  return group_groupoid(group, group, id);
}

GradedTwist pair_groupoid(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pair_groupoid: n must be positive");
  const std::size_t m = n * n;
  auto index = [n](std::size_t i, std::size_t j) { return i * n + j; };
  std::vector<std::string> units;
  std::vector<std::string> names(m);
  std::vector<UnitIndex> src(m), rng(m);
  std::vector<ArrowIndex> comp(m * m, kNone), inv(m), unit(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = index(i, j);
      names[a] = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      rng[a] = i;
      src[a] = j;
      inv[a] = index(j, i);
      for (std::size_t k = 0; k < n; ++k) comp[a * m + index(j, k)] = index(i, k);
    }
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = index(i, i);
    units.push_back(names[unit[i]]);
  }
  FiniteGroupoid g(std::move(units), std::move(names), std::move(src), std::move(rng), std::move(comp),
                   std::move(inv), std::move(unit));
  return {std::move(g), TwoCocycle(m), Grading{FiniteGroup::trivial(), std::vector<GroupElement>(m, 0)}};
}

GradedTwist action_groupoid(std::size_t num_points, const FiniteGroup& group,
                            const std::vector<std::vector<std::size_t>>& action, const FiniteGroup& gamma,
                            const std::vector<GroupElement>& c) {
  const std::size_t k = group.size();
  if (action.size() != k) throw std::invalid_argument("action_groupoid: action table has wrong size");
  for (const auto& row : action) {
    if (row.size() != num_points) throw std::invalid_argument("action_groupoid: action table has wrong size");
    for (auto p : row)
      if (p >= num_points) throw std::invalid_argument("action_groupoid: point out of range");
  }
  for (std::size_t p = 0; p < num_points; ++p) {
    if (action[group.identity()][p] != p) throw std::invalid_argument("action_groupoid: identity does not act trivially");
    for (GroupElement g = 0; g < k; ++g) {
      if (g != group.identity() && action[g][p] == p)
        throw std::invalid_argument("action_groupoid: action is not free (" + group.name(g) + " fixes " +
                                    std::to_string(p) + ")");
      for (GroupElement h = 0; h < k; ++h)
        if (action[h][action[g][p]] != action[group.mul(h, g)][p])
          throw std::invalid_argument("action_groupoid: table is not an action");
    }
  }
  if (!is_homomorphism(group, gamma, c) || !injective(c))
    throw std::invalid_argument("action_groupoid: c is not an injective homomorphism");

  const std::size_t m = k * num_points;
  auto index = [num_points](GroupElement g, std::size_t p) { return g * num_points + p; };
  std::vector<std::string> names(m), units(num_points);
  std::vector<UnitIndex> src(m), rng(m);
  std::vector<ArrowIndex> comp(m * m, kNone), inv(m), unit(num_points);
  std::vector<GroupElement> degree(m);
  for (GroupElement g = 0; g < k; ++g)
    for (std::size_t p = 0; p < num_points; ++p) {
      const auto a = index(g, p);
      names[a] = "(" + group.name(g) + "," + std::to_string(p) + ")";
      src[a] = p;
      rng[a] = action[g][p];
      inv[a] = index(group.inv(g), action[g][p]);
      degree[a] = c[g];
      // (h, g.p)(g, p) = (hg, p)
      for (GroupElement h = 0; h < k; ++h) comp[index(h, action[g][p]) * m + a] = index(group.mul(h, g), p);
    }
  for (std::size_t p = 0; p < num_points; ++p) {
    unit[p] = index(group.identity(), p);
    units[p] = names[unit[p]];
  }
  FiniteGroupoid g(std::move(units), std::move(names), std::move(src), std::move(rng), std::move(comp),
                   std::move(inv), std::move(unit));
  return {std::move(g), TwoCocycle(m), Grading{gamma, std::move(degree)}};
}

GradedTwist regular_action_groupoid(const FiniteGroup& group) {
  std::vector<std::vector<std::size_t>> action(group.size(), std::vector<std::size_t>(group.size()));
  std::vector<GroupElement> id(group.size());
  for (GroupElement g = 0; g < group.size(); ++g) {
    id[g] = g;
    for (GroupElement h = 0; h < group.size(); ++h) action[g][h] = group.mul(g, h);
  }
  return action_groupoid(group.size(), group, action, group, id);
}

GradedTwist twisted_group(std::size_t n1, std::size_t n2, const ExponentMatrix& m) {
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("twisted_group: orders must be positive");
  const long l = static_cast<long>(std::lcm(n1, n2));
  const long orders[2] = {static_cast<long>(n1), static_cast<long>(n2)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if ((m[i][j] * orders[i]) % l != 0 || (m[i][j] * orders[j]) % l != 0)
        throw std::invalid_argument("twisted_group: exponent matrix entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") does not give a well-defined phase");
  auto t = group_groupoid(FiniteGroup::abelian({n1, n2}));
  const std::size_t n = n1 * n2;
  std::vector<Complex> values(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const long av[2] = {static_cast<long>(a / n2), static_cast<long>(a % n2)};
      const long bv[2] = {static_cast<long>(b / n2), static_cast<long>(b % n2)};
      long e = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e += av[i] * m[i][j] * bv[j];
      e %= l;
      values[a * n + b] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(l));
    }
  return t.with_cocycle(TwoCocycle(n, std::move(values)));
}

GradedTwist perturb_cocycle(const GradedTwist& t, const Cochain& b) {
  return t.with_cocycle(t.cocycle().times(coboundary(t.groupoid(), b)));
}

Cochain random_cochain(const FiniteGroupoid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  Cochain b(g.num_arrows(), Complex(1.0, 0.0));
  for (ArrowIndex a = 0; a < g.num_arrows(); ++a) {
    const double theta = angle(rng);
    if (!g.is_unit_arrow(a)) b[a] = std::polar(1.0, theta);
  }
  return b;
}

GradedTwist randomize_cocycle(const GradedTwist& t, std::uint64_t seed) {
  return perturb_cocycle(t, random_cochain(t.groupoid(), seed));
}

AlgebraElement random_element(std::size_t num_arrows, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  AlgebraElement f(num_arrows);
  for (ArrowIndex a = 0; a < num_arrows; ++a) f[a] = Complex(u(rng), u(rng));
  return f;
}

AlgebraElement random_homogeneous_normalizer(const GradedTwist& t, std::mt19937_64& rng) {
  const std::size_t n = t.num_arrows();
  if (n == 0) throw std::invalid_argument("random_homogeneous_normalizer: empty groupoid");
  std::vector<GroupElement> degrees;
  for (GroupElement s = 0; s < t.gamma().size(); ++s)
    if (!degree_fiber(t, s).empty()) degrees.push_back(s);
  const auto s = degrees[std::uniform_int_distribution<std::size_t>(0, degrees.size() - 1)(rng)];
  auto fiber = degree_fiber(t, s);
  std::shuffle(fiber.begin(), fiber.end(), rng);

  const auto& g = t.groupoid();
  std::vector<bool> src_used(g.num_units(), false), rng_used(g.num_units(), false);
  std::uniform_real_distribution<double> modulus(0.25, 1.5);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::bernoulli_distribution keep(0.75);
  AlgebraElement f(n);
  bool any = false;
  for (ArrowIndex a : fiber) {
    if (src_used[g.src(a)] || rng_used[g.rng(a)]) continue;
    if (any && !keep(rng)) continue;
    src_used[g.src(a)] = rng_used[g.rng(a)] = true;
    f[a] = std::polar(modulus(rng), angle(rng));
    any = true;
  }
  return f;
}

std::vector<NamedTwist> base_corpus() {
  std::vector<NamedTwist> out;
  const std::vector<std::vector<std::size_t>> abelian = {{1}, {2}, {3}, {4}, {2, 2}, {5}, {6},
                                                         {7}, {8}, {2, 4}, {2, 2, 2}};
  for (const auto& orders : abelian) {
    const auto group = FiniteGroup::abelian(orders);
    out.push_back({"group:" + group.preset(), group_groupoid(group)});
  }
  out.push_back({"group:S3", group_groupoid(FiniteGroup::symmetric3())});
  out.push_back({"group:Z2->Z4", group_groupoid(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4), {0, 2})});

  for (std::size_t n = 1; n <= 5; ++n) out.push_back({"pair:" + std::to_string(n), pair_groupoid(n)});

  const auto z2 = FiniteGroup::cyclic(2);
  const auto z3 = FiniteGroup::cyclic(3);
  out.push_back({"action:Z2-swap", action_groupoid(2, z2, {{0, 1}, {1, 0}}, z2, {0, 1})});
  out.push_back({"action:Z3-cyclic", action_groupoid(3, z3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, z3, {0, 1, 2})});
  out.push_back({"action:Z2-two-orbits", action_groupoid(4, z2, {{0, 1, 2, 3}, {1, 0, 3, 2}}, z2, {0, 1})});
  out.push_back({"action:Z2xZ2-regular", regular_action_groupoid(FiniteGroup::abelian({2, 2}))});
  out.push_back({"action:S3-regular", regular_action_groupoid(FiniteGroup::symmetric3())});

  out.push_back({"twisted:Z2xZ2", twisted_group(2, 2, {{{0, 0}, {1, 0}}})});
  out.push_back({"twisted:Z3xZ3", twisted_group(3, 3, {{{0, 0}, {1, 0}}})});
  out.push_back({"twisted:Z2xZ4", twisted_group(2, 4, {{{0, 0}, {2, 0}}})});
  return out;
}

std::vector<NamedTwist> full_corpus(std::size_t perturbations) {
  const auto base = base_corpus();
  std::vector<NamedTwist> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.push_back(base[i]);
    for (std::size_t k = 0; k < perturbations; ++k) {
      const std::uint64_t seed = 1000 * (i + 1) + k;
      out.push_back({base[i].name + "#" + std::to_string(k + 1), randomize_cocycle(base[i].twist, seed)});
    }
  }
  return out;
}

}  // namespace twistlab
