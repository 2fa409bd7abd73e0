#include "twistlab/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "twistlab/cartan.hpp"
#include "twistlab/generators.hpp"

namespace twistlab {

std::uint64_t fingerprint(const GradedTwist& t) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  const auto& g = t.groupoid();
  mix(g.num_units());
  mix(g.num_arrows());
  for (auto v : g.src_table()) mix(v);
  for (auto v : g.rng_table()) mix(v);
  for (auto v : g.composition_table()) mix(v);
  for (auto v : t.grading().degree) mix(v);
  return h;
}

namespace {

/// psi_{(n,x)}(a) = Delta(n* a)(x) / |n|(x).
Complex eigenfunctional(const GradedTwist& t, const AlgebraElement& n, UnitIndex x, const AlgebraElement& a) {
  const Complex num = diagonal_value(t, convolve(t, adjoint(t, n), a), x);
  const double density = diagonal_value(t, convolve(t, adjoint(t, n), n), x).real();
  return num / std::sqrt(density);
}

std::string describe(const Report& r) {
  if (r.ok()) return "ok";
  const auto& v = r.violations.front();
  return v.rule + ": " + v.detail + (r.violations.size() > 1 ? " (+" + std::to_string(r.violations.size() - 1) + " more)" : "");
}

struct GermTable {
  std::vector<AlgebraElement> reps;
  std::vector<UnitIndex> base;

  /// The class [n, x]_G, found through Delta(rep* n)(x) != 0.
  [[nodiscard]] std::size_t find(const GradedTwist& t, const AlgebraElement& n, UnitIndex x) const {
    std::size_t found = kNone;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      if (base[k] != x) continue;
      if (std::abs(diagonal_value(t, convolve(t, adjoint(t, reps[k]), n), x)) <= kAlgebraTol) continue;
      if (found != kNone) throw ToleranceError("reconstruct: germ matches two classes");
      found = k;
    }
    return found;
  }
};

}  // namespace

ReconstructedTwist reconstruct(const GradedTwist& t) {
  const auto report = validate_twist(t);
  if (!report.ok()) {
    throw PreconditionError("input twist fails validation: " + describe(report), report.violations.front().witnesses);
  }
  const auto eff = is_effective_zero_fiber(t);
  if (!eff.effective) {
    throw PreconditionError("degree-zero fiber is not principal: isotropy arrow " + t.groupoid().arrow_name(*eff.witness),
                            {*eff.witness});
  }
  const auto cartan = cartan_check(t);
  for (const auto& c : cartan.checks)
    if (!c.passed) throw PreconditionError("cartan check '" + c.name + "' failed: " + c.detail, c.witnesses);

  const auto& g = t.groupoid();
  const std::size_t n = g.num_arrows();
  const std::size_t nu = g.num_units();
  const auto& gamma = t.gamma();

  // Canonical normalizers delta_a, visited in (degree, arrow) order.
  std::vector<ArrowIndex> order(n);
  std::iota(order.begin(), order.end(), ArrowIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](ArrowIndex a, ArrowIndex b) { return t.degree(a) < t.degree(b); });

  GermTable germs;
  ReconstructedTwist rt;
  rt.upsilon.assign(n, kNone);
  for (ArrowIndex a : order) {
    const auto da = AlgebraElement::delta(n, a);
    for (UnitIndex x = 0; x < nu; ++x) {
      if (!in_domain(t, da, x)) continue;
      auto k = germs.find(t, da, x);
      if (k == kNone) {
        k = germs.reps.size();
        germs.reps.push_back(da);
        germs.base.push_back(x);
      }
      rt.upsilon[a] = k;
    }
  }
  const std::size_t m = germs.reps.size();

  // Grading of a germ: the degree s with Phi_s(rep) = rep.
  std::vector<GroupElement> degree1(m, kNone);
  for (std::size_t k = 0; k < m; ++k)
    for (GroupElement s = 0; s < gamma.size(); ++s)
      if (distance(spectral_component(t, s, germs.reps[k]), germs.reps[k]) <= kAlgebraTol) {
        degree1[k] = s;
        break;
      }

  std::vector<UnitIndex> src1(germs.base);
  std::vector<UnitIndex> rng1(m);
  for (std::size_t k = 0; k < m; ++k) rng1[k] = alpha(t, germs.reps[k], src1[k]);

  std::vector<ArrowIndex> unit1(nu);
  for (UnitIndex x = 0; x < nu; ++x) {
    unit1[x] = germs.find(t, unit_indicator(t, x), x);
    if (unit1[x] == kNone) throw ToleranceError("reconstruct: no germ for the unit " + g.unit_name(x));
  }

  std::vector<ArrowIndex> comp1(m * m, kNone);
  std::vector<Complex> phase(m * m, Complex(1.0, 0.0));
  double worst = 0.0;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) {
      if (src1[k] != rng1[l]) continue;
      // [m_k, alpha(x)][m_l, x] = [m_k m_l, x]
      const UnitIndex x = src1[l];
      const auto prod = convolve(t, germs.reps[k], germs.reps[l]);
      const auto j = germs.find(t, prod, x);
      if (j == kNone) throw ToleranceError("reconstruct: product germ not found");
      comp1[k * m + l] = j;
      // psi_{(prod, x)} = conj(z) psi_{(rep_j, x)}, so [prod, x]_Sigma = z . [rep_j, x]_Sigma.
      const Complex zc = eigenfunctional(t, prod, x, germs.reps[j]) / eigenfunctional(t, germs.reps[j], x, germs.reps[j]);
      const double dev = std::abs(std::abs(zc) - 1.0);
      worst = std::max(worst, dev);
      if (dev > 1e-8) throw ToleranceError("reconstruct: extracted phase has modulus " + std::to_string(std::abs(zc)));
      phase[k * m + l] = std::conj(zc) / std::abs(zc);
    }

  std::vector<ArrowIndex> inv1(m);
  for (std::size_t k = 0; k < m; ++k) {
    inv1[k] = germs.find(t, adjoint(t, germs.reps[k]), rng1[k]);
    if (inv1[k] == kNone) throw ToleranceError("reconstruct: inverse germ not found");
  }

  std::vector<std::string> names1(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto supp = germs.reps[k].support();
    names1[k] = "[delta_" + g.arrow_name(supp.front()) + "," + g.unit_name(src1[k]) + "]";
  }

  FiniteGroupoid g1(g.unit_names(), names1, src1, rng1, comp1, inv1, unit1);
  TwoCocycle sigma1(m, phase);
  Grading grading1{gamma, degree1};
  rt.representatives = germs.reps;
  rt.source_fingerprint = fingerprint(t);

  auto& cert = rt.certificate;
  cert.max_phase_deviation = worst;
  const auto g1_report = validate_groupoid(g1);
  cert.groupoid_valid = g1_report.ok();
  if (!cert.groupoid_valid) cert.failures.push_back("G_1 is not a groupoid: " + describe(g1_report));
  if (cert.groupoid_valid) {
    const auto c1 = validate_cocycle(g1, sigma1);
    if (!c1.ok()) cert.failures.push_back("cocycle_1 is not a cocycle: " + describe(c1));
    const auto gr1 = validate_grading(g1, grading1);
    if (!gr1.ok()) cert.failures.push_back("grading_1 is not a homomorphism: " + describe(gr1));
  }

  std::vector<bool> hit(m, false);
  bool bijective = m == n;
  for (ArrowIndex a = 0; a < n && bijective; ++a) {
    if (rt.upsilon[a] == kNone || hit[rt.upsilon[a]]) bijective = false;
    else hit[rt.upsilon[a]] = true;
  }
  cert.bijective = bijective;
  if (!bijective) cert.failures.push_back("Upsilon_G is not a bijection (" + std::to_string(m) + " germs)");

  bool preserves = bijective;
  bool grading_ok = bijective;
  if (bijective) {
    for (UnitIndex x = 0; x < nu; ++x)
      if (rt.upsilon[g.unit_arrow(x)] != unit1[x]) preserves = false;
    for (ArrowIndex a = 0; a < n; ++a) {
      const auto u = rt.upsilon[a];
      if (src1[u] != g.src(a) || rng1[u] != g.rng(a) || inv1[u] != rt.upsilon[g.inverse(a)]) preserves = false;
      if (degree1[u] != t.degree(a)) grading_ok = false;
      for (ArrowIndex b : g.arrows_with_range(g.src(a)))
        if (rt.upsilon[g.compose(a, b)] != comp1[u * m + rt.upsilon[b]]) preserves = false;
    }
    if (!preserves) cert.failures.push_back("Upsilon_G does not preserve the groupoid structure");
    if (!grading_ok) cert.failures.push_back("c_{G_1} o Upsilon_G != c_G");
  }
  cert.preserves_structure = preserves;
  cert.grading_commutes = grading_ok;

  if (bijective && cert.groupoid_valid) {
    std::vector<Complex> pulled(n * n, Complex(1.0, 0.0));
    for (ArrowIndex a = 0; a < n; ++a)
      for (ArrowIndex b : g.arrows_with_range(g.src(a))) pulled[a * n + b] = sigma1(rt.upsilon[a], rt.upsilon[b]);
    cert.cocycle_witness = cohomologous(g, TwoCocycle(n, pulled), t.cocycle());
    if (!cert.cocycle_witness) cert.failures.push_back("pulled-back cocycle_1 is not cohomologous to sigma");
    cert.cocycle_class_trivial = cohomologous(g1, sigma1, TwoCocycle(m)).has_value();
  }

  rt.twist = GradedTwist(std::move(g1), std::move(sigma1), std::move(grading1));
  return rt;
}

AlgebraElement hat_map(const GradedTwist& t, const AlgebraElement& a, const ReconstructedTwist& rt) {
  if (rt.source_fingerprint != fingerprint(t) || rt.upsilon.size() != t.num_arrows())
    throw std::invalid_argument("hat_map: reconstruction was built from a different twist");
  if (a.size() != t.num_arrows()) throw std::invalid_argument("hat_map: element size mismatch");
  const auto& g1 = rt.twist.groupoid();
  AlgebraElement out(g1.num_arrows());
  for (ArrowIndex k = 0; k < g1.num_arrows(); ++k) out[k] = eigenfunctional(t, rt.representatives[k], g1.src(k), a);
  return out;
}

bool RoundtripCertificate::passed(const RoundtripOptions& opt) const {
  return reconstruction.certificate.passed() && psi_injective && max_homomorphism_error <= opt.algebra_tol &&
         max_adjoint_error <= opt.algebra_tol && max_linearity_error <= opt.algebra_tol &&
         max_norm_error <= opt.norm_tol;
}

RoundtripCertificate verify_roundtrip(const GradedTwist& t, const RoundtripOptions& options) {
  RoundtripCertificate cert;
  cert.reconstruction = reconstruct(t);
  const auto& rt = cert.reconstruction;
  if (!rt.certificate.passed()) {
    const std::string why = rt.certificate.failures.empty() ? "certificate incomplete" : rt.certificate.failures.front();
    throw VerificationError("reconstruction certificate failed: " + why, cert);
  }
  const auto& t1 = rt.twist;
  const std::size_t n = t.num_arrows();

  ComplexMatrix psi(n, n);
  for (ArrowIndex a = 0; a < n; ++a) {
    const auto image = hat_map(t, AlgebraElement::delta(n, a), rt);
    for (ArrowIndex k = 0; k < n; ++k) psi(k, a) = image[k];
  }
  cert.psi_injective = n == 0 || null_space(psi).cols() == 0;
  if (!cert.psi_injective) throw VerificationError("Psi is not injective", cert);

  std::mt19937_64 rng(options.seed);
  auto relative = [](double err, double scale) { return err / std::max(1.0, scale); };
  for (std::size_t i = 0; i < options.samples; ++i) {
    const auto a = random_element(n, rng);
    const auto b = random_element(n, rng);
    const Complex lambda(std::uniform_real_distribution<double>(-1.0, 1.0)(rng), 0.5);
    const auto ha = hat_map(t, a, rt);
    const auto hb = hat_map(t, b, rt);

    const auto ab = convolve(t, a, b);
    const auto lhs = hat_map(t, ab, rt);
    const auto rhs = convolve(t1, ha, hb);
    cert.max_homomorphism_error = std::max(cert.max_homomorphism_error, relative(distance(lhs, rhs), lhs.max_abs()));

    const auto star_lhs = hat_map(t, adjoint(t, a), rt);
    const auto star_rhs = adjoint(t1, ha);
    cert.max_adjoint_error = std::max(cert.max_adjoint_error, relative(distance(star_lhs, star_rhs), ha.max_abs()));

    const auto lin_lhs = hat_map(t, a + lambda * b, rt);
    const auto lin_rhs = ha + lambda * hb;
    cert.max_linearity_error = std::max(cert.max_linearity_error, relative(distance(lin_lhs, lin_rhs), lin_lhs.max_abs()));

    NormSample sample{reduced_norm(t, a), reduced_norm(t1, ha)};
    cert.max_norm_error = std::max(cert.max_norm_error, std::abs(sample.input_norm - sample.reconstructed_norm));
    cert.norm_samples.push_back(sample);
  }
  if (cert.max_homomorphism_error > options.algebra_tol) throw VerificationError("Psi is not multiplicative", cert);
  if (cert.max_adjoint_error > options.algebra_tol) throw VerificationError("Psi does not preserve adjoints", cert);
  if (cert.max_linearity_error > options.algebra_tol) throw VerificationError("Psi is not linear", cert);
  if (cert.max_norm_error > options.norm_tol) throw VerificationError("Psi is not isometric", cert);
  return cert;
}

}  // namespace twistlab
