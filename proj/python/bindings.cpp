#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistlab/cartan.hpp"
#include "twistlab/document.hpp"
#include "twistlab/generators.hpp"
#include "twistlab/reconstruct.hpp"

namespace py = pybind11;
using namespace twistlab;

namespace {

AlgebraElement element(const GradedTwist& t, const std::vector<Complex>& coeffs) {
  if (coeffs.size() != t.num_arrows())
    throw std::invalid_argument("expected " + std::to_string(t.num_arrows()) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  return AlgebraElement(coeffs);
}

GroupElement degree_of(const GradedTwist& t, const std::string& name) {
  const auto s = t.gamma().find(name);
  if (!s) throw std::invalid_argument("unknown element '" + name + "' of gamma");
  return *s;
}

std::optional<std::size_t> maybe(std::size_t v) {
  if (v == kNone) return std::nullopt;
  return v;
}

py::list violations(const Report& r) {
  py::list out;
  for (const auto& v : r.violations)
    out.append(py::dict(py::arg("rule") = v.rule, py::arg("witnesses") = v.witnesses, py::arg("detail") = v.detail));
  return out;
}

// serialized JSON crosses the boundary as text; the package decodes it
std::string json_text(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Twisted groupoid convolution algebras and Weyl reconstruction";

  static py::exception<PreconditionError> precondition(m, "PreconditionError", PyExc_ValueError);
  static py::exception<VerificationError> verification(m, "VerificationError", PyExc_RuntimeError);
  static py::exception<ToleranceError> tolerance(m, "ToleranceError", PyExc_ArithmeticError);
  static py::exception<DocumentError> document(m, "DocumentError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PreconditionError& e) {
      py::set_error(precondition, e.what());
    } catch (const VerificationError& e) {
      py::set_error(verification, e.what());
    } catch (const ToleranceError& e) {
      py::set_error(tolerance, e.what());
    } catch (const DocumentError& e) {
      py::set_error(document, e.what());
    }
  });

  m.attr("ALGEBRA_TOL") = kAlgebraTol;
  m.attr("NORM_TOL") = kNormTol;

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def(py::init<std::vector<std::string>, std::vector<std::vector<GroupElement>>>(), py::arg("names"),
           py::arg("table"))
      .def_static("from_preset", &FiniteGroup::from_preset)
      .def_static("cyclic", &FiniteGroup::cyclic)
      .def_static("abelian", &FiniteGroup::abelian)
      .def("__len__", &FiniteGroup::size)
      .def_property_readonly("names", &FiniteGroup::names)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("is_abelian", &FiniteGroup::is_abelian)
      .def_property_readonly("preset", &FiniteGroup::preset)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("find", &FiniteGroup::find)
      .def("characters", [](const FiniteGroup& g) { return characters(g); });

  py::class_<FiniteGroupoid>(m, "FiniteGroupoid")
      .def_property_readonly("num_units", &FiniteGroupoid::num_units)
      .def_property_readonly("num_arrows", &FiniteGroupoid::num_arrows)
      .def_property_readonly("unit_names", &FiniteGroupoid::unit_names)
      .def_property_readonly("arrow_names", &FiniteGroupoid::arrow_names)
      .def("src", &FiniteGroupoid::src)
      .def("rng", &FiniteGroupoid::rng)
      .def("compose", [](const FiniteGroupoid& g, ArrowIndex a, ArrowIndex b) { return maybe(g.compose(a, b)); })
      .def("inverse", [](const FiniteGroupoid& g, ArrowIndex a) { return maybe(g.inverse(a)); })
      .def("unit_arrow", &FiniteGroupoid::unit_arrow)
      .def("find_arrow", &FiniteGroupoid::find_arrow);

  py::class_<GradedTwist>(m, "GradedTwist")
      .def_property_readonly("groupoid", &GradedTwist::groupoid, py::return_value_policy::reference_internal)
      .def_property_readonly("gamma", &GradedTwist::gamma, py::return_value_policy::reference_internal)
      .def_property_readonly("num_arrows", &GradedTwist::num_arrows)
      .def_property_readonly("num_units", &GradedTwist::num_units)
      .def("degree", [](const GradedTwist& t, ArrowIndex a) { return t.gamma().name(t.degree(a)); })
      .def("sigma", &GradedTwist::sigma);

  m.def("group_groupoid", py::overload_cast<const FiniteGroup&>(&group_groupoid), py::arg("group"));
  m.def("graded_group_groupoid", py::overload_cast<const FiniteGroup&, const FiniteGroup&, const std::vector<GroupElement>&, bool>(&group_groupoid),
        py::arg("group"), py::arg("gamma"), py::arg("c"), py::arg("require_injective") = true);
  m.def("pair_groupoid", &pair_groupoid, py::arg("n"));
  m.def("action_groupoid", &action_groupoid, py::arg("num_points"), py::arg("group"), py::arg("action"),
        py::arg("gamma"), py::arg("c"));
  m.def("regular_action_groupoid", &regular_action_groupoid, py::arg("group"));
  m.def("twisted_group", &twisted_group, py::arg("n1"), py::arg("n2"), py::arg("matrix"));
  m.def("randomize_cocycle", &randomize_cocycle, py::arg("twist"), py::arg("seed"));
  m.def(
      "corpus",
      [](std::size_t perturbations) {
        std::vector<std::pair<std::string, GradedTwist>> out;
        for (auto& nt : full_corpus(perturbations)) out.emplace_back(std::move(nt.name), std::move(nt.twist));
        return out;
      },
      py::arg("perturbations") = 0);

  m.def("validate", [](const GradedTwist& t) { return violations(validate_twist(t)); });
  m.def("is_effective", [](const GradedTwist& t) {
    const auto e = is_effective_zero_fiber(t);
    return py::make_tuple(e.effective, e.witness);
  });

  m.def("convolve", [](const GradedTwist& t, const std::vector<Complex>& f, const std::vector<Complex>& g) {
    return convolve(t, element(t, f), element(t, g)).coeffs();
  });
  m.def("adjoint", [](const GradedTwist& t, const std::vector<Complex>& f) { return adjoint(t, element(t, f)).coeffs(); });
  m.def("reduced_norm", [](const GradedTwist& t, const std::vector<Complex>& f) { return reduced_norm(t, element(t, f)); });
  m.def("expectation",
        [](const GradedTwist& t, const std::vector<Complex>& f) { return delta_expectation(t, element(t, f)).coeffs(); });
  m.def("spectral_component", [](const GradedTwist& t, const std::string& s, const std::vector<Complex>& f) {
    return spectral_component(t, degree_of(t, s), element(t, f)).coeffs();
  });
  m.def("dual_action", [](const GradedTwist& t, const Character& omega, const std::vector<Complex>& f) {
    return dual_action(t, omega, element(t, f)).coeffs();
  });
  m.def("center_dimension", &center_dimension);
  m.def("cartan_check", [](const GradedTwist& t) {
    const auto r = cartan_check(t);
    py::dict checks;
    for (const auto& c : r.checks) checks[py::str(c.name)] = c.passed;
    return py::dict(py::arg("passed") = r.passed(), py::arg("precondition_ok") = r.precondition_ok,
                    py::arg("precondition_witness") = r.precondition_witness, py::arg("checks") = checks);
  });

  m.def("_verify_roundtrip", [](const GradedTwist& t, std::size_t samples, std::uint64_t seed, double norm_tol) {
    RoundtripOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.norm_tol = norm_tol;
    return json_text(certificate_json(t, verify_roundtrip(t, opt), "pass"));
  });
  m.def("reconstruct", [](const GradedTwist& t) { return reconstruct(t).twist; });

  m.def("parse_document", [](const std::string& text) { return parse_document(text).twist; });
  m.def("load_document", [](const std::string& path) { return load_document(path).twist; });
  m.def("dump_document", [](const GradedTwist& t) { return dump_document(t); });
}
