#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "twistlab/cartan.hpp"
#include "twistlab/document.hpp"
#include "twistlab/generators.hpp"
#include "twistlab/reconstruct.hpp"

namespace twistlab::cli {

namespace {

std::string witness_names(const FiniteGroupoid& g, const std::vector<std::size_t>& w) {
  std::string s;
  for (auto a : w) {
    if (!s.empty()) s += ", ";
    s += a < g.num_arrows() ? g.arrow_name(a) : std::string("?");
  }
  return s;
}

std::string complex_text(Complex z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real();
  if (std::abs(z.imag()) > 1e-14) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

void print_report(const GradedTwist& t, const Report& r, std::ostream& out) {
  for (const auto& v : r.violations) {
    out << "FAIL " << v.rule << ": " << v.detail;
    if (!v.witnesses.empty()) out << " [witness: " << witness_names(t.groupoid(), v.witnesses) << "]";
    out << "\n";
  }
}

/// Loads and validates; returns nullopt after printing the reason.
std::optional<GradedTwist> load_valid(const std::string& path, std::ostream& out, std::ostream& err, int& code) {
  try {
    auto doc = load_document(path);
    const auto report = validate_twist(doc.twist);
    if (!report.ok()) {
      print_report(doc.twist, report, out);
      out << "validation failed: " << report.violations.size() << " violation(s)\n";
      code = kValidationFailure;
      return std::nullopt;
    }
    return std::move(doc.twist);
  } catch (const DocumentError& e) {
    err << "parse error: " << path << ": " << e.what() << "\n";
    code = kValidationFailure;
    return std::nullopt;
  }
}

std::vector<GroupElement> parse_map(const FiniteGroup& gamma, const std::string& text) {
  std::vector<GroupElement> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto e = gamma.find(item);
    if (!e) throw std::invalid_argument("--map: unknown element '" + item + "' of gamma");
    out.push_back(*e);
  }
  return out;
}

std::size_t parse_size(const std::string& text, const char* what) {
  std::size_t pos = 0;
  const auto v = std::stoul(text, &pos);
  if (pos != text.size()) throw std::invalid_argument(std::string(what) + ": expected an integer, got '" + text + "'");
  return v;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

}  // namespace

double norm_tolerance() {
  const char* env = std::getenv("TWISTLAB_TOL");
  if (env == nullptr || *env == '\0') return kNormTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0)) throw std::invalid_argument("TWISTLAB_TOL must be a positive number");
  return v;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  TwistDocument doc;
  try {
    doc = load_document(path);
  } catch (const DocumentError& e) {
    err << "parse error: " << path << ": " << e.what() << "\n";
    return kValidationFailure;
  }
  const auto& t = doc.twist;
  const auto report = validate_twist(t);
  out << "groupoid: " << t.num_units() << " units, " << t.num_arrows() << " arrows; gamma of order "
      << t.gamma().size() << "\n";
  print_report(t, report, out);
  if (!report.ok()) {
    out << "validation failed: " << report.violations.size() << " violation(s)\n";
    return kValidationFailure;
  }
  const auto eff = is_effective_zero_fiber(t);
  out << "groupoid axioms: ok\ncocycle identity: ok\ngrading homomorphism: ok\n";
  out << "degree-zero fiber effective: "
      << (eff.effective ? std::string("yes") : "no (isotropy at " + t.groupoid().arrow_name(*eff.witness) + ")") << "\n";
  return kOk;
}

int cmd_algebra(const std::string& path, const AlgebraOptions& opt, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto t = load_valid(path, out, err, code);
  if (!t) return code;
  const auto& g = t->groupoid();
  out << "dimension: " << t->num_arrows() << "\n";
  out << "diagonal dimension: " << t->num_units() << "\n";
  if (opt.center) out << "center dimension: " << center_dimension(*t) << "\n";
  if (opt.structure) {
    for (const auto& s : structure_constants(*t))
      out << "delta_" << g.arrow_name(s.left) << " * delta_" << g.arrow_name(s.right) << " = "
          << complex_text(s.coefficient) << " delta_" << g.arrow_name(s.result) << "\n";
  }
  try {
    for (const auto& spec : opt.norms) {
      const auto f = parse_element(*t, spec);
      out << "norm(" << spec << ") = " << std::setprecision(12) << reduced_norm(*t, f) << "\n";
    }
    if (!opt.components.empty()) {
      const auto f = parse_element(*t, opt.element);
      for (const auto& name : opt.components) {
        const auto s = t->gamma().find(name);
        if (!s) {
          err << "unknown degree '" << name << "'\n";
          return kValidationFailure;
        }
        out << "component " << name << ":";
        const auto phi = spectral_component(*t, *s, f);
        const auto supp = phi.support();
        if (supp.empty()) out << " 0";
        for (auto a : supp) out << " " << g.arrow_name(a) << "=" << complex_text(phi[a]);
        out << "\n";
      }
    }
  } catch (const DocumentError& e) {
    err << e.what() << "\n";
    return kValidationFailure;
  }
  if (opt.cartan) {
    const auto rep = cartan_check(*t);
    if (!rep.precondition_ok) {
      out << "cartan: precondition failed, degree-zero fiber has isotropy at "
          << g.arrow_name(*rep.precondition_witness) << "\n";
      return kPreconditionFailure;
    }
    for (const auto& c : rep.checks) {
      out << "cartan " << c.name << ": " << (c.passed ? "pass" : "FAIL");
      if (!c.passed) out << " (" << c.detail << ")";
      if (!c.witnesses.empty()) out << " [witness: " << witness_names(g, c.witnesses) << "]";
      out << "\n";
    }
    out << "cartan: " << (rep.passed() ? "pass" : "FAIL") << "\n";
    if (!rep.passed()) return kValidationFailure;
  }
  return kOk;
}

int cmd_reconstruct(const std::string& path, const std::string& certificate_path, std::ostream& out,
                    std::ostream& err) {
  RoundtripOptions opt;
  try {
    opt.norm_tol = norm_tolerance();
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kPreconditionFailure;
  }
  int code = kOk;
  const auto t = load_valid(path, out, err, code);
  if (!t) return code;

  auto emit = [&](const RoundtripCertificate& cert, const char* status) {
    if (certificate_path.empty()) return;
    write_output(certificate_path, certificate_json(*t, cert, status).dump(2) + "\n", out);
  };
  try {
    const auto cert = verify_roundtrip(*t, opt);
    const auto& rt = cert.reconstruction;
    const auto& g = t->groupoid();
    const auto& g1 = rt.twist.groupoid();
    out << "reconstructed " << g1.num_arrows() << " germ classes over " << g1.num_units() << " units\n";
    for (ArrowIndex a = 0; a < g.num_arrows(); ++a)
      out << "  " << g.arrow_name(a) << " -> " << g1.arrow_name(rt.upsilon[a]) << "\n";
    out << "cocycle witness: found\n";
    out << "cocycle class: " << (rt.certificate.cocycle_class_trivial ? "trivial" : "non-trivial") << "\n";
    out << std::setprecision(3) << "max errors: homomorphism " << cert.max_homomorphism_error << ", adjoint "
        << cert.max_adjoint_error << ", norm " << cert.max_norm_error << "\n";
    out << "roundtrip: pass\n";
    emit(cert, "pass");
    return kOk;
  } catch (const PreconditionError& e) {
    out << "precondition failed: " << e.what();
    if (!e.witnesses().empty()) out << " [witness: " << witness_names(t->groupoid(), e.witnesses()) << "]";
    out << "\n";
    return kPreconditionFailure;
  } catch (const VerificationError& e) {
    out << "roundtrip: FAIL: " << e.what() << "\n";
    emit(e.certificate(), "fail");
    return kInternalError;
  } catch (const ToleranceError& e) {
    out << "internal assertion: " << e.what() << "\n";
    return kInternalError;
  }
}

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  auto need = [&](std::size_t k) {
    if (opt.args.size() != k)
      throw std::invalid_argument("generate " + opt.kind + ": expected " + std::to_string(k) + " argument(s)");
  };
  try {
    if (opt.kind == "corpus") {
      if (opt.output.empty()) throw std::invalid_argument("generate corpus: -o <directory> is required");
      std::filesystem::create_directories(opt.output);
      std::size_t count = 0;
      for (const auto& nt : full_corpus(opt.perturbations)) {
        std::string file = nt.name;
        for (auto& ch : file)
          if (ch == ':' || ch == '#' || ch == '>' || ch == '/') ch = '_';
        write_output((std::filesystem::path(opt.output) / (file + ".json")).string(),
                     dump_document(nt.twist, Json{{"name", nt.name}}), out);
        ++count;
      }
      out << "wrote " << count << " documents to " << opt.output << "\n";
      return kOk;
    }

    GradedTwist t;
    Json meta{{"generator", opt.kind}, {"args", opt.args}};
    if (opt.kind == "pair") {
      need(1);
      t = pair_groupoid(parse_size(opt.args[0], "n"));
    } else if (opt.kind == "group") {
      need(1);
      const auto group = FiniteGroup::from_preset(opt.args[0]);
      if (opt.gamma) {
        const auto gamma = FiniteGroup::from_preset(*opt.gamma);
        if (!opt.map) throw std::invalid_argument("generate group: --gamma needs --map");
        t = group_groupoid(group, gamma, parse_map(gamma, *opt.map), false);
        meta["gamma"] = *opt.gamma;
        meta["map"] = *opt.map;
      } else {
        t = group_groupoid(group);
      }
    } else if (opt.kind == "action") {
      need(1);
      t = regular_action_groupoid(FiniteGroup::from_preset(opt.args[0]));
    } else if (opt.kind == "twisted") {
      need(2);
      ExponentMatrix m{};
      std::stringstream ss(opt.matrix);
      std::string item;
      for (int k = 0; k < 4; ++k) {
        if (!std::getline(ss, item, ',')) throw std::invalid_argument("--matrix: expected four comma-separated integers");
        m[k / 2][k % 2] = std::stol(item);
      }
      t = twisted_group(parse_size(opt.args[0], "n1"), parse_size(opt.args[1], "n2"), m);
      meta["matrix"] = opt.matrix;
    } else {
      throw std::invalid_argument("generate: unknown kind '" + opt.kind + "' (pair, group, action, twisted, corpus)");
    }
    if (opt.perturb) {
      t = randomize_cocycle(t, *opt.perturb);
      meta["perturb_seed"] = *opt.perturb;
    }
    write_output(opt.output, dump_document(t, meta), out);
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kPreconditionFailure;
  } catch (const std::out_of_range& e) {
    err << "bad number: " << e.what() << "\n";
    return kPreconditionFailure;
  }
}

}  // namespace twistlab::cli
