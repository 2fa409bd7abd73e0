#include "twistlab/document.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace twistlab {

namespace {

constexpr const char* kFormat = "twistlab-twist/1";

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw DocumentError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(path + "." + key, "missing field");
  return *it;
}

std::string string_field(const Json& obj, const char* key, const std::string& path) {
  const auto& v = field(obj, key, path);
  if (!v.is_string()) throw DocumentError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

double number_or(const Json& obj, const char* key, double fallback, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) throw DocumentError(path + "." + key, "expected a number");
  return it->get<double>();
}

FiniteGroup parse_gamma(const Json& v) {
  if (v.is_string()) {
    try {
      return FiniteGroup::from_preset(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw DocumentError("gamma", e.what());
    }
  }
  if (!v.is_object()) throw DocumentError("gamma", "expected a preset name or {elements, table}");
  const auto& elems = field(v, "elements", "gamma");
  const auto& table = field(v, "table", "gamma");
  if (!elems.is_array() || !table.is_array()) throw DocumentError("gamma", "elements and table must be arrays");
  std::vector<std::string> names;
  std::map<std::string, GroupElement> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!elems[i].is_string()) throw DocumentError("gamma.elements[" + std::to_string(i) + "]", "expected a string");
    names.push_back(elems[i].get<std::string>());
    if (!index.emplace(names.back(), i).second)
      throw DocumentError("gamma.elements[" + std::to_string(i) + "]", "duplicate element '" + names.back() + "'");
  }
  if (table.size() != names.size()) throw DocumentError("gamma.table", "expected one row per element");
  std::vector<std::vector<GroupElement>> rows(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string path = "gamma.table[" + std::to_string(i) + "]";
    if (!table[i].is_array() || table[i].size() != names.size()) throw DocumentError(path, "expected a full row");
    for (std::size_t j = 0; j < names.size(); ++j) {
      const auto& e = table[i][j];
      const auto it = e.is_string() ? index.find(e.get<std::string>()) : index.end();
      if (it == index.end()) throw DocumentError(path + "[" + std::to_string(j) + "]", "unknown element");
      rows[i].push_back(it->second);
    }
  }
  try {
    return FiniteGroup(std::move(names), std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw DocumentError("gamma", e.what());
  }
}

Json gamma_json(const FiniteGroup& g) {
  if (!g.preset().empty()) return g.preset();
  Json table = Json::array();
  for (GroupElement a = 0; a < g.size(); ++a) {
    Json row = Json::array();
    for (GroupElement b = 0; b < g.size(); ++b) row.push_back(g.name(g.mul(a, b)));
    table.push_back(std::move(row));
  }
  return Json{{"elements", g.names()}, {"table", std::move(table)}};
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

TwistDocument parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    std::string msg = e.what();
    if (const auto p = msg.find(": ", msg.find("parse error")); p != std::string::npos) msg = msg.substr(p + 2);
    throw DocumentError(line_column(text, at), msg);
  }
  if (!root.is_object()) throw DocumentError("$", "expected a top-level object");
  if (const auto it = root.find("format"); it != root.end() && (!it->is_string() || *it != kFormat))
    throw DocumentError("format", std::string("expected \"") + kFormat + "\"");

  TwistDocument doc;
  if (const auto it = root.find("metadata"); it != root.end()) {
    if (!it->is_object()) throw DocumentError("metadata", "expected an object");
    doc.metadata = *it;
  }
  const auto gamma = parse_gamma(field(root, "gamma", "$"));

  const auto& units = field(root, "units", "$");
  if (!units.is_array()) throw DocumentError("units", "expected an array");
  std::vector<std::string> unit_names;
  std::vector<std::string> unit_arrow_ids;
  std::map<std::string, UnitIndex> unit_index;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const std::string path = "units[" + std::to_string(i) + "]";
    if (units[i].is_string()) {
      unit_names.push_back(units[i].get<std::string>());
      unit_arrow_ids.push_back(unit_names.back());
    } else if (units[i].is_object()) {
      unit_names.push_back(string_field(units[i], "id", path));
      unit_arrow_ids.push_back(string_field(units[i], "arrow", path));
    } else {
      throw DocumentError(path, "expected a string or {id, arrow}");
    }
    if (!unit_index.emplace(unit_names.back(), i).second)
      throw DocumentError("units[" + std::to_string(i) + "]", "duplicate unit '" + unit_names.back() + "'");
  }

  const auto& arrows = field(root, "arrows", "$");
  if (!arrows.is_array()) throw DocumentError("arrows", "expected an array");
  const std::size_t n = arrows.size();
  std::vector<std::string> names;
  std::map<std::string, ArrowIndex> arrow_index;
  std::vector<UnitIndex> src, rng;
  std::vector<GroupElement> degree;
  for (std::size_t a = 0; a < n; ++a) {
    const std::string path = "arrows[" + std::to_string(a) + "]";
    names.push_back(string_field(arrows[a], "id", path));
    if (!arrow_index.emplace(names.back(), a).second) throw DocumentError(path + ".id", "duplicate arrow id");
    for (const char* key : {"src", "rng"}) {
      const auto u = string_field(arrows[a], key, path);
      const auto it = unit_index.find(u);
      if (it == unit_index.end()) throw DocumentError(path + "." + key, "unknown unit '" + u + "'");
      (key[0] == 's' ? src : rng).push_back(it->second);
    }
    const auto deg = arrows[a].contains("degree") ? string_field(arrows[a], "degree", path) : gamma.name(gamma.identity());
    const auto s = gamma.find(deg);
    if (!s) throw DocumentError(path + ".degree", "unknown element '" + deg + "' of gamma");
    degree.push_back(*s);
  }

  std::vector<ArrowIndex> unit_arrow;
  for (UnitIndex x = 0; x < unit_names.size(); ++x) {
    const auto it = arrow_index.find(unit_arrow_ids[x]);
    if (it == arrow_index.end())
      throw DocumentError("units[" + std::to_string(x) + "]", "no arrow with id '" + unit_arrow_ids[x] + "' for this unit");
    unit_arrow.push_back(it->second);
  }

  const auto& comps = field(root, "compositions", "$");
  if (!comps.is_array()) throw DocumentError("compositions", "expected an array");
  std::vector<ArrowIndex> table(n * n, kNone);
  std::vector<Complex> sigma(n * n, Complex(1.0, 0.0));
  auto lookup = [&](const Json& obj, const char* key, const std::string& path) {
    const auto id = string_field(obj, key, path);
    const auto it = arrow_index.find(id);
    if (it == arrow_index.end()) throw DocumentError(path + "." + key, "unknown arrow '" + id + "'");
    return it->second;
  };
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "compositions[" + std::to_string(i) + "]";
    const auto l = lookup(comps[i], "left", path);
    const auto r = lookup(comps[i], "right", path);
    const auto res = lookup(comps[i], "result", path);
    if (table[l * n + r] != kNone) throw DocumentError(path, "duplicate entry for this pair");
    table[l * n + r] = res;
    sigma[l * n + r] = Complex(number_or(comps[i], "sigma_re", 1.0, path), number_or(comps[i], "sigma_im", 0.0, path));
  }

  std::vector<ArrowIndex> inverse(n, kNone);
  for (ArrowIndex a = 0; a < n; ++a)
    for (ArrowIndex b = 0; b < n; ++b) {
      const auto ab = table[a * n + b];
      const auto ba = table[b * n + a];
      if (ab != kNone && ba != kNone && ab == unit_arrow[rng[a]] && ba == unit_arrow[src[a]]) {
        inverse[a] = b;
        break;
      }
    }

  try {
    FiniteGroupoid g(std::move(unit_names), std::move(names), std::move(src), std::move(rng), std::move(table),
                     std::move(inverse), std::move(unit_arrow));
    doc.twist = GradedTwist(std::move(g), TwoCocycle(n, std::move(sigma)), Grading{gamma, std::move(degree)});
  } catch (const std::invalid_argument& e) {
    throw DocumentError("$", e.what());
  }
  return doc;
}

TwistDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path.string(), "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

Json to_json(const GradedTwist& t, const Json& metadata) {
  const auto& g = t.groupoid();
  Json arrows = Json::array();
  for (ArrowIndex a = 0; a < g.num_arrows(); ++a)
    arrows.push_back({{"id", g.arrow_name(a)},
                      {"src", g.unit_name(g.src(a))},
                      {"rng", g.unit_name(g.rng(a))},
                      {"degree", t.gamma().name(t.degree(a))}});
  Json units = Json::array();
  for (UnitIndex x = 0; x < g.num_units(); ++x) {
    const auto& id = g.arrow_name(g.unit_arrow(x));
    if (id == g.unit_name(x)) units.push_back(id);
    else units.push_back({{"id", g.unit_name(x)}, {"arrow", id}});
  }
  Json comps = Json::array();
  for (ArrowIndex a = 0; a < g.num_arrows(); ++a)
    for (ArrowIndex b = 0; b < g.num_arrows(); ++b) {
      const auto ab = g.compose(a, b);
      if (ab == kNone) continue;
      const Complex s = t.sigma(a, b);
      comps.push_back({{"left", g.arrow_name(a)},
                       {"right", g.arrow_name(b)},
                       {"result", g.arrow_name(ab)},
                       {"sigma_re", s.real()},
                       {"sigma_im", s.imag()}});
    }
  return Json{{"format", kFormat},   {"metadata", metadata},          {"gamma", gamma_json(t.gamma())},
              {"units", std::move(units)}, {"arrows", std::move(arrows)}, {"compositions", std::move(comps)}};
}

std::string dump_document(const GradedTwist& t, const Json& metadata) { return to_json(t, metadata).dump(2) + "\n"; }

Json certificate_json(const GradedTwist& input, const RoundtripCertificate& cert, const std::string& status) {
  const auto& rt = cert.reconstruction;
  const auto& rc = rt.certificate;
  const auto& g = input.groupoid();
  const auto& g1 = rt.twist.groupoid();

  Json upsilon = Json::array();
  for (ArrowIndex a = 0; a < rt.upsilon.size(); ++a)
    upsilon.push_back({{"arrow", g.arrow_name(a)},
                       {"germ", rt.upsilon[a] == kNone ? Json(nullptr) : Json(g1.arrow_name(rt.upsilon[a]))}});
  Json witness = nullptr;
  if (rc.cocycle_witness) {
    witness = Json::array();
    for (ArrowIndex a = 0; a < rc.cocycle_witness->size(); ++a) {
      Json entry{{"arrow", g.arrow_name(a)}};
      entry.update(complex_json((*rc.cocycle_witness)[a]));
      witness.push_back(std::move(entry));
    }
  }
  Json samples = Json::array();
  for (const auto& s : cert.norm_samples) samples.push_back({{"input", s.input_norm}, {"reconstructed", s.reconstructed_norm}});

  return Json{{"format", "twistlab-certificate/1"},
              {"status", status},
              {"groupoid_valid", rc.groupoid_valid},
              {"bijective", rc.bijective},
              {"preserves_structure", rc.preserves_structure},
              {"grading_commutes", rc.grading_commutes},
              {"cocycle_class_trivial", rc.cocycle_class_trivial},
              {"max_phase_deviation", rc.max_phase_deviation},
              {"psi_injective", cert.psi_injective},
              {"max_homomorphism_error", cert.max_homomorphism_error},
              {"max_adjoint_error", cert.max_adjoint_error},
              {"max_linearity_error", cert.max_linearity_error},
              {"max_norm_error", cert.max_norm_error},
              {"failures", rc.failures},
              {"upsilon", std::move(upsilon)},
              {"cocycle_witness", std::move(witness)},
              {"norm_samples", std::move(samples)},
              {"reconstructed", to_json(rt.twist)}};
}

AlgebraElement parse_element(const GradedTwist& t, std::string_view spec) {
  const std::size_t n = t.num_arrows();
  if (spec == "all-ones") return AlgebraElement(std::vector<Complex>(n, Complex(1.0, 0.0)));
  auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw DocumentError("element", "bad number '" + std::string(s) + "'");
    return v;
  };
  AlgebraElement f(n);
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto end = std::min(spec.find(';', pos), spec.size());
    const auto term = spec.substr(pos, end - pos);
    pos = end + 1;
    if (term.empty()) continue;
    const auto eq = term.rfind('=');
    if (eq == std::string_view::npos) throw DocumentError("element", "expected id=value in '" + std::string(term) + "'");
    const auto id = term.substr(0, eq);
    const auto value = term.substr(eq + 1);
    const auto a = t.groupoid().find_arrow(id);
    if (!a) throw DocumentError("element", "unknown arrow id '" + std::string(id) + "'");
    const auto colon = value.find(':');
    const double re = number(value.substr(0, colon));
    const double im = colon == std::string_view::npos ? 0.0 : number(value.substr(colon + 1));
    f[*a] += Complex(re, im);
  }
  return f;
}

}  // namespace twistlab
