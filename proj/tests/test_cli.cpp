#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "twistlab/document.hpp"
#include "twistlab/generators.hpp"

using namespace twistlab;
using namespace twistlab::cli;

namespace {

std::string data(const char* name) { return std::string(TWISTLAB_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class F>
Run run(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const char* name) {
  const auto dir = std::filesystem::temp_directory_path() / "twistlab_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class TolGuard {
 public:
  explicit TolGuard(const char* value) { setenv("TWISTLAB_TOL", value, 1); }
  ~TolGuard() { unsetenv("TWISTLAB_TOL"); }
};

}  // namespace

TEST(CliValidate, AcceptsPairGroupoid) {
  const auto r = run([](auto& o, auto& e) { return cmd_validate(data("pair3.json"), o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("groupoid: 3 units, 9 arrows"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("degree-zero fiber effective: yes"), std::string::npos);
}

TEST(CliValidate, ReportsCocycleViolations) {
  const auto r = run([](auto& o, auto& e) { return cmd_validate(data("broken_cocycle.json"), o, e); });
  EXPECT_EQ(r.code, kValidationFailure);
  EXPECT_NE(r.out.find("FAIL cocycle-identity"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[witness: "), std::string::npos);
}

TEST(CliValidate, MalformedDocumentNamesField) {
  const auto r = run([](auto& o, auto& e) { return cmd_validate(data("malformed.json"), o, e); });
  EXPECT_EQ(r.code, kValidationFailure);
  EXPECT_NE(r.err.find("arrows[0].src"), std::string::npos) << r.err;
}

TEST(CliValidate, MissingFile) {
  const auto r = run([](auto& o, auto& e) { return cmd_validate(data("nope.json"), o, e); });
  EXPECT_EQ(r.code, kValidationFailure);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(CliValidate, ReportsIsotropyInDegreeZero) {
  const auto r = run([](auto& o, auto& e) { return cmd_validate(data("z4_mod2.json"), o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("degree-zero fiber effective: no (isotropy at 2)"), std::string::npos) << r.out;
}

TEST(CliAlgebra, NormsComponentsAndCenter) {
  AlgebraOptions opt;
  opt.norms = {"all-ones", "(0,1)=2"};
  opt.center = true;
  auto r = run([&](auto& o, auto& e) { return cmd_algebra(data("pair3.json"), opt, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("norm(all-ones) = 3\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("norm((0,1)=2) = 2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("center dimension: 1\n"), std::string::npos);

  AlgebraOptions comp;
  comp.components = {"0", "1"};
  r = run([&](auto& o, auto& e) { return cmd_algebra(data("z4_mod2.json"), comp, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("component 0: 0=1 2=1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("component 1: 1=1 3=1\n"), std::string::npos) << r.out;
}

TEST(CliAlgebra, StructureConstantsShowSigns) {
  AlgebraOptions opt;
  opt.structure = true;
  const auto r = run([&](auto& o, auto& e) { return cmd_algebra(data("z2xz2_twisted.json"), opt, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("delta_(0,1) * delta_(1,0) = -1 delta_(1,1)\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("delta_(1,0) * delta_(0,1) = 1 delta_(1,1)\n"), std::string::npos) << r.out;
}

TEST(CliAlgebra, CartanOutcomes) {
  AlgebraOptions opt;
  opt.cartan = true;
  auto r = run([&](auto& o, auto& e) { return cmd_algebra(data("z2xz2_twisted.json"), opt, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("cartan: pass"), std::string::npos);
  r = run([&](auto& o, auto& e) { return cmd_algebra(data("z4_mod2.json"), opt, o, e); });
  EXPECT_EQ(r.code, kPreconditionFailure);
  EXPECT_NE(r.out.find("precondition failed"), std::string::npos) << r.out;
}

TEST(CliAlgebra, BadElementAndDegree) {
  AlgebraOptions opt;
  opt.norms = {"zz=1"};
  auto r = run([&](auto& o, auto& e) { return cmd_algebra(data("pair3.json"), opt, o, e); });
  EXPECT_EQ(r.code, kValidationFailure);
  AlgebraOptions comp;
  comp.components = {"7"};
  r = run([&](auto& o, auto& e) { return cmd_algebra(data("z3.json"), comp, o, e); });
  EXPECT_EQ(r.code, kValidationFailure);
}

TEST(CliReconstruct, WritesCertificate) {
  const auto path = scratch("z3_cert.json");
  auto r = run([&](auto& o, auto& e) { return cmd_reconstruct(data("z3.json"), path.string(), o, e); });
  ASSERT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("roundtrip: pass"), std::string::npos);
  EXPECT_NE(r.out.find("cocycle class: trivial"), std::string::npos);
  const auto first = slurp(path);
  const auto j = Json::parse(first);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["upsilon"].size(), 3u);
  r = run([&](auto& o, auto& e) { return cmd_reconstruct(data("z3.json"), path.string(), o, e); });
  EXPECT_EQ(slurp(path), first);
}

TEST(CliReconstruct, TwistedClassIsNontrivial) {
  const auto r = run([](auto& o, auto& e) { return cmd_reconstruct(data("z2xz2_twisted.json"), "", o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("cocycle class: non-trivial"), std::string::npos) << r.out;
}

TEST(CliReconstruct, PreconditionFailures) {
  for (const char* f : {"z4_mod2.json", "z2_trivial_grading.json"}) {
    const auto r = run([&](auto& o, auto& e) { return cmd_reconstruct(data(f), "", o, e); });
    EXPECT_EQ(r.code, kPreconditionFailure) << f << "\n" << r.out;
    EXPECT_NE(r.out.find("[witness: "), std::string::npos) << f;
  }
}

TEST(CliReconstruct, ValidationFailure) {
  const auto r = run([](auto& o, auto& e) { return cmd_reconstruct(data("broken_cocycle.json"), "", o, e); });
  EXPECT_EQ(r.code, kValidationFailure);
}

TEST(CliReconstruct, ToleranceFromEnvironment) {
  {
    TolGuard g("1e-6");
    EXPECT_DOUBLE_EQ(norm_tolerance(), 1e-6);
    const auto r = run([](auto& o, auto& e) { return cmd_reconstruct(data("z3.json"), "", o, e); });
    EXPECT_EQ(r.code, kOk);
  }
  {
    TolGuard g("abc");
    EXPECT_THROW(norm_tolerance(), std::invalid_argument);
    const auto r = run([](auto& o, auto& e) { return cmd_reconstruct(data("z3.json"), "", o, e); });
    EXPECT_EQ(r.code, kPreconditionFailure);
  }
  {
    TolGuard g("-1");
    EXPECT_THROW(norm_tolerance(), std::invalid_argument);
  }
  EXPECT_DOUBLE_EQ(norm_tolerance(), kNormTol);
}

TEST(CliGenerate, DocumentsParseBack) {
  GenerateOptions opt;
  opt.kind = "twisted";
  opt.args = {"2", "2"};
  auto r = run([&](auto& o, auto& e) { return cmd_generate(opt, o, e); });
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = parse_document(r.out);
  EXPECT_EQ(doc.twist.num_arrows(), 4u);
  EXPECT_EQ(doc.metadata["generator"], "twisted");
  EXPECT_EQ(center_dimension(doc.twist), 1u);

  opt.perturb = 7;
  const auto a = run([&](auto& o, auto& e) { return cmd_generate(opt, o, e); });
  const auto b = run([&](auto& o, auto& e) { return cmd_generate(opt, o, e); });
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, r.out);

  GenerateOptions grp;
  grp.kind = "group";
  grp.args = {"Z4"};
  grp.gamma = "Z2";
  grp.map = "0,1,0,1";
  r = run([&](auto& o, auto& e) { return cmd_generate(grp, o, e); });
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_FALSE(is_effective_zero_fiber(parse_document(r.out).twist).effective);
}

TEST(CliGenerate, UsageErrors) {
  GenerateOptions opt;
  opt.kind = "blob";
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_generate(opt, o, e); }).code, kPreconditionFailure);
  opt.kind = "pair";
  opt.args = {"x"};
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_generate(opt, o, e); }).code, kPreconditionFailure);
  opt.args = {"2", "3"};
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_generate(opt, o, e); }).code, kPreconditionFailure);
  opt.kind = "twisted";
  opt.matrix = "1,0,0,0";
  opt.args = {"2", "3"};
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_generate(opt, o, e); }).code, kPreconditionFailure);
  opt.kind = "corpus";
  opt.args.clear();
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_generate(opt, o, e); }).code, kPreconditionFailure);
}

TEST(CliGenerate, Corpus) {
  const auto dir = scratch("corpus");
  std::filesystem::remove_all(dir);
  GenerateOptions opt;
  opt.kind = "corpus";
  opt.output = dir.string();
  opt.perturbations = 1;
  const auto r = run([&](auto& o, auto& e) { return cmd_generate(opt, o, e); });
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto n = full_corpus(1).size();
  EXPECT_NE(r.out.find("wrote " + std::to_string(n) + " documents"), std::string::npos);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    EXPECT_TRUE(validate_twist(load_document(entry.path()).twist).ok()) << entry.path();
  }
  EXPECT_EQ(files, n);
  EXPECT_TRUE(std::filesystem::exists(dir / "group_Z2-_Z4.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "pair_3_1.json"));
}
