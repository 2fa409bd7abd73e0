#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "twistlab/types.hpp"

int main(int argc, char** argv) {
  using namespace twistlab::cli;
  CLI::App app{"Twisted groupoid algebras: validation, Cartan checks and Weyl reconstruction"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check groupoid, cocycle and grading axioms");
  validate->add_option("document", path, "Twist document")->required();

  AlgebraOptions algebra_opt;
  auto* algebra = app.add_subcommand("algebra", "Inspect the twisted convolution algebra");
  algebra->add_option("document", path, "Twist document")->required();
  algebra->add_option("--norm", algebra_opt.norms, "Reduced norm of an element: all-ones or id=re[:im];...");
  algebra->add_option("--component", algebra_opt.components, "Spectral component of --element in this degree");
  algebra->add_option("--element", algebra_opt.element, "Element for --component")->capture_default_str();
  algebra->add_flag("--cartan", algebra_opt.cartan, "Verify the Gamma-Cartan axioms");
  algebra->add_flag("--structure", algebra_opt.structure, "Print structure constants");
  algebra->add_flag("--center", algebra_opt.center, "Print the center dimension");

  std::string certificate;
  auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild the twist from the algebra and certify it");
  reconstruct->add_option("document", path, "Twist document")->required();
  reconstruct->add_option("--certificate", certificate, "Write the JSON certificate here");

  GenerateOptions gen;
  std::uint64_t seed = 0;
  auto* generate = app.add_subcommand("generate", "Emit example documents");
  generate->add_option("kind", gen.kind, "pair | group | action | twisted | corpus")->required();
  generate->add_option("args", gen.args, "pair N | group PRESET | action PRESET | twisted N1 N2");
  generate->add_option("--gamma", gen.gamma, "Grading group preset (group only)");
  generate->add_option("--map", gen.map, "Comma-separated degrees of the group elements (with --gamma)");
  generate->add_option("--matrix", gen.matrix, "Exponent matrix m00,m01,m10,m11 (twisted)")->capture_default_str();
  auto* perturb = generate->add_option("--perturb", seed, "Multiply the cocycle by a seeded random coboundary");
  generate->add_option("--perturbations", gen.perturbations, "Perturbed copies per instance (corpus)");
  generate->add_option("-o,--output", gen.output, "Output file, or directory for corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kPreconditionFailure;
  }

  try {
    if (*validate) return cmd_validate(path, std::cout, std::cerr);
    if (*algebra) return cmd_algebra(path, algebra_opt, std::cout, std::cerr);
    if (*reconstruct) return cmd_reconstruct(path, certificate, std::cout, std::cerr);
    if (perturb->count() > 0) gen.perturb = seed;
    return cmd_generate(gen, std::cout, std::cerr);
  } catch (const twistlab::ToleranceError& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  }
}
