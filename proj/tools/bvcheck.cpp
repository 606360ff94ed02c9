// bvcheck: numerical verification runs for bounded-variation norm inequalities
// and derivative bounds.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bvineq/run.hpp"

namespace {

void add_common(CLI::App* sub, bvineq::RunConfig& cfg, std::string& format, std::string& out_path) {
  sub->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  sub->add_option("--count", cfg.count, "Corpus size / search seeds")->capture_default_str();
  sub->add_option("--p", cfg.p_list, "Exponents p >= 1")->delimiter(',')->capture_default_str();
  sub->add_option("--tolerance", cfg.tolerance, "Relative gap tolerance")->capture_default_str();
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", out_path, "Output file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bvcheck - verify reverse norm inequalities for BV functions and Landau-type bounds"};
  app.require_subcommand(1);

  bvineq::RunConfig cfg;
  std::string format = "csv";
  std::string out_path;
  std::string function_file, registry_file;

  auto* verify = app.add_subcommand("verify", "Check the inequalities over a seeded corpus");
  add_common(verify, cfg, format, out_path);
  verify->add_option("--function", function_file, "Verify one function-spec JSON file instead of a corpus");
  verify->add_flag("--ostrowski", cfg.ostrowski, "Add the worst Ostrowski report per function");

  auto* sharpness = app.add_subcommand("sharpness", "Implied-constant searches and extremal ladders");
  add_common(sharpness, cfg, format, out_path);

  auto* landau = app.add_subcommand("landau", "Sweep the analytic registry through the derivative bounds");
  add_common(landau, cfg, format, out_path);
  landau->add_option("--registry", registry_file, "Registry JSON file (default: built-in)");
  landau->add_option("--samples", cfg.samples, "Growth-certificate sample pairs")->capture_default_str();

  auto* minimize = app.add_subcommand("minimize", "Closed-form minimum of C/l^u + D l^r against the grid oracle");
  add_common(minimize, cfg, format, out_path);
  minimize->add_option("C", cfg.C)->required();
  minimize->add_option("D", cfg.D)->required();
  minimize->add_option("r", cfg.r)->required();
  minimize->add_option("u", cfg.u)->required();

  auto* kernel = app.add_subcommand("kernel", "Kernel p-norm closed form against quadrature");
  add_common(kernel, cfg, format, out_path);
  kernel->add_option("--a", cfg.kernel_a)->capture_default_str();
  kernel->add_option("--b", cfg.kernel_b)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bvineq::kExitUsage;
  }

  const std::map<CLI::App*, bvineq::Command> commands{{verify, bvineq::Command::verify},
                                                      {sharpness, bvineq::Command::sharpness},
                                                      {landau, bvineq::Command::landau},
                                                      {minimize, bvineq::Command::minimize},
                                                      {kernel, bvineq::Command::kernel}};
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) cfg.command = command;
  }
  cfg.output_format = format == "json" ? bvineq::OutputFormat::json : bvineq::OutputFormat::csv;
  if (!function_file.empty()) cfg.function_file = function_file;
  if (!registry_file.empty()) cfg.registry_file = registry_file;

  if (out_path.empty()) return bvineq::run(cfg, std::cout, std::cerr);
  cfg.output_path = out_path;
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "usage error: cannot write '" << out_path << "'\n";
    return bvineq::kExitUsage;
  }
  return bvineq::run(cfg, out, std::cerr);
}
