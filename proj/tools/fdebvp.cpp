// Command-line front end: solve, check, study, reproduce.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fdebvp/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Solver for third-order boundary value problems with a deviating "
      "argument: u'''(t) = f(t, u(t), u(phi(t))) on [0, a]"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output;
  double m_value = 0.0;
  int samples = 64;
  std::vector<int> grids;
  std::string outdir = "reproduce_out";
  int rc = 0;

  auto* solve_cmd =
      app.add_subcommand("solve", "Solve one problem and report K, residual, and error");
  solve_cmd->add_option("config", config_path, "problem config (JSON)")->required();
  solve_cmd->add_option("-o,--output", output,
                        "write the solution CSV here (JSON report written beside it)");
  solve_cmd->callback([&] {
    rc = fdebvp::cmd_solve(config_path,
                           output.empty() ? std::nullopt
                                          : std::optional<std::filesystem::path>(output),
                           std::cout, std::cerr);
  });

  auto* check_cmd =
      app.add_subcommand("check", "Verify the unique-solvability hypotheses (bound M, q < 1)");
  check_cmd->add_option("config", config_path, "problem config (JSON)")->required();
  auto* m_opt = check_cmd->add_option("--M", m_value, "bound M (overrides the config)");
  check_cmd->add_option("--samples", samples, "lattice points per axis")->default_val(64);
  check_cmd->callback([&] {
    rc = fdebvp::cmd_check(config_path,
                           m_opt->count() ? std::optional<double>(m_value) : std::nullopt,
                           samples, std::cout, std::cerr);
  });

  auto* study_cmd =
      app.add_subcommand("study", "Grid-refinement study: K, error, and observed order per N");
  study_cmd->add_option("config", config_path, "problem config (JSON)")->required();
  study_cmd->add_option("--grids", grids, "comma-separated grid sizes, e.g. 50,100,200")
      ->delimiter(',')
      ->required();
  study_cmd->add_option("-o,--output", output,
                        "write the study CSV here (JSON report written beside it)");
  study_cmd->callback([&] {
    rc = fdebvp::cmd_study(config_path, grids,
                           output.empty() ? std::nullopt
                                          : std::optional<std::filesystem::path>(output),
                           std::cout, std::cerr);
  });

  auto* repro_cmd = app.add_subcommand(
      "reproduce", "Run the bundled problems and compare against their reference tables");
  repro_cmd->add_option("-o,--output", outdir, "output directory")->capture_default_str();
  repro_cmd->callback([&] { rc = fdebvp::cmd_reproduce(outdir, std::cout, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors are exit 1; --help is 0
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return rc;
}
