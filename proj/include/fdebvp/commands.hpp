#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fdebvp {

// Exit-code contract shared by all commands:
//   0 success, 1 usage/config error, 2 numerical failure
// (non-convergence, divergence, or failed hypotheses/mismatched references).

/** Solve the problem in `config`. With an output path, writes the solution
    CSV there (t,u[,exact,abs_err], 17 significant digits) plus a JSON report
    next to it (.json). Prints K/residual/error to `out`. */
int cmd_solve(const std::filesystem::path& config,
              const std::optional<std::filesystem::path>& output,
              std::ostream& out, std::ostream& err);

/** Verify the unique-solvability hypotheses. M comes from --M or the config.
    Prints an aligned report plus one JSON line. */
int cmd_check(const std::filesystem::path& config, std::optional<double> m,
              int samples, std::ostream& out, std::ostream& err);

/** Grid-refinement study over the given N values. CSV header
    "N,h2,K,error,order" (6 significant digits); with an output path the CSV
    goes to the file and a JSON report beside it, otherwise to `out`. */
int cmd_study(const std::filesystem::path& config, const std::vector<int>& ns,
              const std::optional<std::filesystem::path>& output,
              std::ostream& out, std::ostream& err);

/** Run the five bundled problems, write their tables, solution curve, and a
    summary comparing iteration counts and errors against the bundled
    reference values. Exit 2 when anything mismatches. */
int cmd_reproduce(const std::filesystem::path& output_dir, std::ostream& out,
                  std::ostream& err);

}  // namespace fdebvp
