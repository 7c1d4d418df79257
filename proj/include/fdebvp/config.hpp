#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fdebvp/problem.hpp"
#include "fdebvp/solver.hpp"

namespace fdebvp {

/**
 * A problem file: the ProblemSpec plus run parameters. JSON document with
 * keys interval.a, bc (array of 3 rows), f, phi, optional exact, N, optional
 * tol / max_iter / M. Numeric leaves (a, b, tol) accept either a JSON number
 * or a constant expression string such as "pi" or "e".
 */
struct ProblemConfig {
  ProblemSpec spec;
  int n = 100;
  SolveOptions options;
  std::optional<double> m;  // bound M for condition checking
};

/** Parse a config document. Throws ConfigError with the byte offset for
    syntax errors and the offending key for schema errors. */
ProblemConfig parse_config(const std::string& text);

/** Read and parse a config file. */
ProblemConfig load_config(const std::filesystem::path& path);

/** Serialize. parse_config(save_config(c)) reproduces the same ProblemSpec,
    including the original expression texts. */
std::string save_config(const ProblemConfig& config);

}  // namespace fdebvp
