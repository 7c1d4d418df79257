#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdebvp/problem.hpp"

namespace fdebvp {

/** A bundled sample problem: the ProblemSpec plus its customary grid size and,
    when meaningful, the bound M used for hypothesis checking. These back the
    `reproduce` command and the shipped configs/ files. */
struct SampleProblem {
  std::string name;
  std::string description;
  ProblemSpec spec;
  int default_n = 100;
  std::optional<double> m;
};

/** All five bundled problems, in reproduction order. */
const std::vector<SampleProblem>& sample_problems();

/** Look one up by name; throws FdeError for unknown names. */
const SampleProblem& sample_problem(std::string_view name);

}  // namespace fdebvp
