#pragma once

#include <optional>
#include <vector>

#include "fdebvp/problem.hpp"
#include "fdebvp/solver.hpp"

namespace fdebvp {

/**
 * Verification of the unique-solvability hypotheses on the box
 * [0,a] × [−R,R]², R = ‖g‖ + M0·M:
 *   (i)  |f| <= M on the box (observed maximum reported),
 *   (ii) q = (L1 + L2)·M0 < 1, with L1/L2 estimated as the largest central
 *        difference quotients of f in u/v over the sampling lattice.
 */
struct ConditionReport {
  double g_norm = 0.0;          // max |g| on [0,a] (exact for the quadratic)
  double m0 = 0.0;              // kernel norm from compute_m0
  double m = 0.0;               // the bound M being checked
  double f_max_observed = 0.0;  // max |f| over the lattice
  double l1 = 0.0;              // Lipschitz estimate in u
  double l2 = 0.0;              // Lipschitz estimate in v
  double q = 0.0;               // (l1 + l2) · m0
  double bound_estimate = 0.0;  // R
  int samples = 0;              // lattice points per axis
  bool pass = false;            // f_max_observed <= M and q < 1
};

/**
 * Sample the hypotheses on a samples³ lattice (endpoints included) with
 * difference step 1e-6·max(1,R). M0 uses an internal 2000-cell grid.
 * Throws ValidationError for invalid problems; EvalError from f is
 * re-raised with the offending lattice point.
 */
ConditionReport check_conditions(const ProblemSpec& spec, double M,
                                 int samples_per_axis = 64);

/** One grid in a refinement study. */
struct StudyRow {
  int n = 0;
  double h2 = 0.0;        // (a/n)²
  int k = 0;              // iterations to convergence
  bool converged = false;
  double first_residual = 0.0;          // d = ‖Ψ1 − Ψ0‖∞
  std::optional<double> error;          // vs exact, or vs finest grid
  std::optional<double> order;          // log(e_prev/e_this)/log(n_this/n_prev)
  std::optional<double> pk;             // qᵏ/(1−q) when q < 1 supplied
};

struct StudyReport {
  std::vector<StudyRow> rows;  // sorted by n ascending
  std::optional<double> q;
};

/**
 * Solve on each grid (duplicates dropped, ascending). Errors come from the
 * exact solution when the problem has one; otherwise each row is compared
 * against the finest converged grid restricted to its nodes (rows whose n
 * does not divide it, and the finest row itself, get no error). A diverging
 * row is recorded as unconverged, not thrown.
 */
StudyReport convergence_study(const ProblemSpec& spec, std::vector<int> ns,
                              const SolveOptions& options = {},
                              std::optional<double> q = {});

}  // namespace fdebvp
