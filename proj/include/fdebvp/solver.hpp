#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "fdebvp/green.hpp"
#include "fdebvp/problem.hpp"
#include "fdebvp/quadrature.hpp"

namespace fdebvp {

struct SolveOptions {
  double tol = 1e-10;         // stop when ‖Ψ_{k+1} − Ψ_k‖∞ <= tol
  int max_iter = 1000;
  double divergence_threshold = 1e12;  // ‖·‖∞ beyond this raises DivergenceError
};

/**
 * State of the discrete fixed-point iteration. `psi` holds Ψ_k at the nodes;
 * `u` and `v` (once a step has run) hold the affine images
 *   U_k(t_i) = g(t_i) + h Σ_j ρ_j G(t_i, s_j) Ψ_k(s_j)
 *   V_k(t_i) = g(ξ_i) + h Σ_j ρ_j G(ξ_i, s_j) Ψ_k(s_j)
 * of the stored psi — recomputing them from psi reproduces them exactly.
 */
struct IterationState {
  int k = 0;  // number of Ψ-updates performed
  std::vector<double> psi;
  std::vector<double> u;  // empty until the first step
  std::vector<double> v;  // empty until the first step
  double residual = std::numeric_limits<double>::infinity();
};

struct SolveReport {
  int k = 0;
  bool converged = false;
  double residual = std::numeric_limits<double>::infinity();
  std::vector<double> u;    // U_K at the nodes
  std::vector<double> psi;  // Ψ_K at the nodes
  std::vector<double> residual_history;       // residual after each update
  std::optional<double> error_vs_exact;       // ‖U_K − exact‖∞ when available
  Grid grid;
};

/** Ψ_0(t_i) = f(t_i, 0, 0); u/v left empty, k = 0. */
IterationState initialize(const ProblemSpec& spec, const Grid& grid);

/**
 * One update: ensure U/V are present for the current psi, evaluate
 * Ψ_{k+1}(t_i) = f(t_i, U_k(t_i), V_k(t_i)), record the max-norm residual
 * ‖Ψ_{k+1} − Ψ_k‖∞, store the new psi with its images, increment k.
 * Raises DivergenceError when iterates blow past the divergence threshold
 * or f fails to evaluate on unbounded iterates.
 */
void step(IterationState& state, const ProblemSpec& spec,
          const GreenTable& table, const BoundaryPoly& g,
          const SolveOptions& options = {});

/**
 * Run the full discrete iteration: validate, build the Green table, iterate
 * until the residual drops to options.tol or max_iter is hit. Non-convergence
 * within max_iter is reported, not thrown; divergence throws.
 */
SolveReport solve(const ProblemSpec& spec, const Grid& grid,
                  const SolveOptions& options = {});

}  // namespace fdebvp
