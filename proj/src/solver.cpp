#include "fdebvp/solver.hpp"

#include <algorithm>
#include <cmath>

#include "fdebvp/format.hpp"

namespace fdebvp {

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

// U = g(t_i) + h Σ ρ_j G(t_i, s_j) Ψ_j and the same through the delay rows.
void apply_images(IterationState& state, const GreenTable& table, const BoundaryPoly& g) {
  const Grid& grid = table.grid;
  const std::size_t m = grid.nodes.size();
  state.u.resize(m);
  state.v.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    int row = static_cast<int>(i);
    state.u[i] = g(grid.nodes[i]) + weighted_sum(grid, table.node_row(row), state.psi);
    state.v[i] = g(table.xi[i]) + weighted_sum(grid, table.xi_row(row), state.psi);
  }
}

}  // namespace

IterationState initialize(const ProblemSpec& spec, const Grid& grid) {
  IterationState state;
  state.psi.resize(grid.nodes.size());
  for (std::size_t i = 0; i < grid.nodes.size(); ++i)
    state.psi[i] = spec.f(grid.nodes[i], 0.0, 0.0);
  return state;
}

void step(IterationState& state, const ProblemSpec& spec, const GreenTable& table,
          const BoundaryPoly& g, const SolveOptions& options) {
  if (state.psi.size() != table.grid.nodes.size())
    throw FdeError("step: state does not match the table's grid");
  if (state.u.empty()) apply_images(state, table, g);

  const Grid& grid = table.grid;
  const std::size_t m = grid.nodes.size();
  std::vector<double> next(m);
  double residual = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    try {
      next[i] = spec.f(grid.nodes[i], state.u[i], state.v[i]);
    } catch (const EvalError&) {
      // Blame the iteration only when the inputs had already blown up;
      // a genuine domain fault of f propagates as-is.
      if (std::fabs(state.u[i]) > options.divergence_threshold ||
          std::fabs(state.v[i]) > options.divergence_threshold)
        throw DivergenceError(
            strf("iterates unbounded at step %d (|u| or |v| beyond %.1e)", state.k + 1,
                 options.divergence_threshold),
            state.k + 1);
      throw;
    }
    residual = std::max(residual, std::fabs(next[i] - state.psi[i]));
  }

  state.psi = std::move(next);
  state.residual = residual;
  state.k += 1;
  apply_images(state, table, g);

  if (!all_finite(state.psi) || !all_finite(state.u) || !all_finite(state.v) ||
      max_abs(state.psi) > options.divergence_threshold ||
      max_abs(state.u) > options.divergence_threshold)
    throw DivergenceError(strf("iteration diverged at step %d (norm beyond %.1e)", state.k,
                               options.divergence_threshold),
                          state.k);
}

SolveReport solve(const ProblemSpec& spec, const Grid& grid, const SolveOptions& options) {
  ensure_valid(spec);
  std::vector<double> xi = delay_points(spec, grid);
  BoundaryPoly g = build_g(spec);
  GreenTable table = build_green_table(spec, grid, xi);

  IterationState state = initialize(spec, grid);
  SolveReport report;
  report.grid = grid;
  report.residual_history.reserve(16);
  for (int it = 0; it < options.max_iter; ++it) {
    step(state, spec, table, g, options);
    report.residual_history.push_back(state.residual);
    if (state.residual <= options.tol) {
      report.converged = true;
      break;
    }
  }
  report.k = state.k;
  report.residual = state.residual;
  report.u = state.u;
  report.psi = state.psi;
  if (spec.exact) {
    double err = 0.0;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i)
      err = std::max(err, std::fabs(report.u[i] - (*spec.exact)(grid.nodes[i])));
    report.error_vs_exact = err;
  }
  return report;
}

}  // namespace fdebvp
