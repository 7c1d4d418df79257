#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fdebvp/expr.hpp"
#include "fdebvp/quadrature.hpp"

namespace fdebvp {

enum class Side { left, right };

/** One boundary condition row  α·u(x) + β·u′(x) + γ·u″(x) = b  applied at
    x = 0 (left) or x = a (right). (α,β,γ) must not all vanish. */
struct BoundaryRow {
  Side at = Side::left;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double b = 0.0;
};

/**
 * The boundary value problem
 *
 *   u'''(t) = f(t, u(t), u(φ(t))),   t ∈ [0, a],
 *
 * with three boundary rows split across the endpoints (two left + one right,
 * or one left + two right). φ must map [0, a] into itself. `exact`, when
 * present, is used only to report errors of computed solutions.
 */
struct ProblemSpec {
  double a = 1.0;
  std::array<BoundaryRow, 3> bc{};
  Expr f;                     // f(t, u, v), v = u(φ(t))
  Expr phi;                   // φ(t)
  std::optional<Expr> exact;  // reference solution u(t)
};

/** Result of validate(): structural checks plus the sampled range of φ. */
struct ValidationReport {
  int rank = 0;        // rank of the 3×6 boundary-functional matrix
  int left_rows = 0;
  int right_rows = 0;
  double phi_min = 0.0;
  double phi_max = 0.0;
  double phi_argmin = 0.0;
  double phi_argmax = 0.0;
  std::vector<std::string> issues;  // human-readable; empty iff pass
  bool pass = false;
};

/**
 * Check that the problem is well-posed enough to attempt: a > 0, no zero
 * boundary row, a 2+1 or 1+2 endpoint split, rank 3 of the boundary
 * functionals (singular values above 1e-10·‖B‖), and φ([0,a]) ⊆ [0,a] up to
 * 1e-12·a slack, sampled at 10001 equispaced points. Never throws for bad
 * problems; everything lands in `issues`.
 */
ValidationReport validate(const ProblemSpec& spec);

/** Throw ValidationError (joining the report's issues) unless validate passes. */
void ensure_valid(const ProblemSpec& spec);

/**
 * ξ_i = φ(t_i) for every grid node, clamped into [0, a] when within
 * 1e-12·a of an endpoint. Throws DelayOutOfRange beyond that slack.
 * Evaluation failures of φ propagate as EvalError.
 */
std::vector<double> delay_points(const ProblemSpec& spec, const Grid& grid);

}  // namespace fdebvp
