#pragma once

#include <array>
#include <span>
#include <vector>

#include "fdebvp/problem.hpp"
#include "fdebvp/quadrature.hpp"

namespace fdebvp {

/**
 * The Green function of  u''' = ψ  with homogeneous boundary rows is, for
 * each fixed source point s, a pair of quadratics in t joined at t = s:
 * value and first derivative continuous, second derivative jumping by +1.
 * Coefficients are ordered (1, t, t²).
 */
struct GreenPieces {
  double s = 0.0;
  std::array<double, 3> lower{};  // valid for t <= s
  std::array<double, 3> upper{};  // valid for t >= s
};

/** The boundary polynomial g(t) = c0 + c1·t + c2·t²: the unique quadratic
    satisfying the three inhomogeneous boundary rows. */
class BoundaryPoly {
public:
  BoundaryPoly() = default;
  explicit BoundaryPoly(const std::array<double, 3>& c) : c_(c) {}
  double operator()(double t) const { return c_[0] + t * (c_[1] + t * c_[2]); }
  const std::array<double, 3>& coeffs() const noexcept { return c_; }

private:
  std::array<double, 3> c_{};
};

/** For fixed t, s ↦ G(t,s) is likewise piecewise quadratic with its single
    breakpoint at s = t. Coefficients ordered (1, s, s²). */
struct SectionPolys {
  std::array<double, 3> left{};   // valid for s <= t
  std::array<double, 3> right{};  // valid for s >= t
};

/** Green values cached on a grid: rows of G(t_i, ·) at the nodes and at the
    delay images ξ_i, as needed by the discrete iteration. */
struct GreenTable {
  Grid grid;
  std::vector<double> xi;               // delay images, size n+1
  std::vector<GreenPieces> columns;     // per source node s_j
  std::vector<double> at_nodes;         // (n+1)², row i holds G(t_i, s_j)
  std::vector<double> at_xi;            // (n+1)², row i holds G(ξ_i, s_j)

  std::span<const double> node_row(int i) const {
    std::size_t w = grid.nodes.size();
    return {at_nodes.data() + static_cast<std::size_t>(i) * w, w};
  }
  std::span<const double> xi_row(int i) const {
    std::size_t w = grid.nodes.size();
    return {at_xi.data() + static_cast<std::size_t>(i) * w, w};
  }
};

/** Construct G(·, s) by solving the 6×6 system of three boundary rows,
    continuity, derivative continuity, and the unit jump. Throws
    SingularGreenSystem when the system's condition exceeds 1e12. */
GreenPieces build_green(const ProblemSpec& spec, double s);

/** Evaluate a constructed column at t (the pieces agree at t = s). */
double eval_green(const GreenPieces& pieces, double t);

/** Solve the 3×3 system for the boundary polynomial g. Throws
    SingularGreenSystem when the boundary rows degenerate on quadratics. */
BoundaryPoly build_g(const ProblemSpec& spec);

/** The two quadratics-in-s forming G(t, ·) for fixed t (exact closed-form
    route used by compute_m0 and available as an oracle). */
SectionPolys green_sections(const ProblemSpec& spec, double t);

/** Fill the cached Green rows for all grid nodes and delay images. */
GreenTable build_green_table(const ProblemSpec& spec, const Grid& grid,
                             std::span<const double> xi);

/**
 * M0 = max_i ∫₀ᵃ |G(t_i, s)| ds, the kernel's operator norm sampled at the
 * grid nodes. Each cell integral is exact: |quadratic| integrated between
 * its real roots. Monotone under nested grid refinement.
 */
double compute_m0(const ProblemSpec& spec, const Grid& grid);

/** Same, using the table's grid (values in the table are not needed — the
    section polynomials are exact). */
double compute_m0(const GreenTable& table, const ProblemSpec& spec);

}  // namespace fdebvp
