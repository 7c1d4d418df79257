#pragma once

#include <span>
#include <vector>

#include "fdebvp/errors.hpp"

namespace fdebvp {

/** Uniform grid t_i = i·a/n, i = 0..n, on [0, a]. */
struct Grid {
  double a = 1.0;
  int n = 1;
  std::vector<double> nodes;  // size n+1, endpoints exact

  double h() const { return a / n; }
};

/** Build the uniform grid with n cells on [0, a]. Throws FdeError for
    a <= 0 or n < 1. */
Grid make_grid(double a, int n);

/**
 * Composite trapezoid sum  h · Σ_j ρ_j kernel[j]·values[j]  with endpoint
 * weights ρ_0 = ρ_n = 1/2 and ρ_j = 1 otherwise. Summation runs in ascending
 * j so results are bit-reproducible. Exact whenever kernel·values is
 * piecewise linear between nodes; O(h²) for smooth and for piecewise-smooth
 * integrands with breakpoints on the grid.
 */
double weighted_sum(const Grid& grid, std::span<const double> kernel,
                    std::span<const double> values);

}  // namespace fdebvp
