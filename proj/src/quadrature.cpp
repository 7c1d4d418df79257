#include "fdebvp/quadrature.hpp"

#include <cmath>

namespace fdebvp {

Grid make_grid(double a, int n) {
  if (!(a > 0.0) || !std::isfinite(a)) throw FdeError("make_grid: interval length must be positive");
  if (n < 1) throw FdeError("make_grid: need at least one cell");
  Grid grid;
  grid.a = a;
  grid.n = n;
  grid.nodes.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    grid.nodes[static_cast<std::size_t>(i)] = a * static_cast<double>(i) / n;
  // i = 0 and i = n land exactly on 0 and a.
  return grid;
}

double weighted_sum(const Grid& grid, std::span<const double> kernel,
                    std::span<const double> values) {
  const std::size_t m = grid.nodes.size();
  if (kernel.size() != m || values.size() != m)
    throw FdeError("weighted_sum: kernel/values size does not match the grid");
  if (m == 1) return 0.0;  // n >= 1 always gives m >= 2; defensive
  double acc = 0.5 * kernel[0] * values[0];
  for (std::size_t j = 1; j + 1 < m; ++j) acc += kernel[j] * values[j];
  acc += 0.5 * kernel[m - 1] * values[m - 1];
  return grid.h() * acc;
}

}  // namespace fdebvp
