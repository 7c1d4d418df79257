#include "fdebvp/green.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "fdebvp/format.hpp"

namespace fdebvp {

namespace {

constexpr double kCondLimit = 1e12;

// A boundary row applied to a quadratic p(t) = c0 + c1·t + c2·t² at its
// endpoint x gives the linear functional
//   α·p(x) + β·p'(x) + γ·p''(x) = [α, α·x + β, α·x² + 2β·x + 2γ] · c.
Eigen::RowVector3d row_on_quadratic(const BoundaryRow& row, double a) {
  double x = row.at == Side::left ? 0.0 : a;
  return {row.alpha, row.alpha * x + row.beta,
          row.alpha * x * x + 2.0 * row.beta * x + 2.0 * row.gamma};
}

Eigen::Matrix3d boundary_matrix(const ProblemSpec& spec) {
  Eigen::Matrix3d m;
  for (int r = 0; r < 3; ++r)
    m.row(r) = row_on_quadratic(spec.bc[static_cast<std::size_t>(r)], spec.a);
  return m;
}

// Solve with an explicit conditioning guard so degenerate boundary rows
// surface as SingularGreenSystem instead of garbage coefficients.
template <typename Matrix, typename Rhs>
Rhs guarded_solve(const Matrix& m, const Rhs& rhs, const char* what) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  double smax = sigma(0);
  double smin = sigma(sigma.size() - 1);
  if (!(smin > 0.0) || smax / smin > kCondLimit)
    throw SingularGreenSystem(
        strf("%s: boundary conditions give a numerically singular system "
             "(condition %.3e)",
             what, smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity()));
  return Rhs(svd.solve(rhs));
}

// Coefficient matrix C of the lower piece expressed in the source point:
// G(t,s) = Σ_m Σ_k C(m,k) t^m s^k for t <= s. Columns solve the same 3×3
// boundary system against the s-expansion of the right rows' load
// −[α(a−s)²/2 + β(a−s) + γ]; left rows contribute zero.
Eigen::Matrix3d section_basis(const ProblemSpec& spec) {
  Eigen::Matrix3d m = boundary_matrix(spec);
  Eigen::Matrix3d rhs = Eigen::Matrix3d::Zero();
  for (int r = 0; r < 3; ++r) {
    const BoundaryRow& row = spec.bc[static_cast<std::size_t>(r)];
    if (row.at != Side::right) continue;
    double a = spec.a;
    rhs(r, 0) = -(row.alpha * a * a / 2.0 + row.beta * a + row.gamma);
    rhs(r, 1) = row.alpha * a + row.beta;
    rhs(r, 2) = -row.alpha / 2.0;
  }
  Eigen::Matrix3d c = guarded_solve(m, rhs, "green sections");
  return c;
}

double quad_value(const std::array<double, 3>& c, double x) {
  return c[0] + x * (c[1] + x * c[2]);
}

// ∫ |c0 + c1·x + c2·x²| dx over [x0, x1], exactly: split at the real roots
// inside the interval, where the polynomial has constant sign.
double integrate_abs_quadratic(const std::array<double, 3>& c, double x0, double x1) {
  if (!(x1 > x0)) return 0.0;
  auto anti = [&](double x) { return x * (c[0] + x * (c[1] / 2.0 + x * c[2] / 3.0)); };

  double roots[2];
  int nroots = 0;
  if (c[2] == 0.0) {
    if (c[1] != 0.0) roots[nroots++] = -c[0] / c[1];
  } else {
    double disc = c[1] * c[1] - 4.0 * c[2] * c[0];
    if (disc > 0.0) {
      double sq = std::sqrt(disc);
      // Citardauq-stable form: q never cancels.
      double q = -0.5 * (c[1] + (c[1] >= 0.0 ? sq : -sq));
      if (q != 0.0) {
        roots[nroots++] = q / c[2];
        roots[nroots++] = c[0] / q;
      } else {  // c1 == 0 and disc == -4·c2·c0 > 0
        double r = std::sqrt(-c[0] / c[2]);
        roots[nroots++] = -r;
        roots[nroots++] = r;
      }
    }
    // disc <= 0: no sign change, |∫| == ∫ in one piece.
  }

  double cuts[4] = {x0, x1, x1, x1};
  int ncuts = 1;
  for (int i = 0; i < nroots; ++i)
    if (roots[i] > x0 && roots[i] < x1) cuts[ncuts++] = roots[i];
  cuts[ncuts++] = x1;
  std::sort(cuts, cuts + ncuts);

  double total = 0.0;
  for (int i = 0; i + 1 < ncuts; ++i) total += std::fabs(anti(cuts[i + 1]) - anti(cuts[i]));
  return total;
}

}  // namespace

GreenPieces build_green(const ProblemSpec& spec, double s) {
  using Matrix6 = Eigen::Matrix<double, 6, 6>;
  using Vector6 = Eigen::Matrix<double, 6, 1>;
  // Unknowns: lower coefficients (t <= s) then upper coefficients (t >= s).
  Matrix6 m = Matrix6::Zero();
  Vector6 rhs = Vector6::Zero();
  for (int r = 0; r < 3; ++r) {
    const BoundaryRow& row = spec.bc[static_cast<std::size_t>(r)];
    int base = row.at == Side::left ? 0 : 3;
    m.block<1, 3>(r, base) = row_on_quadratic(row, spec.a);
  }
  // Continuity of value and slope at t = s; second derivative jumps by +1.
  m.row(3) << 1.0, s, s * s, -1.0, -s, -s * s;
  m.row(4) << 0.0, 1.0, 2.0 * s, 0.0, -1.0, -2.0 * s;
  m.row(5) << 0.0, 0.0, -2.0, 0.0, 0.0, 2.0;
  rhs(5) = 1.0;

  Vector6 c = guarded_solve(m, rhs, "green construction");
  GreenPieces pieces;
  pieces.s = s;
  pieces.lower = {c(0), c(1), c(2)};
  pieces.upper = {c(3), c(4), c(5)};
  return pieces;
}

double eval_green(const GreenPieces& pieces, double t) {
  // The pieces agree at t == s; prefer the lower one there.
  return t <= pieces.s ? quad_value(pieces.lower, t) : quad_value(pieces.upper, t);
}

BoundaryPoly build_g(const ProblemSpec& spec) {
  Eigen::Matrix3d m = boundary_matrix(spec);
  Eigen::Vector3d rhs;
  for (int r = 0; r < 3; ++r) rhs(r) = spec.bc[static_cast<std::size_t>(r)].b;
  Eigen::Vector3d c = guarded_solve(m, rhs, "boundary polynomial");
  return BoundaryPoly({c(0), c(1), c(2)});
}

SectionPolys green_sections(const ProblemSpec& spec, double t) {
  Eigen::Matrix3d c = section_basis(spec);
  SectionPolys sections;
  for (int k = 0; k < 3; ++k)
    sections.right[static_cast<std::size_t>(k)] = c(0, k) + t * (c(1, k) + t * c(2, k));
  // Upper piece (s <= t) adds the particular kernel (t−s)²/2.
  sections.left = sections.right;
  sections.left[0] += t * t / 2.0;
  sections.left[1] += -t;
  sections.left[2] += 0.5;
  return sections;
}

GreenTable build_green_table(const ProblemSpec& spec, const Grid& grid,
                             std::span<const double> xi) {
  if (xi.size() != grid.nodes.size())
    throw FdeError("build_green_table: delay points do not match the grid");
  GreenTable table;
  table.grid = grid;
  table.xi.assign(xi.begin(), xi.end());

  const std::size_t m = grid.nodes.size();
  table.columns.reserve(m);
  for (std::size_t j = 0; j < m; ++j) table.columns.push_back(build_green(spec, grid.nodes[j]));

  table.at_nodes.resize(m * m);
  table.at_xi.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    double t = grid.nodes[i];
    double x = table.xi[i];
    for (std::size_t j = 0; j < m; ++j) {
      table.at_nodes[i * m + j] = eval_green(table.columns[j], t);
      table.at_xi[i * m + j] = eval_green(table.columns[j], x);
    }
  }
  return table;
}

double compute_m0(const ProblemSpec& spec, const Grid& grid) {
  Eigen::Matrix3d c = section_basis(spec);
  double best = 0.0;
  for (double t : grid.nodes) {
    SectionPolys sections;
    for (int k = 0; k < 3; ++k)
      sections.right[static_cast<std::size_t>(k)] = c(0, k) + t * (c(1, k) + t * c(2, k));
    sections.left = sections.right;
    sections.left[0] += t * t / 2.0;
    sections.left[1] += -t;
    sections.left[2] += 0.5;

    double total = 0.0;
    for (int j = 0; j < grid.n; ++j) {
      double s0 = grid.nodes[static_cast<std::size_t>(j)];
      double s1 = grid.nodes[static_cast<std::size_t>(j) + 1];
      if (s1 <= t) {
        total += integrate_abs_quadratic(sections.left, s0, s1);
      } else if (s0 >= t) {
        total += integrate_abs_quadratic(sections.right, s0, s1);
      } else {
        total += integrate_abs_quadratic(sections.left, s0, t);
        total += integrate_abs_quadratic(sections.right, t, s1);
      }
    }
    best = std::max(best, total);
  }
  return best;
}

double compute_m0(const GreenTable& table, const ProblemSpec& spec) {
  return compute_m0(spec, table.grid);
}

}  // namespace fdebvp
