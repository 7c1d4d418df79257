#include "fdebvp/problem.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "fdebvp/format.hpp"

namespace fdebvp {

namespace {

constexpr int kPhiSamples = 10001;

// Relative slack for φ leaving [0, a]: round-off of a user-supplied map
// (e.g. t/2 at t = a) must not be treated as an escape.
constexpr double kRangeSlack = 1e-12;

}  // namespace

ValidationReport validate(const ProblemSpec& spec) {
  ValidationReport report;

  if (!(spec.a > 0.0) || !std::isfinite(spec.a))
    report.issues.push_back("interval length a must be positive and finite");

  for (std::size_t r = 0; r < spec.bc.size(); ++r) {
    const BoundaryRow& row = spec.bc[r];
    if (row.alpha == 0.0 && row.beta == 0.0 && row.gamma == 0.0)
      report.issues.push_back(strf("boundary row %zu has all of alpha, beta, gamma zero", r));
    (row.at == Side::left ? report.left_rows : report.right_rows) += 1;
  }
  if (!((report.left_rows == 2 && report.right_rows == 1) ||
        (report.left_rows == 1 && report.right_rows == 2)))
    report.issues.push_back(
        strf("boundary rows must split 2+1 or 1+2 across the endpoints (got %d left, %d right)",
             report.left_rows, report.right_rows));

  // Rank of the boundary functionals as a 3×6 matrix over
  // (u(0), u'(0), u''(0), u(a), u'(a), u''(a)).
  Eigen::Matrix<double, 3, 6> b = Eigen::Matrix<double, 3, 6>::Zero();
  for (int r = 0; r < 3; ++r) {
    const BoundaryRow& row = spec.bc[static_cast<std::size_t>(r)];
    int base = row.at == Side::left ? 0 : 3;
    b(r, base + 0) = row.alpha;
    b(r, base + 1) = row.beta;
    b(r, base + 2) = row.gamma;
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 6>> svd(b);
  const auto& sigma = svd.singularValues();
  double threshold = 1e-10 * sigma(0);
  report.rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) > threshold) ++report.rank;
  if (report.rank < 3)
    report.issues.push_back(
        strf("boundary rows are linearly dependent (rank %d of 3)", report.rank));

  // Sampled range of the delay map.
  if (spec.a > 0.0 && std::isfinite(spec.a)) {
    bool phi_ok = true;
    for (int j = 0; j < kPhiSamples; ++j) {
      double t = spec.a * static_cast<double>(j) / (kPhiSamples - 1);
      double x;
      try {
        x = spec.phi(t);
      } catch (const EvalError& e) {
        report.issues.push_back(strf("delay map failed to evaluate at t=%.17g: %s", t, e.what()));
        phi_ok = false;
        break;
      }
      if (j == 0 || x < report.phi_min) {
        report.phi_min = x;
        report.phi_argmin = t;
      }
      if (j == 0 || x > report.phi_max) {
        report.phi_max = x;
        report.phi_argmax = t;
      }
    }
    if (phi_ok) {
      double slack = kRangeSlack * spec.a;
      if (report.phi_min < -slack)
        report.issues.push_back(strf("delay map leaves [0,a]: phi(%.17g) = %.17g < 0",
                                     report.phi_argmin, report.phi_min));
      if (report.phi_max > spec.a + slack)
        report.issues.push_back(strf("delay map leaves [0,a]: phi(%.17g) = %.17g > a",
                                     report.phi_argmax, report.phi_max));
    }
  }

  report.pass = report.issues.empty();
  return report;
}

void ensure_valid(const ProblemSpec& spec) {
  ValidationReport report = validate(spec);
  if (report.pass) return;
  std::ostringstream msg;
  msg << "invalid problem:";
  for (const std::string& issue : report.issues) msg << " " << issue << ';';
  throw ValidationError(msg.str());
}

std::vector<double> delay_points(const ProblemSpec& spec, const Grid& grid) {
  std::vector<double> xi(grid.nodes.size());
  double slack = kRangeSlack * spec.a;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    double x = spec.phi(grid.nodes[i]);
    if (x < 0.0) {
      if (x < -slack)
        throw DelayOutOfRange(
            strf("phi(%.17g) = %.17g lies outside [0, %.17g]", grid.nodes[i], x, spec.a));
      x = 0.0;
    } else if (x > spec.a) {
      if (x > spec.a + slack)
        throw DelayOutOfRange(
            strf("phi(%.17g) = %.17g lies outside [0, %.17g]", grid.nodes[i], x, spec.a));
      x = spec.a;
    }
    xi[i] = x;
  }
  return xi;
}

}  // namespace fdebvp
