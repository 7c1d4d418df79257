#include "fdebvp/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "fdebvp/format.hpp"
#include "fdebvp/green.hpp"

namespace fdebvp {

namespace {

// Grid used for M0 inside the condition check; fine enough that the sampled
// kernel norm sits within ~h² of the continuum value.
constexpr int kM0Cells = 2000;

// Exact max of |quadratic| over [0, a]: endpoints plus the interior vertex.
double quad_max_abs(const std::array<double, 3>& c, double a) {
  double best = std::max(std::fabs(c[0]), std::fabs(c[0] + a * (c[1] + a * c[2])));
  if (c[2] != 0.0) {
    double vertex = -c[1] / (2.0 * c[2]);
    if (vertex > 0.0 && vertex < a) {
      double val = c[0] + vertex * (c[1] + vertex * c[2]);
      best = std::max(best, std::fabs(val));
    }
  }
  return best;
}

}  // namespace

ConditionReport check_conditions(const ProblemSpec& spec, double M, int samples_per_axis) {
  if (samples_per_axis < 2) throw FdeError("check_conditions: need at least 2 samples per axis");
  ensure_valid(spec);

  ConditionReport report;
  report.m = M;
  report.samples = samples_per_axis;
  report.g_norm = quad_max_abs(build_g(spec).coeffs(), spec.a);
  report.m0 = compute_m0(spec, make_grid(spec.a, kM0Cells));
  report.bound_estimate = report.g_norm + report.m0 * M;

  const double r = report.bound_estimate;
  const double delta = 1e-6 * std::max(1.0, r);
  const int s = samples_per_axis;
  auto coord = [&](int idx, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(idx) / (s - 1);
  };

  double t = 0.0, u = 0.0, v = 0.0;
  try {
    for (int i = 0; i < s; ++i) {
      t = coord(i, 0.0, spec.a);
      for (int j = 0; j < s; ++j) {
        u = coord(j, -r, r);
        for (int k = 0; k < s; ++k) {
          v = coord(k, -r, r);
          report.f_max_observed = std::max(report.f_max_observed, std::fabs(spec.f(t, u, v)));
          double du = std::fabs(spec.f(t, u + delta, v) - spec.f(t, u - delta, v)) / (2.0 * delta);
          double dv = std::fabs(spec.f(t, u, v + delta) - spec.f(t, u, v - delta)) / (2.0 * delta);
          report.l1 = std::max(report.l1, du);
          report.l2 = std::max(report.l2, dv);
        }
      }
    }
  } catch (const EvalError& e) {
    throw EvalError(strf("condition sampling failed at t=%.6g, u=%.6g, v=%.6g: %s", t, u, v,
                         e.what()));
  }

  report.q = (report.l1 + report.l2) * report.m0;
  report.pass = report.f_max_observed <= M && report.q < 1.0;
  return report;
}

StudyReport convergence_study(const ProblemSpec& spec, std::vector<int> ns,
                              const SolveOptions& options, std::optional<double> q) {
  ensure_valid(spec);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  if (ns.empty()) throw FdeError("convergence_study: no grid sizes given");
  for (int n : ns)
    if (n < 1) throw FdeError("convergence_study: grid sizes must be positive");

  StudyReport study;
  study.q = q;
  std::vector<std::vector<double>> solutions(ns.size());

  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    StudyRow row;
    row.n = ns[idx];
    double h = spec.a / row.n;
    row.h2 = h * h;
    try {
      SolveReport rep = solve(spec, make_grid(spec.a, row.n), options);
      row.k = rep.k;
      row.converged = rep.converged;
      row.first_residual = rep.residual_history.empty() ? 0.0 : rep.residual_history.front();
      if (rep.converged) {
        if (rep.error_vs_exact)
          row.error = rep.error_vs_exact;
        else
          solutions[idx] = std::move(rep.u);
      }
    } catch (const DivergenceError&) {
      row.converged = false;
    } catch (const EvalError&) {
      row.converged = false;
    }
    if (q && *q < 1.0) row.pk = std::pow(*q, row.k) / (1.0 - *q);
    study.rows.push_back(row);
  }

  // No exact solution: compare each solvable grid against the finest
  // converged one, restricted to shared nodes (possible when n divides it).
  if (!spec.exact) {
    int finest = -1;
    for (int idx = static_cast<int>(ns.size()) - 1; idx >= 0; --idx)
      if (!solutions[static_cast<std::size_t>(idx)].empty()) {
        finest = idx;
        break;
      }
    if (finest >= 0) {
      const std::vector<double>& ref = solutions[static_cast<std::size_t>(finest)];
      int nref = ns[static_cast<std::size_t>(finest)];
      for (std::size_t idx = 0; idx < ns.size(); ++idx) {
        if (static_cast<int>(idx) == finest) continue;
        const std::vector<double>& u = solutions[idx];
        if (u.empty() || nref % ns[idx] != 0) continue;
        int stride = nref / ns[idx];
        double err = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i)
          err = std::max(err, std::fabs(u[i] - ref[i * static_cast<std::size_t>(stride)]));
        study.rows[idx].error = err;
      }
    }
  }

  for (std::size_t idx = 1; idx < study.rows.size(); ++idx) {
    const StudyRow& prev = study.rows[idx - 1];
    StudyRow& cur = study.rows[idx];
    if (prev.error && cur.error && *prev.error > 0.0 && *cur.error > 0.0)
      cur.order = std::log(*prev.error / *cur.error) /
                  std::log(static_cast<double>(cur.n) / prev.n);
  }
  return study;
}

}  // namespace fdebvp
