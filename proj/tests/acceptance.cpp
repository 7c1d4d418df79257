// Acceptance harness: nine end-to-end criteria, each printed as one PASS/FAIL
// line with its evidence. Run all by default, or a single one with
// --criterion <1..9>. Exits nonzero when any executed criterion fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fdebvp/analysis.hpp"
#include "fdebvp/format.hpp"
#include "fdebvp/green.hpp"
#include "fdebvp/samples.hpp"
#include "fdebvp/solver.hpp"

using namespace fdebvp;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string join(const std::vector<std::string>& parts) {
  std::string text;
  for (const std::string& part : parts) {
    if (!text.empty()) text += "; ";
    text += part;
  }
  return text;
}

const ProblemSpec& spec_of(const char* name) { return sample_problem(name).spec; }

// ---- closed-form oracles (derived independently of src/green.cpp) ----

// Rows u(0)=0, u'(0)=0, u'(1)=0 (the exponential-solution problem).
double g1_closed(double t, double s) {
  return s <= t ? 0.5 * s * (t * t - 2.0 * t + s) : 0.5 * t * t * (s - 1.0);
}

// Rows u(0)=0, u'(0)=0, u(pi)=0 (the trigonometric-solution problem).
double g3_closed(double t, double s) {
  const double pi = std::numbers::pi;
  double base = -t * t * (pi - s) * (pi - s) / (2.0 * pi * pi);
  return s <= t ? base + 0.5 * (t - s) * (t - s) : base;
}

// ∫₀¹ g1(t,s)·eˢ ds via the antiderivative ∫(as²+bs+c)eˢ = eˢ(as²+(b−2a)s+(c−b+2a)).
double g1_exp_integral(double t) {
  auto anti = [](double a, double b, double c, double s) {
    return std::exp(s) * (a * s * s + (b - 2 * a) * s + (c - b + 2 * a));
  };
  double lower = anti(0.5, 0.5 * (t * t - 2 * t), 0.0, t) -
                 anti(0.5, 0.5 * (t * t - 2 * t), 0.0, 0.0);
  double upper = anti(0.0, 0.5 * t * t, -0.5 * t * t, 1.0) -
                 anti(0.0, 0.5 * t * t, -0.5 * t * t, t);
  return lower + upper;
}

// ---------------------------------------------------------------------

// 1. Exponential-solution problem: K = 3 at every grid, errors within a
//    factor of 2 of the bundled reference table, observed order in [1.8,2.2].
Outcome criterion1() {
  Outcome out;
  const std::vector<std::pair<int, double>> refs = {{50, 6.1899e-05},
                                                    {100, 1.5475e-05},
                                                    {200, 3.8688e-06},
                                                    {400, 9.6721e-07},
                                                    {1000, 1.5475e-07}};
  std::vector<double> errors;
  for (const auto& [n, ref] : refs) {
    SolveReport rep = solve(spec_of("example1"), make_grid(1.0, n));
    if (!rep.converged) {
      out.fail(strf("no convergence at N=%d", n));
      errors.push_back(0.0);
      continue;
    }
    if (rep.k != 3) out.fail(strf("K=%d at N=%d (expected 3)", rep.k, n));
    double err = *rep.error_vs_exact;
    errors.push_back(err);
    double factor = err / ref;
    if (factor > 2.0 || factor < 0.5)
      out.fail(strf("error %.4e at N=%d off reference %.4e (factor %.2f)", err, n, ref, factor));
  }
  if (out.pass) out.note("K=3 and errors within factor 2 of the reference at all 5 grids");
  for (size_t i = 0; i + 1 < refs.size(); ++i) {
    if (refs[i + 1].first != 2 * refs[i].first) continue;
    if (errors[i] <= 0.0 || errors[i + 1] <= 0.0) continue;
    double order = std::log2(errors[i] / errors[i + 1]);
    if (order < 1.8 || order > 2.2)
      out.fail(strf("order %.3f between N=%d and N=%d outside [1.8,2.2]", order, refs[i].first,
                    refs[i + 1].first));
    else
      out.note(strf("order(%d->%d)=%.3f", refs[i].first, refs[i + 1].first, order));
  }
  return out;
}

// 2. Trigonometric-solution problem on [0,π]: K = 25 at every listed grid,
//    N=100 error near 3.6142e-05, order in [1.8,2.2].
Outcome criterion2() {
  Outcome out;
  const int ns[] = {50, 100, 150, 200, 300, 400, 500, 800, 1000};
  std::vector<double> errors;
  const ProblemSpec& spec = spec_of("example3");
  bool all_k = true;
  for (int n : ns) {
    SolveReport rep = solve(spec, make_grid(spec.a, n));
    if (!rep.converged || rep.k != 25) {
      out.fail(strf("K=%d at N=%d (expected 25)", rep.k, n));
      all_k = false;
    }
    errors.push_back(rep.error_vs_exact.value_or(0.0));
    if (n == 100) {
      double factor = errors.back() / 3.6142e-05;
      if (factor > 2.0 || factor < 0.5)
        out.fail(strf("N=100 error %.4e off reference 3.6142e-05", errors.back()));
      else
        out.note(strf("N=100 error %.4e within factor %.2f of reference", errors.back(), factor));
    }
  }
  if (all_k) out.note("K=25 at all 9 grids");
  bool orders_ok = true;
  for (size_t i = 0; i < std::size(ns); ++i) {
    for (size_t j = i + 1; j < std::size(ns); ++j) {
      if (ns[j] != 2 * ns[i]) continue;
      double order = std::log2(errors[i] / errors[j]);
      if (order < 1.8 || order > 2.2) {
        out.fail(strf("order %.3f between N=%d and N=%d outside [1.8,2.2]", order, ns[i], ns[j]));
        orders_ok = false;
      }
    }
  }
  if (orders_ok) out.note("all grid-halving orders in [1.8,2.2]");
  return out;
}

// 3. Grid-independent iteration count plus boundary data of the emitted curve.
Outcome criterion3() {
  Outcome out;
  const ProblemSpec& spec = spec_of("example2");
  bool all_k = true;
  SolveReport fine;
  for (int n : {50, 100, 500, 1000}) {
    SolveReport rep = solve(spec, make_grid(spec.a, n));
    if (!rep.converged || rep.k != 8) {
      out.fail(strf("K=%d at N=%d (expected 8)", rep.k, n));
      all_k = false;
    }
    if (n == 1000) fine = std::move(rep);
  }
  if (all_k) out.note("K=8 at N=50,100,500,1000");

  const double h = fine.grid.h();
  const double tol = 10.0 * h * h;
  const std::vector<double>& u = fine.u;
  if (u.size() < 3) {
    out.fail("solution curve missing");
    return out;
  }
  if (std::abs(u.front()) > 1e-13)
    out.fail(strf("u(0) = %.3e, not 0 at roundoff level", u.front()));
  else
    out.note(strf("u(0) = %.1e", u.front()));
  double d_left = (-3 * u[0] + 4 * u[1] - u[2]) / (2 * h);
  double d_right = (3 * u[u.size() - 1] - 4 * u[u.size() - 2] + u[u.size() - 3]) / (2 * h);
  if (std::abs(d_left - std::numbers::pi) > tol)
    out.fail(strf("u'(0) = %.8f vs pi, off by %.2e > %.2e", d_left,
                  std::abs(d_left - std::numbers::pi), tol));
  else
    out.note(strf("u'(0)-pi = %.2e (tol %.1e)", d_left - std::numbers::pi, tol));
  if (std::abs(d_right + std::numbers::pi) > tol)
    out.fail(strf("u'(1) = %.8f vs -pi, off by %.2e > %.2e", d_right,
                  std::abs(d_right + std::numbers::pi), tol));
  else
    out.note(strf("u'(1)+pi = %.2e (tol %.1e)", d_right + std::numbers::pi, tol));
  return out;
}

// 4. The two growth variants: exact reference iteration counts at tol 1e-10.
Outcome criterion4() {
  Outcome out;
  for (const auto& [name, expected] :
       {std::pair<const char*, int>{"quadratic_growth", 15}, {"cubic_growth", 16}}) {
    const SampleProblem& sample = sample_problem(name);
    SolveReport rep = solve(sample.spec, make_grid(sample.spec.a, sample.default_n));
    if (rep.converged && rep.k == expected)
      out.note(strf("%s: K=%d as expected", name, rep.k));
    else
      out.fail(strf("%s: K=%d (expected %d)", name, rep.k, expected));
  }
  return out;
}

// 5. Kernel construction vs closed forms on a 101×101 lattice, plus the
//    boundary/continuity/jump invariants on random admissible boundary rows.
Outcome criterion5() {
  Outcome out;
  struct Case {
    const char* name;
    const ProblemSpec& spec;
    double (*closed)(double, double);
  };
  const Case cases[] = {{"exp-solution rows", spec_of("example1"), g1_closed},
                        {"trig-solution rows", spec_of("example3"), g3_closed}};
  for (const Case& c : cases) {
    double worst = 0.0;
    for (int j = 0; j <= 100; ++j) {
      double s = c.spec.a * j / 100;
      GreenPieces col = build_green(c.spec, s);
      for (int i = 0; i <= 100; ++i) {
        double t = c.spec.a * i / 100;
        worst = std::max(worst, std::abs(eval_green(col, t) - c.closed(t, s)));
      }
    }
    if (worst > 1e-10)
      out.fail(strf("%s: lattice deviation %.2e > 1e-10", c.name, worst));
    else
      out.note(strf("%s: max lattice deviation %.1e", c.name, worst));
  }

  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_real_distribution<double> len(0.5, 3.0);
  double worst_invariant = 0.0;
  int accepted = 0;
  while (accepted < 50) {
    ProblemSpec spec;
    spec.a = len(rng);
    bool two_left = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
    spec.bc = {BoundaryRow{Side::left, coeff(rng), coeff(rng), coeff(rng), 0.0},
               BoundaryRow{two_left ? Side::left : Side::right, coeff(rng), coeff(rng),
                           coeff(rng), 0.0},
               BoundaryRow{Side::right, coeff(rng), coeff(rng), coeff(rng), 0.0}};
    spec.f = Expr::parse("0", VarSet::all());
    spec.phi = Expr::parse("t", VarSet::time_only());
    if (!validate(spec).pass) continue;
    double s = spec.a * std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    GreenPieces col;
    try {
      col = build_green(spec, s);
    } catch (const SingularGreenSystem&) {
      continue;  // admissible set = rows the construction accepts
    }
    ++accepted;
    double scale = 1.0;
    for (double c : col.lower) scale = std::max(scale, std::abs(c));
    for (double c : col.upper) scale = std::max(scale, std::abs(c));

    auto value = [](const std::array<double, 3>& c, double x) {
      return c[0] + x * (c[1] + x * c[2]);
    };
    auto slope = [](const std::array<double, 3>& c, double x) { return c[1] + 2 * c[2] * x; };
    double residual = 0.0;
    for (const BoundaryRow& row : spec.bc) {
      double x = row.at == Side::left ? 0.0 : spec.a;
      const auto& piece = row.at == Side::left ? col.lower : col.upper;
      residual = std::max(residual, std::abs(row.alpha * value(piece, x) +
                                             row.beta * slope(piece, x) +
                                             row.gamma * 2.0 * piece[2]));
    }
    residual = std::max(residual, std::abs(value(col.lower, s) - value(col.upper, s)));
    residual = std::max(residual, std::abs(slope(col.lower, s) - slope(col.upper, s)));
    residual = std::max(residual, std::abs(2 * col.upper[2] - 2 * col.lower[2] - 1.0));
    worst_invariant = std::max(worst_invariant, residual / scale);
  }
  if (worst_invariant > 1e-10)
    out.fail(strf("random rows: worst invariant residual %.2e > 1e-10", worst_invariant));
  else
    out.note(strf("50 random row sets: worst invariant residual %.1e", worst_invariant));
  return out;
}

// 6. Trapezoid order for the kernel-weighted integral of exp, evaluation
//    point on-grid (t=1/2) and off-grid (t=1/√2).
Outcome criterion6() {
  Outcome out;
  const ProblemSpec& spec = spec_of("example1");
  auto grid_sum = [&](double t, int n) {
    Grid grid = make_grid(1.0, n);
    std::vector<double> kernel(grid.nodes.size()), values(grid.nodes.size());
    for (size_t j = 0; j < grid.nodes.size(); ++j) {
      kernel[j] = eval_green(build_green(spec, grid.nodes[j]), t);
      values[j] = std::exp(grid.nodes[j]);
    }
    return weighted_sum(grid, kernel, values);
  };
  struct Point {
    const char* label;
    double t;
  };
  for (const Point& p : {Point{"on-grid t=1/2", 0.5}, Point{"off-grid t=1/sqrt(2)",
                                                            1.0 / std::sqrt(2.0)}}) {
    double exact = g1_exp_integral(p.t);
    double prev_err = 0.0;
    for (int n : {100, 200, 400}) {
      double err = std::abs(grid_sum(p.t, n) - exact);
      if (prev_err > 0.0) {
        double order = std::log2(prev_err / err);
        if (order < 1.8 || order > 2.2)
          out.fail(strf("%s: order %.3f between N=%d and N=%d outside [1.8,2.2]", p.label, order,
                        n / 2, n));
        else
          out.note(strf("%s: order(%d->%d)=%.3f", p.label, n / 2, n, order));
      }
      prev_err = err;
    }
  }
  return out;
}

// 7. Kernel norm: exact cell integration vs a dense 20001-point |G| trapezoid
//    built on the closed forms. The bundled stated value 1/2 for the
//    exponential-solution rows is reported, not asserted: the true norm is
//    1/12 (and the bundled contraction factor 0.16 is only consistent with
//    1/12).
Outcome criterion7() {
  Outcome out;
  struct Case {
    const char* name;
    const ProblemSpec& spec;
    double (*closed)(double, double);
  };
  const Case cases[] = {{"exp-solution rows", spec_of("example1"), g1_closed},
                        {"trig-solution rows", spec_of("example3"), g3_closed}};
  for (const Case& c : cases) {
    Grid grid = make_grid(c.spec.a, 500);
    double exact = compute_m0(c.spec, grid);
    double brute = 0.0;
    const int dense = 20000;  // 20001 sample points
    const double hs = c.spec.a / dense;
    for (double t : grid.nodes) {
      double sum = 0.0;
      for (int j = 0; j <= dense; ++j) {
        double s = c.spec.a * j / dense;
        sum += (j == 0 || j == dense ? 0.5 : 1.0) * std::abs(c.closed(t, s));
      }
      brute = std::max(brute, hs * sum);
    }
    if (std::abs(exact - brute) > 1e-6)
      out.fail(strf("%s: compute_m0 %.10f vs brute %.10f, gap %.2e > 1e-6", c.name, exact, brute,
                    std::abs(exact - brute)));
    else
      out.note(strf("%s: compute_m0 %.10f agrees with dense oracle to %.1e", c.name, exact,
                    std::abs(exact - brute)));
  }
  double m0 = compute_m0(spec_of("example1"), make_grid(1.0, 500));
  out.note(strf("flagged: bundled stated norm 0.5 not reproduced (computed %.10f = 1/12)", m0));
  return out;
}

// 8. Zero right side with homogeneous rows: the zero solution in one update.
Outcome criterion8() {
  Outcome out;
  ProblemSpec spec = spec_of("example1");
  for (BoundaryRow& row : spec.bc) row.b = 0.0;
  spec.f = Expr::parse("0", VarSet::all());
  spec.exact.reset();
  SolveReport rep = solve(spec, make_grid(1.0, 100));
  if (!rep.converged || rep.k != 1) out.fail(strf("K=%d (expected 1)", rep.k));
  double worst = 0.0;
  for (double ui : rep.u) worst = std::max(worst, std::abs(ui));
  if (worst > 1e-14)
    out.fail(strf("max|U| = %.2e > 1e-14", worst));
  else
    out.note(strf("K=%d, max|U| = %.1e", rep.k, worst));
  return out;
}

// 9. Condition checker: the trigonometric right side respects its bound 2;
//    a constant right side has zero contraction factor. The bundled stated
//    q = 0.16 for the exponential-solution problem is reported, not asserted.
Outcome criterion9() {
  Outcome out;
  ConditionReport trig = check_conditions(spec_of("example2"), 2.0);
  if (trig.f_max_observed > 2.0)
    out.fail(strf("observed max |f| %.6f exceeds the bound 2", trig.f_max_observed));
  else
    out.note(strf("trig right side: observed max |f| %.4f <= 2, q=%.4f", trig.f_max_observed,
                  trig.q));

  ProblemSpec constant = spec_of("example1");
  constant.f = Expr::parse("6", VarSet::all());
  constant.exact.reset();
  ConditionReport flat = check_conditions(constant, 7.0);
  if (flat.q != 0.0)
    out.fail(strf("constant right side: q = %.3e, expected exactly 0", flat.q));
  else
    out.note("constant right side: q = 0 exactly");

  ConditionReport exp1 = check_conditions(spec_of("example1"), 6.5);
  out.note(strf("flagged: bundled stated q=0.16 not asserted; computed q=%.10f", exp1.q));
  if (!(exp1.q < 1.0)) out.fail("computed contraction factor is not below 1");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
      if (only < 1 || only > 9) {
        std::fprintf(stderr, "--criterion takes a number from 1 to 9\n");
        return 1;
      }
    } else {
      std::fprintf(stderr, "usage: %s [--criterion <1..9>]\n", argv[0]);
      return 1;
    }
  }

  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3,
                                               criterion4, criterion5, criterion6,
                                               criterion7, criterion8, criterion9};
  bool all_pass = true;
  for (int k = 1; k <= 9; ++k) {
    if (only != 0 && k != only) continue;
    Outcome outcome;
    try {
      outcome = criteria[k - 1]();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.notes = {strf("unexpected exception: %s", e.what())};
    }
    std::printf("Criterion %d: %s — %s\n", k, outcome.pass ? "PASS" : "FAIL",
                join(outcome.notes).c_str());
    std::fflush(stdout);
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}
