#pragma once

// Shared fixtures: the bundled sample problems plus independently derived
// closed forms used as oracles.

#include <cmath>
#include <numbers>

#include "fdebvp/problem.hpp"
#include "fdebvp/samples.hpp"

namespace testsupport {

using namespace fdebvp;

inline const ProblemSpec& ex1() { return sample_problem("example1").spec; }
inline const ProblemSpec& ex2() { return sample_problem("example2").spec; }
inline const ProblemSpec& ex3() { return sample_problem("example3").spec; }

// Green function for example1's boundary rows (u(0), u'(0), u'(1) all
// homogeneous), as two quadratic pieces in t.
inline double g1_closed(double t, double s) {
  return s <= t ? 0.5 * s * (t * t - 2.0 * t + s) : 0.5 * t * t * (s - 1.0);
}

// Green function for example3's boundary rows (u(0), u'(0), u(pi)).
inline double g3_closed(double t, double s) {
  const double pi = std::numbers::pi;
  double base = -t * t * (pi - s) * (pi - s) / (2.0 * pi * pi);
  return s <= t ? base + 0.5 * (t - s) * (t - s) : base;
}

// Example1's boundary rows with all loads zeroed and a custom right side.
inline ProblemSpec homogeneous_rows(const char* f) {
  ProblemSpec spec = ex1();
  for (BoundaryRow& row : spec.bc) row.b = 0.0;
  spec.f = Expr::parse(f, VarSet::all());
  spec.exact.reset();
  return spec;
}

// u = t^3 exactly: u(0) = 0, u'(0) = 0, u'(1) = 3, f three-derivative 6.
inline ProblemSpec cubic_problem() {
  ProblemSpec spec;
  spec.a = 1.0;
  spec.bc = {BoundaryRow{Side::left, 1, 0, 0, 0.0}, BoundaryRow{Side::left, 0, 1, 0, 0.0},
             BoundaryRow{Side::right, 0, 1, 0, 3.0}};
  spec.f = Expr::parse("6", VarSet::all());
  spec.phi = Expr::parse("t/2", VarSet::time_only());
  spec.exact = Expr::parse("t^3", VarSet::time_only());
  return spec;
}

// Rank 3 as functionals, yet no quadratic matches u''(0), u'(0), u''(a):
// the Green/boundary 3x3 system is singular.
inline ProblemSpec singular_quadratic_rows() {
  ProblemSpec spec;
  spec.a = 1.0;
  spec.bc = {BoundaryRow{Side::left, 0, 0, 1, 0.0}, BoundaryRow{Side::left, 0, 1, 0, 0.0},
             BoundaryRow{Side::right, 0, 0, 1, 1.0}};
  spec.f = Expr::parse("0", VarSet::all());
  spec.phi = Expr::parse("t", VarSet::time_only());
  return spec;
}

}  // namespace testsupport
