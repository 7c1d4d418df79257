#include "fdebvp/samples.hpp"

#include <numbers>

#include "fdebvp/format.hpp"

namespace fdebvp {

namespace {

ProblemSpec make_spec(double a, std::array<BoundaryRow, 3> bc, const char* f, const char* phi,
                      const char* exact) {
  ProblemSpec spec;
  spec.a = a;
  spec.bc = bc;
  spec.f = Expr::parse(f, VarSet::all());
  spec.phi = Expr::parse(phi, VarSet::time_only());
  if (exact) spec.exact = Expr::parse(exact, VarSet::time_only());
  return spec;
}

std::vector<SampleProblem> build_samples() {
  constexpr double pi = std::numbers::pi;
  constexpr double e = std::numbers::e;
  std::vector<SampleProblem> samples;

  // u''' = e^t − u/4 + u(t/2)²/4,  u(0)=1, u'(0)=1, u'(1)=e; exact e^t.
  samples.push_back({"example1",
                     "proportional delay, exact solution exp(t)",
                     make_spec(1.0,
                               {BoundaryRow{Side::left, 1, 0, 0, 1.0},
                                BoundaryRow{Side::left, 0, 1, 0, 1.0},
                                BoundaryRow{Side::right, 0, 1, 0, e}},
                               "exp(t) - u/4 + v^2/4", "t/2", "exp(t)"),
                     100,
                     6.5});

  // u''' = sin(u²) + cos(u(t²)²),  u(0)=0, u'(0)=π, u'(1)=−π; no closed form.
  samples.push_back({"example2",
                     "quadratic delay, no closed-form solution",
                     make_spec(1.0,
                               {BoundaryRow{Side::left, 1, 0, 0, 0.0},
                                BoundaryRow{Side::left, 0, 1, 0, pi},
                                BoundaryRow{Side::right, 0, 1, 0, -pi}},
                               "sin(u^2) + cos(v^2)", "t^2", nullptr),
                     1000,
                     2.0});

  // u''' = −1 + 2·u(t/2)² on [0, π],  u(0)=0, u'(0)=1, u(π)=0; exact sin t.
  samples.push_back({"example3",
                     "interval [0, pi], exact solution sin(t)",
                     make_spec(pi,
                               {BoundaryRow{Side::left, 1, 0, 0, 0.0},
                                BoundaryRow{Side::left, 0, 1, 0, 1.0},
                                BoundaryRow{Side::right, 1, 0, 0, 0.0}},
                               "-1 + 2*v^2", "t/2", "sin(t)"),
                     100,
                     std::nullopt});

  // Example 1's boundary data with quadratic growth in both arguments.
  samples.push_back({"quadratic_growth",
                     "f = e^t + u^2 + v^2 + 1 under example1 boundary data",
                     make_spec(1.0,
                               {BoundaryRow{Side::left, 1, 0, 0, 1.0},
                                BoundaryRow{Side::left, 0, 1, 0, 1.0},
                                BoundaryRow{Side::right, 0, 1, 0, e}},
                               "exp(t) + u^2 + v^2 + 1", "t/2", nullptr),
                     100,
                     std::nullopt});

  // Same boundary data with cubic decay in u.
  samples.push_back({"cubic_growth",
                     "f = e^(2t) - u^3 + v^2 + 5 under example1 boundary data",
                     make_spec(1.0,
                               {BoundaryRow{Side::left, 1, 0, 0, 1.0},
                                BoundaryRow{Side::left, 0, 1, 0, 1.0},
                                BoundaryRow{Side::right, 0, 1, 0, e}},
                               "exp(2*t) - u^3 + v^2 + 5", "t/2", nullptr),
                     100,
                     std::nullopt});

  return samples;
}

}  // namespace

const std::vector<SampleProblem>& sample_problems() {
  static const std::vector<SampleProblem> samples = build_samples();
  return samples;
}

const SampleProblem& sample_problem(std::string_view name) {
  for (const SampleProblem& s : sample_problems())
    if (s.name == name) return s;
  throw FdeError(strf("unknown sample problem '%.*s'", static_cast<int>(name.size()),
                      name.data()));
}

}  // namespace fdebvp
