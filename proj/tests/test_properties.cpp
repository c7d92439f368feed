#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "kirchhoff1d/properties.hpp"

using namespace kirchhoff1d;

TEST_CASE("node-wise ordering primitive") {
  Grid grid(10);
  DiscreteFunction u = DiscreteFunction::sample(grid, [](double x) { return x; });

  OrderReport same = check_order(u, u, 1e-8);
  CHECK(same.holds);
  CHECK(same.max_violation == 0.0);

  DiscreteFunction above = u;
  for (int i = 0; i < above.size(); ++i) above[i] += 0.1;
  OrderReport shifted = check_order(above, u, 1e-8);
  CHECK_FALSE(shifted.holds);
  CHECK(shifted.max_violation == doctest::Approx(0.1));
  CHECK(check_order(u, above, 1e-8).holds);

  CHECK_THROWS_AS(check_order(u, DiscreteFunction::zero(Grid(20)), 1e-8), std::domain_error);
}

TEST_CASE("identical specs compare with exactly zero violation") {
  Grid grid(100);
  ProblemSpec spec = default_spec();
  OrderReport first = comparison_experiment(spec, spec, 1e-2, grid, {});
  CHECK(first.holds);
  CHECK(first.max_violation == 0.0);

  // determinism: a rerun reproduces the report bit for bit
  OrderReport second = comparison_experiment(spec, spec, 1e-2, grid, {});
  CHECK(second.max_violation == first.max_violation);
  CHECK(second.worst_node == first.worst_node);
}

TEST_CASE("ordered reaction weights give ordered solutions") {
  Grid grid(200);
  ProblemSpec low = default_spec(), high = default_spec();
  low.lambda = 0.05;
  high.lambda = 0.1;
  OrderReport report = comparison_experiment(low, high, 1e-2, grid, {});
  CHECK(report.holds);
}

TEST_CASE("ordered forcing gives ordered solutions with strict separation") {
  Grid grid(200);
  ProblemSpec base = default_spec(), bumped = default_spec();
  bumped.f = bumped.f.shifted(0.5);
  OrderReport report = comparison_experiment(base, bumped, 1e-2, grid, {});
  CHECK(report.holds);

  SolutionProfile u1 = solve_truncated(base, 1e-2, grid, {}, {});
  SolutionProfile u2 = solve_truncated(bumped, 1e-2, grid, {}, {});
  CHECK(u2.u[grid.n_cells / 2] > u1.u[grid.n_cells / 2]);
}

TEST_CASE("ordering holds across grid resolutions") {
  for (int n : {100, 200, 400}) {
    Grid grid(n);
    ProblemSpec low = default_spec(), high = default_spec();
    low.lambda = 0.05;
    high.lambda = 0.1;
    CHECK(comparison_experiment(low, high, 1e-2, grid, {}).holds);
  }
}

TEST_CASE("comparison hypothesis violations are precondition errors") {
  Grid grid(100);
  ProblemSpec low = default_spec(), high = default_spec();
  low.lambda = 0.1;
  high.lambda = 0.05;  // swapped
  CHECK_THROWS_AS(comparison_experiment(low, high, 1e-2, grid, {}), std::invalid_argument);

  ProblemSpec shrunk = default_spec();
  shrunk.f = shrunk.f.shifted(-0.5);
  CHECK_THROWS_AS(comparison_experiment(default_spec(), shrunk, 1e-2, grid, {}),
                  std::invalid_argument);

  ProblemSpec other_alpha = default_spec();
  other_alpha.alpha = 1.0;
  CHECK_THROWS_AS(comparison_experiment(default_spec(), other_alpha, 1e-2, grid, {}),
                  std::invalid_argument);
}

TEST_CASE("stability ratios are coherent across perturbation sizes") {
  Grid grid(200);
  ProblemSpec base = default_spec();
  std::vector<double> ratios;
  for (double c : {1e-1, 1e-2, 1e-3}) {
    ProblemSpec bumped = base;
    bumped.f = bumped.f.shifted(c);
    StabilityReport report = stability_experiment(base, bumped, 1e-2, grid, {});
    CHECK(report.data_distance == doctest::Approx(c).epsilon(1e-12));
    CHECK(report.ratio > 0.0);
    ratios.push_back(report.ratio);
  }
  double lo = *std::min_element(ratios.begin(), ratios.end());
  double hi = *std::max_element(ratios.begin(), ratios.end());
  CHECK(hi / lo <= 3.0);
}

TEST_CASE("reaction-weight perturbation gives a finite ratio") {
  Grid grid(200);
  ProblemSpec base = default_spec(), shifted = default_spec();
  shifted.lambda = base.lambda + 1e-2;
  StabilityReport report = stability_experiment(base, shifted, 1e-2, grid, {});
  CHECK(report.data_distance == doctest::Approx(1e-2));
  CHECK(report.ratio > 0.0);
  CHECK(std::isfinite(report.ratio));
}

TEST_CASE("identical data is a stability domain error") {
  Grid grid(100);
  CHECK_THROWS_AS(stability_experiment(default_spec(), default_spec(), 1e-2, grid, {}),
                  std::domain_error);
}

TEST_CASE("profiles grow monotonically as the truncation shrinks") {
  Grid grid(100);
  OrderReport vacuous = epsilon_monotonicity(default_spec(), {1e-1}, grid, {});
  CHECK(vacuous.holds);
  CHECK(vacuous.max_violation == 0.0);

  OrderReport report = epsilon_monotonicity(default_spec(), {1e-1, 1e-2, 1e-3}, grid, {});
  CHECK(report.holds);
  CHECK(report.max_violation <= 1e-8);

  CHECK_THROWS_AS(epsilon_monotonicity(default_spec(), {1e-3, 1e-2}, grid, {}),
                  std::invalid_argument);
}

TEST_CASE("alpha sensitivity quotients are bounded and coherent") {
  Grid grid(200);
  ProblemSpec spec = default_spec();
  double wide = alpha_sensitivity(spec, 1.5, 1.6, 1e-2, grid, {});
  double narrow = alpha_sensitivity(spec, 1.5, 1.51, 1e-2, grid, {});
  CHECK(wide > 0.0);
  CHECK(narrow > 0.0);
  double spread = std::max(wide, narrow) / std::min(wide, narrow);
  CHECK(spread <= 3.0);

  CHECK_THROWS_AS(alpha_sensitivity(spec, 1.5, 1.5, 1e-2, grid, {}), std::domain_error);
  CHECK_THROWS_AS(alpha_sensitivity(spec, -0.5, 1.5, 1e-2, grid, {}), std::domain_error);
}

TEST_CASE("alpha ordering tracks the source monotonicity") {
  // For profiles below 1 the map a -> (u+eps)^{-a} grows with a, so the
  // comparison mechanism orders the solutions upward in alpha.
  Grid grid(200);
  ProblemSpec spec = default_spec();
  double ratio = alpha_sensitivity(spec, 0.5, 1.0, 1e-2, grid, {});
  CHECK(std::isfinite(ratio));
  CHECK(ratio > 0.0);

  ProblemSpec weak = spec, strong = spec;
  weak.alpha = 0.5;
  strong.alpha = 1.0;
  SolutionProfile u_weak = solve_truncated(weak, 1e-2, grid, {}, {});
  SolutionProfile u_strong = solve_truncated(strong, 1e-2, grid, {}, {});
  CHECK(linf_norm(u_strong.u) < 1.0);
  CHECK(check_order(u_weak.u, u_strong.u, 1e-8).holds);
}
