#include "kirchhoff1d/properties.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

namespace kirchhoff1d {

namespace {

constexpr double kOrderTolerance = 1e-8;

// Launch the two solves of a paired experiment; each owns its workspace.
std::pair<SolutionProfile, SolutionProfile> paired_solve(const ProblemSpec& spec1,
                                                         const ProblemSpec& spec2, double eps,
                                                         Grid grid, const SolverOptions& opts) {
  auto task1 = std::async(std::launch::async,
                          [&] { return solve_truncated(spec1, eps, grid, {}, opts); });
  auto task2 = std::async(std::launch::async,
                          [&] { return solve_truncated(spec2, eps, grid, {}, opts); });
  return {task1.get(), task2.get()};
}

bool same_except_data(const ProblemSpec& a, const ProblemSpec& b) {
  return a.p == b.p && a.q == b.q && a.alpha == b.alpha && a.beta == b.beta &&
         a.theta == b.theta && a.M_p == b.M_p && a.M_q == b.M_q;
}

}  // namespace

OrderReport check_order(const DiscreteFunction& u1, const DiscreteFunction& u2, double tol) {
  if (u1.grid != u2.grid) throw std::domain_error("grid mismatch");
  OrderReport report;
  report.tolerance = tol;
  for (int i = 0; i < u1.size(); ++i) {
    double v = u1[i] - u2[i];
    if (v > report.max_violation) {
      report.max_violation = v;
      report.worst_node = i;
    }
  }
  report.holds = report.max_violation <= tol;
  return report;
}

OrderReport comparison_experiment(const ProblemSpec& spec1, const ProblemSpec& spec2, double eps,
                                  Grid grid, const SolverOptions& opts) {
  if (!same_except_data(spec1, spec2))
    throw std::invalid_argument("comparison specs may differ only in lambda and f");
  if (!(spec1.lambda <= spec2.lambda))
    throw std::invalid_argument("comparison hypothesis violated: lambda1 > lambda2");
  for (int i = 0; i <= grid.n_cells; ++i) {
    double x = grid.node(i);
    if (spec1.f.eval(x) > spec2.f.eval(x))
      throw std::invalid_argument("comparison hypothesis violated: f1 > f2 at a grid node");
  }
  auto [u1, u2] = paired_solve(spec1, spec2, eps, grid, opts);
  return check_order(u1.u, u2.u, kOrderTolerance);
}

StabilityReport stability_experiment(const ProblemSpec& spec1, const ProblemSpec& spec2,
                                     double eps, Grid grid, const SolverOptions& opts) {
  if (!same_except_data(spec1, spec2))
    throw std::invalid_argument("stability specs may differ only in lambda and f");
  double f_dist = 0.0;
  for (int i = 0; i <= grid.n_cells; ++i) {
    double x = grid.node(i);
    f_dist = std::max(f_dist, std::abs(spec1.f.eval(x) - spec2.f.eval(x)));
  }
  double data_distance = f_dist + std::abs(spec1.lambda - spec2.lambda);
  if (data_distance == 0.0) throw std::domain_error("stability experiment needs distinct data");

  auto [u1, u2] = paired_solve(spec1, spec2, eps, grid, opts);
  double solution_distance = h1_norm(subtract(u1.u, u2.u));
  return {data_distance, solution_distance, solution_distance / data_distance};
}

OrderReport epsilon_monotonicity(const ProblemSpec& spec, const std::vector<double>& eps_schedule,
                                 Grid grid, const SolverOptions& opts) {
  ContinuationResult sweep = continuation_sweep(spec, eps_schedule, grid, opts);
  if (!sweep.complete)
    throw ConvergenceError("monotonicity sweep failed at eps = " +
                               std::to_string(sweep.failed_eps.value_or(0.0)) + ": " +
                               sweep.failure_message,
                           {}, {}, {});
  OrderReport report;
  report.tolerance = kOrderTolerance;
  report.holds = true;
  for (std::size_t k = 0; k + 1 < sweep.profiles.size(); ++k) {
    OrderReport pair =
        check_order(sweep.profiles[k].u, sweep.profiles[k + 1].u, kOrderTolerance);
    if (pair.max_violation > report.max_violation) {
      report.max_violation = pair.max_violation;
      report.worst_node = pair.worst_node;
    }
    report.holds = report.holds && pair.holds;
  }
  return report;
}

double alpha_sensitivity(const ProblemSpec& spec, double alpha1, double alpha2, double eps,
                         Grid grid, const SolverOptions& opts) {
  if (alpha1 == alpha2) throw std::domain_error("alpha sensitivity needs distinct exponents");
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0))
    throw std::domain_error("singular exponents must be positive");
  ProblemSpec s1 = spec, s2 = spec;
  s1.alpha = alpha1;
  s2.alpha = alpha2;
  auto task1 = std::async(std::launch::async,
                          [&] { return solve_truncated(s1, eps, grid, {}, opts); });
  auto task2 = std::async(std::launch::async,
                          [&] { return solve_truncated(s2, eps, grid, {}, opts); });
  SolutionProfile u1 = task1.get(), u2 = task2.get();
  return h1_norm(subtract(u1.u, u2.u)) / std::abs(alpha1 - alpha2);
}

}  // namespace kirchhoff1d
