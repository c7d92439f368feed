#pragma once

#include <vector>

#include "kirchhoff1d/calculus.hpp"
#include "kirchhoff1d/problem.hpp"
#include "kirchhoff1d/solver.hpp"

namespace kirchhoff1d {

/// Node-wise ordering check u1 <= u2 up to a tolerance.
struct OrderReport {
  bool holds = false;
  double max_violation = 0.0;
  int worst_node = 0;
  double tolerance = 0.0;
};

OrderReport check_order(const DiscreteFunction& u1, const DiscreteFunction& u2, double tol);

struct StabilityReport {
  double data_distance;      // ||f1 - f2||_inf + |lambda1 - lambda2|
  double solution_distance;  // discrete H1 norm of u1 - u2
  double ratio;
};

/**
 * Solve two specs with ordered data (lambda1 <= lambda2, f1 <= f2
 * node-wise, otherwise identical) and check node-wise ordering of the
 * computed profiles at tolerance 1e-8.  Hypothesis violations are
 * precondition errors.  Both solves use the same initializer and
 * options; they run concurrently.
 */
OrderReport comparison_experiment(const ProblemSpec& spec1, const ProblemSpec& spec2, double eps,
                                  Grid grid, const SolverOptions& opts);

/**
 * Empirical Lipschitz quotient for specs differing only in (lambda, f):
 * the discrete H1 distance of the profiles over the data distance.
 */
StabilityReport stability_experiment(const ProblemSpec& spec1, const ProblemSpec& spec2,
                                     double eps, Grid grid, const SolverOptions& opts);

/**
 * Solve along a strictly decreasing eps schedule and aggregate the
 * worst node-wise ordering violation over consecutive pairs: shrinking
 * the truncation strengthens the source, so profiles must not decrease.
 */
OrderReport epsilon_monotonicity(const ProblemSpec& spec, const std::vector<double>& eps_schedule,
                                 Grid grid, const SolverOptions& opts);

/// Difference quotient ||u_a1 - u_a2||_H1 / |a1 - a2| of two solves
/// differing only in the singular exponent.
double alpha_sensitivity(const ProblemSpec& spec, double alpha1, double alpha2, double eps,
                         Grid grid, const SolverOptions& opts);

}  // namespace kirchhoff1d
