#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kirchhoff1d/calculus.hpp"
#include "kirchhoff1d/problem.hpp"

namespace kirchhoff1d {

struct SolverOptions {
  double newton_tol = 1e-10;      // max-norm residual target of the inner solve
  int newton_max_iter = 50;
  double newton_min_step = 1.0 / 64;  // damping floor; step starts at 1 and halves
  double picard_tol = 1e-8;       // on |K_new - K_old|/(1+K_old) and ||u_new - u_old||_inf
  int picard_max_iter = 100;
  double picard_relaxation = 0.5;  // omega in (0,1] applied to the Kirchhoff update
  double delta_flux = 1e-8;        // flux regularization, keeps the Jacobian bounded for p < 2
  double positivity_floor = 0.0;   // iterates are clipped to this level after each step
};

/// Converged solve at one truncation level.
struct SolutionProfile {
  DiscreteFunction u;
  double eps;
  double K_p;                    // converged Kirchhoff constant of the p-term
  std::optional<double> K_q;     // present only when the problem carries q
  int picard_iters;
  double final_residual_norm;
  bool converged;
  double delta_flux;             // regularization the profile was solved with
};

struct ErrorEntry {
  double eps;
  double l2_error;
  double h1_error;
};

/// Profiles along a decreasing truncation schedule, with errors against
/// the smallest-eps profile as reference (reference excluded).
struct ContinuationResult {
  std::vector<SolutionProfile> profiles;
  std::vector<ErrorEntry> errors_to_reference;
  bool complete = true;
  std::optional<double> failed_eps;
  std::string failure_message;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> residuals,
                   std::vector<double> kirchhoff,
                   std::optional<DiscreteFunction> best_iterate)
      : std::runtime_error(what),
        residual_history(std::move(residuals)),
        kirchhoff_history(std::move(kirchhoff)),
        best(std::move(best_iterate)) {}

  std::vector<double> residual_history;
  std::vector<double> kirchhoff_history;
  std::optional<DiscreteFunction> best;
};

class LinearSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Regularized flux phi_delta(s; p) = (s^2 + delta^2)^{(p-2)/2} s and its derivative in s.
double regularized_flux(double s, double p, double delta);
double regularized_flux_derivative(double s, double p, double delta);

/**
 * Residual of the truncated equation at the interior nodes (zero at the
 * boundary rows):
 *
 *   R_i = -K (F_{i+1/2} - F_{i-1/2}) / h  [- K_q q-flux term] [+ theta terms]
 *         - f(x_i)/(u_i + eps)^alpha - lambda |u_i|^{beta-2} u_i
 *
 * with F_{i+1/2} = phi_delta((u_{i+1}-u_i)/h; p(x_{i+1/2})).  Requires
 * K > 0.  Boundary rows carry the Dirichlet condition and always read 0.
 */
DiscreteFunction assemble_residual(const DiscreteFunction& u, double K, const ProblemSpec& spec,
                                   double eps, double delta_flux = 1e-8, double K_q = 1.0);

/**
 * Damped Newton solve of the fixed-K problem.  The Jacobian is
 * tridiagonal and factored by direct elimination; iterates are clipped
 * to the positivity floor after every step.  Throws ConvergenceError
 * (carrying the best iterate and residual history) when newton_max_iter
 * is exhausted, LinearSolveError on a singular tridiagonal system.
 */
DiscreteFunction solve_inner(double K, const ProblemSpec& spec, double eps, Grid grid,
                             const DiscreteFunction& init, const SolverOptions& opts,
                             double K_q = 1.0);

/**
 * Full solve at one truncation level: Picard iteration on the Kirchhoff
 * constant (relaxed by omega) around inner Newton solves.  The default
 * initializer is eps + sin(pi x) at the interior nodes, zero at the
 * boundary.  Stops when both the relative K increment and the iterate
 * increment fall below picard_tol.
 */
SolutionProfile solve_truncated(const ProblemSpec& spec, double eps, Grid grid,
                                const std::optional<DiscreteFunction>& init,
                                const SolverOptions& opts);

/**
 * Solve along a strictly decreasing eps schedule, warm-starting each
 * solve from the previous profile, and compute L2/H1 errors against the
 * smallest-eps profile.  A failing member yields a partial result with
 * the failure recorded instead of throwing.
 */
ContinuationResult continuation_sweep(const ProblemSpec& spec,
                                      const std::vector<double>& eps_schedule, Grid grid,
                                      const SolverOptions& opts);

}  // namespace kirchhoff1d
