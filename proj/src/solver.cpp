#include "kirchhoff1d/solver.hpp"

#include <algorithm>
#include <cmath>

namespace kirchhoff1d {

double regularized_flux(double s, double p, double delta) {
  return std::pow(s * s + delta * delta, (p - 2.0) / 2.0) * s;
}

double regularized_flux_derivative(double s, double p, double delta) {
  double w = s * s + delta * delta;
  return std::pow(w, (p - 4.0) / 2.0) * ((p - 1.0) * s * s + delta * delta);
}

namespace {

// Per-solve workspace: node/midpoint coefficient tables and scratch
// vectors for the tridiagonal Newton step.
struct Workspace {
  Grid grid;
  double K_p = 1.0;
  double K_q = 1.0;
  double eps = 0.0;
  double delta = 1e-8;
  double alpha = 1.0, beta = 2.0, lambda = 0.0, theta = 0.0;
  bool has_q = false;
  std::vector<double> p_mid, q_mid, p_node, q_node, f_node;
  std::vector<double> lower, diag, upper, rhs, cprime, dprime;

  Workspace(Grid g, const ProblemSpec& spec, double eps_, double delta_)
      : grid(g), eps(eps_), delta(delta_), alpha(spec.alpha), beta(spec.beta),
        lambda(spec.lambda), theta(spec.theta), has_q(spec.q.has_value()) {
    const int n = grid.n_cells;
    p_mid.resize(n);
    f_node.resize(n + 1);
    for (int i = 0; i < n; ++i) p_mid[i] = spec.p.eval(grid.midpoint(i));
    for (int i = 0; i <= n; ++i) f_node[i] = spec.f.eval(grid.node(i));
    if (has_q) {
      q_mid.resize(n);
      for (int i = 0; i < n; ++i) q_mid[i] = spec.q->eval(grid.midpoint(i));
    }
    if (theta > 0.0) {
      p_node.resize(n + 1);
      for (int i = 0; i <= n; ++i) p_node[i] = spec.p.eval(grid.node(i));
      if (has_q) {
        q_node.resize(n + 1);
        for (int i = 0; i <= n; ++i) q_node[i] = spec.q->eval(grid.node(i));
      }
    }
    lower.assign(n + 1, 0.0);
    diag.assign(n + 1, 1.0);
    upper.assign(n + 1, 0.0);
    rhs.assign(n + 1, 0.0);
    cprime.assign(n + 1, 0.0);
    dprime.assign(n + 1, 0.0);
  }

  void residual(const DiscreteFunction& u, std::vector<double>& R) const {
    const int n = grid.n_cells;
    const double h = grid.spacing();
    R.assign(n + 1, 0.0);
    for (int i = 1; i < n; ++i) {
      double sl = (u[i] - u[i - 1]) / h;
      double sr = (u[i + 1] - u[i]) / h;
      double div = K_p * (regularized_flux(sr, p_mid[i], delta) -
                          regularized_flux(sl, p_mid[i - 1], delta)) / h;
      if (has_q)
        div += K_q * (regularized_flux(sr, q_mid[i], delta) -
                      regularized_flux(sl, q_mid[i - 1], delta)) / h;
      double r = -div;
      if (theta > 0.0) {
        r += theta * std::pow(std::abs(u[i]), p_node[i] - 1.0) * sgn(u[i]);
        if (has_q)
          r += theta * std::pow(std::abs(u[i]), q_node[i] - 1.0) * sgn(u[i]);
      }
      r -= f_node[i] / std::pow(u[i] + eps, alpha);
      if (u[i] != 0.0) r -= lambda * std::pow(std::abs(u[i]), beta - 2.0) * u[i];
      R[i] = r;
    }
  }

  static double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

  static double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }

  // Assemble the tridiagonal Jacobian rows and solve J du = -R in place.
  void newton_direction(const DiscreteFunction& u, const std::vector<double>& R,
                        std::vector<double>& du) {
    const int n = grid.n_cells;
    const double h = grid.spacing();
    lower[0] = 0.0; diag[0] = 1.0; upper[0] = 0.0; rhs[0] = 0.0;
    lower[n] = 0.0; diag[n] = 1.0;
    upper[n] = 0.0; rhs[n] = 0.0;
    for (int i = 1; i < n; ++i) {
      double sl = (u[i] - u[i - 1]) / h;
      double sr = (u[i + 1] - u[i]) / h;
      double dl = K_p * regularized_flux_derivative(sl, p_mid[i - 1], delta);
      double dr = K_p * regularized_flux_derivative(sr, p_mid[i], delta);
      if (has_q) {
        dl += K_q * regularized_flux_derivative(sl, q_mid[i - 1], delta);
        dr += K_q * regularized_flux_derivative(sr, q_mid[i], delta);
      }
      // exponents below 2 make |u|^{e-2} singular at u = 0; clamp the base
      // so those rows stay finite (a huge but finite diagonal pins the node)
      double base = std::max(std::abs(u[i]), 1e-30);
      double d = (dl + dr) / (h * h);
      d += alpha * f_node[i] * std::pow(u[i] + eps, -alpha - 1.0);
      d -= lambda * (beta - 1.0) * std::pow(base, beta - 2.0);
      if (theta > 0.0) {
        d += theta * (p_node[i] - 1.0) *
             std::pow(base, p_node[i] - 2.0);
        if (has_q)
          d += theta * (q_node[i] - 1.0) *
               std::pow(base, q_node[i] - 2.0);
      }
      lower[i] = -dl / (h * h);
      diag[i] = d;
      upper[i] = -dr / (h * h);
      rhs[i] = -R[i];
    }
    // Thomas elimination
    if (std::abs(diag[0]) < 1e-300) throw LinearSolveError("singular tridiagonal system");
    cprime[0] = upper[0] / diag[0];
    dprime[0] = rhs[0] / diag[0];
    for (int i = 1; i <= n; ++i) {
      double m = diag[i] - lower[i] * cprime[i - 1];
      if (std::abs(m) < 1e-300) throw LinearSolveError("singular tridiagonal system");
      cprime[i] = upper[i] / m;
      dprime[i] =
          (rhs[i] - lower[i] * dprime[i - 1]) / m;
    }
    du.assign(n + 1, 0.0);
    du[n] = dprime[n];
    for (int i = n - 1; i >= 0; --i)
      du[i] = dprime[i] - cprime[i] * du[i + 1];
  }
};

DiscreteFunction clipped_step(const DiscreteFunction& u, const std::vector<double>& du,
                              double step, double floor) {
  DiscreteFunction trial = u;
  for (int i = 1; i + 1 < u.size(); ++i)
    trial[i] = std::max(u[i] + step * du[i], floor);
  trial[0] = 0.0;
  trial[u.size() - 1] = 0.0;
  return trial;
}

struct NewtonResult {
  DiscreteFunction u;
  double residual_norm;
};

NewtonResult newton_solve(Workspace& ws, const DiscreteFunction& init,
                          const SolverOptions& opts) {
  DiscreteFunction u = init;
  std::vector<double> R, du;
  ws.residual(u, R);
  double rn = Workspace::max_abs(R);
  std::vector<double> history{rn};

  for (int it = 0; it < opts.newton_max_iter; ++it) {
    if (rn <= opts.newton_tol) return {std::move(u), rn};
    ws.newton_direction(u, R, du);
    double step = 1.0;
    std::vector<double> Rt;
    while (true) {
      DiscreteFunction trial = clipped_step(u, du, step, opts.positivity_floor);
      if (trial.values == u.values) {
        // correction below one ulp of the iterate: the residual has hit
        // the floor representable on this grid/regularization
        throw ConvergenceError("inner Newton solve stalled at the numerical precision floor "
                               "(residual " + std::to_string(rn) + ")",
                               std::move(history), {}, u);
      }
      ws.residual(trial, Rt);
      double rt = Workspace::max_abs(Rt);
      if (rt < rn || step <= opts.newton_min_step) {
        u = std::move(trial);
        R = Rt;
        rn = rt;
        break;
      }
      step *= 0.5;
    }
    history.push_back(rn);
  }
  if (rn <= opts.newton_tol) return {std::move(u), rn};
  throw ConvergenceError("inner Newton solve did not reach tolerance", std::move(history), {},
                         u);
}

DiscreteFunction default_initializer(Grid grid, double eps) {
  DiscreteFunction u = DiscreteFunction::sample(
      grid, [eps](double x) { return eps + std::sin(M_PI * x); });
  u[0] = 0.0;
  u[grid.n_cells] = 0.0;
  return u;
}

}  // namespace

DiscreteFunction assemble_residual(const DiscreteFunction& u, double K, const ProblemSpec& spec,
                                   double eps, double delta_flux, double K_q) {
  if (!(K > 0.0)) throw std::domain_error("Kirchhoff constant must be positive");
  if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
  Workspace ws(u.grid, spec, eps, delta_flux);
  ws.K_p = K;
  ws.K_q = K_q;
  std::vector<double> R;
  ws.residual(u, R);
  return DiscreteFunction(u.grid, std::move(R));
}

DiscreteFunction solve_inner(double K, const ProblemSpec& spec, double eps, Grid grid,
                             const DiscreteFunction& init, const SolverOptions& opts,
                             double K_q) {
  if (!(K > 0.0)) throw std::domain_error("Kirchhoff constant must be positive");
  if (init.grid != grid) throw std::domain_error("initializer grid mismatch");
  if (init[0] != 0.0 || init[init.size() - 1] != 0.0)
    throw std::invalid_argument("initializer must satisfy the boundary conditions");
  Workspace ws(grid, spec, eps, opts.delta_flux);
  ws.K_p = K;
  ws.K_q = K_q;
  return newton_solve(ws, init, opts).u;
}

SolutionProfile solve_truncated(const ProblemSpec& spec, double eps, Grid grid,
                                const std::optional<DiscreteFunction>& init,
                                const SolverOptions& opts) {
  if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
  DiscreteFunction u = init ? *init : default_initializer(grid, eps);
  if (u.grid != grid) throw std::domain_error("initializer grid mismatch");

  const bool has_q = spec.q.has_value();
  const KirchhoffFunction Mq = spec.M_q ? *spec.M_q : KirchhoffFunction::constant(1.0);
  Workspace ws(grid, spec, eps, opts.delta_flux);
  ws.K_p = spec.M_p.value(modular(u, spec.p));
  if (has_q) ws.K_q = Mq.value(modular(u, *spec.q));

  std::vector<double> K_history{ws.K_p};
  const double omega = opts.picard_relaxation;

  for (int it = 1; it <= opts.picard_max_iter; ++it) {
    DiscreteFunction u_new = newton_solve(ws, u, opts).u;
    double K_target = spec.M_p.value(modular(u_new, spec.p));
    double K_new = (1.0 - omega) * ws.K_p + omega * K_target;
    double dK = std::abs(K_new - ws.K_p) / (1.0 + ws.K_p);
    if (has_q) {
      double Kq_target = Mq.value(modular(u_new, *spec.q));
      double Kq_new = (1.0 - omega) * ws.K_q + omega * Kq_target;
      dK = std::max(dK, std::abs(Kq_new - ws.K_q) / (1.0 + ws.K_q));
      ws.K_q = Kq_new;
    }
    double du = linf_norm(subtract(u_new, u));
    u = std::move(u_new);
    ws.K_p = K_new;
    K_history.push_back(ws.K_p);

    if (du <= opts.picard_tol && dK <= opts.picard_tol) {
      // polish at the converged constant so the returned pair (u, K_p)
      // satisfies the discrete equation to newton_tol
      NewtonResult polished = newton_solve(ws, u, opts);
      SolutionProfile profile{std::move(polished.u), eps, ws.K_p, {}, it,
                              polished.residual_norm, true, opts.delta_flux};
      if (has_q) profile.K_q = ws.K_q;
      return profile;
    }
  }
  throw ConvergenceError("Kirchhoff fixed-point iteration did not converge", {},
                         std::move(K_history), u);
}

ContinuationResult continuation_sweep(const ProblemSpec& spec,
                                      const std::vector<double>& eps_schedule, Grid grid,
                                      const SolverOptions& opts) {
  if (eps_schedule.empty()) throw std::invalid_argument("eps schedule must be nonempty");
  for (std::size_t k = 0; k < eps_schedule.size(); ++k) {
    if (!(eps_schedule[k] > 0.0))
      throw std::invalid_argument("eps schedule entries must be positive");
    if (k > 0 && !(eps_schedule[k] < eps_schedule[k - 1]))
      throw std::invalid_argument("eps schedule must be strictly decreasing");
  }

  ContinuationResult result;
  std::optional<DiscreteFunction> warm;
  for (double eps : eps_schedule) {
    try {
      SolutionProfile profile = solve_truncated(spec, eps, grid, warm, opts);
      warm = profile.u;
      result.profiles.push_back(std::move(profile));
    } catch (const std::exception& e) {
      result.complete = false;
      result.failed_eps = eps;
      result.failure_message = e.what();
      break;
    }
  }
  if (result.profiles.size() >= 2) {
    const DiscreteFunction& ref = result.profiles.back().u;
    for (std::size_t k = 0; k + 1 < result.profiles.size(); ++k) {
      DiscreteFunction diff = subtract(result.profiles[k].u, ref);
      result.errors_to_reference.push_back(
          {result.profiles[k].eps, l2_norm(diff), h1_norm(diff)});
    }
  }
  return result;
}

}  // namespace kirchhoff1d
