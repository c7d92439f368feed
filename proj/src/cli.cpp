#include "kirchhoff1d/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "kirchhoff1d/properties.hpp"

namespace kirchhoff1d {

namespace {

TestFunction test_function_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "bump") return TestFunction::bump(j.at("a").get<double>(), j.at("b").get<double>());
  if (kind == "log_truncated") return TestFunction::log_truncated(j.at("k").get<double>());
  if (kind == "zero") return TestFunction::zero();
  throw std::invalid_argument("unknown test function kind: " + kind);
}

std::filesystem::path out_path(const RunConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.out_dir);
  return std::filesystem::path(config.out_dir) / name;
}

void say(const RunConfig& config, const std::string& line) {
  if (!config.quiet) std::printf("%s\n", line.c_str());
}

/// Validate the problem instance; on violations print them and return false.
bool validated(const RunConfig& config) {
  ValidationReport report = validate_spec(config.spec, config.n_samples);
  if (report.valid) return true;
  for (const Violation& v : report.violations)
    std::fprintf(stderr, "invalid problem [%s]: %s\n", v.condition.c_str(),
                 v.message.c_str());
  return false;
}

DiscreteFunction flipped(const DiscreteFunction& u) {
  DiscreteFunction v = u;
  std::reverse(v.values.begin(), v.values.end());
  return v;
}

struct PropertyResult {
  std::string name;
  std::string status;  // pass / fail / error
  double metric = 0.0;
  std::string detail;
};

// Forcing that makes sin(pi x) the exact solution of the fixed-K problem
// with K = 1 and constant p = 2, tabulated on the solve grid so nodal
// evaluations are exact.
ProblemSpec manufactured_spec(Grid grid, double eps, double alpha, double lambda, double beta) {
  ProblemSpec spec;
  spec.p = ExponentField::constant(2.0);
  spec.alpha = alpha;
  spec.beta = beta;
  spec.lambda = lambda;
  spec.M_p = KirchhoffFunction::constant(1.0);
  std::vector<double> nodes(grid.n_nodes()), values(grid.n_nodes());
  for (int i = 0; i < grid.n_nodes(); ++i) {
    double x = grid.node(i);
    double s = std::sin(M_PI * x);
    nodes[i] = x;
    values[i] =
        (M_PI * M_PI * s - lambda * s * s * s) * std::pow(s + eps, alpha);
  }
  spec.f = ExponentField::tabulated(std::move(nodes), std::move(values));
  return spec;
}

double manufactured_error(int n_cells, double eps, double alpha, double lambda, double beta,
                          const SolverOptions& opts) {
  Grid grid(n_cells);
  ProblemSpec spec = manufactured_spec(grid, eps, alpha, lambda, beta);
  DiscreteFunction init = DiscreteFunction::sample(
      grid, [eps](double x) { return eps + std::sin(M_PI * x); });
  init[0] = 0.0;
  init[grid.n_cells] = 0.0;
  DiscreteFunction u = solve_inner(1.0, spec, eps, grid, init, opts);
  double err = 0.0;
  for (int i = 0; i < u.size(); ++i)
    err = std::max(err, std::abs(u[i] - std::sin(M_PI * grid.node(i))));
  return err;
}

}  // namespace

RunConfig config_from_json(const json& j) {
  RunConfig config;
  if (j.contains("problem")) config.spec = spec_from_json(j.at("problem"));
  if (j.contains("grid")) config.n_cells = j.at("grid").get<int>();
  if (j.contains("eps")) config.eps = j.at("eps").get<double>();
  if (j.contains("eps_schedule"))
    config.eps_schedule = j.at("eps_schedule").get<std::vector<double>>();
  if (j.contains("solver")) config.solver = options_from_json(j.at("solver"));
  if (j.contains("out")) config.out_dir = j.at("out").get<std::string>();
  if (j.contains("quiet")) config.quiet = j.at("quiet").get<bool>();
  if (j.contains("fit_window")) config.fit_window = j.at("fit_window").get<double>();
  if (j.contains("test_function"))
    config.test_function = test_function_from_json(j.at("test_function"));
  if (j.contains("alpha_f")) config.alpha_f = j.at("alpha_f").get<double>();
  if (j.contains("n_samples")) config.n_samples = j.at("n_samples").get<int>();
  if (j.contains("rate_points")) config.rate_points_path = j.at("rate_points").get<std::string>();
  if (j.contains("compare")) {
    const json& c = j.at("compare");
    if (c.contains("lambda")) config.compare_lambda = c.at("lambda").get<double>();
    if (c.contains("f_shift")) config.compare_f_shift = c.at("f_shift").get<double>();
  }
  if (j.contains("verify")) {
    const json& v = j.at("verify");
    if (v.contains("lambda_low")) config.verify_lambda_low = v.at("lambda_low").get<double>();
    if (v.contains("lambda_high")) config.verify_lambda_high = v.at("lambda_high").get<double>();
    if (v.contains("eps_schedule"))
      config.verify_schedule = v.at("eps_schedule").get<std::vector<double>>();
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  return config_from_json(read_json_file(path));
}

int cmd_solve(const RunConfig& config) {
  if (!validated(config)) return kExitConfig;
  Grid grid(config.n_cells);
  try {
    SolutionProfile profile = solve_truncated(config.spec, config.eps, grid, {}, config.solver);
    write_profile_csv(out_path(config, "solution.csv").string(), profile.u);
    write_json_file(out_path(config, "solution_meta.json").string(),
                    profile_meta_to_json(profile, config.solver));
    say(config, "solved eps=" + format_full(config.eps) + " K_p=" + format_full(profile.K_p) +
                    " picard_iters=" + std::to_string(profile.picard_iters) +
                    " residual=" + format_full(profile.final_residual_norm));
    return kExitOk;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "solver failed: %s\n", e.what());
    return kExitSolver;
  }
}

int cmd_sweep(const RunConfig& config) {
  if (!validated(config)) return kExitConfig;
  Grid grid(config.n_cells);
  ContinuationResult result = continuation_sweep(config.spec, config.eps_schedule, grid,
                                                 config.solver);
  for (std::size_t k = 0; k < result.profiles.size(); ++k) {
    char name[64];
    std::snprintf(name, sizeof(name), "profile_%02zu", k);
    write_profile_csv(out_path(config, std::string(name) + ".csv").string(),
                      result.profiles[k].u);
    write_json_file(out_path(config, std::string(name) + ".json").string(),
                    profile_meta_to_json(result.profiles[k], config.solver));
  }

  std::vector<std::vector<double>> error_rows;
  for (const ErrorEntry& e : result.errors_to_reference)
    error_rows.push_back({e.eps, e.l2_error, e.h1_error});
  write_table_csv(out_path(config, "errors.csv").string(), {"eps", "l2_error", "h1_error"},
                  error_rows);

  if (result.profiles.size() >= 2) {
    std::vector<std::vector<double>> energy_rows;
    for (const EnergyDecayEntry& e : energy_decay(result, config.spec))
      energy_rows.push_back({e.eps, e.energy, e.energy_gap});
    write_table_csv(out_path(config, "energies.csv").string(), {"eps", "energy", "gap"},
                    energy_rows);
  } else {
    write_table_csv(out_path(config, "energies.csv").string(), {"eps", "energy", "gap"}, {});
  }

  if (error_rows.size() >= 2) {
    std::vector<std::pair<double, double>> points;
    for (const ErrorEntry& e : result.errors_to_reference)
      points.emplace_back(e.eps, e.l2_error);
    RateFit fit = fit_rate(points);
    write_json_file(out_path(config, "rate.json").string(), rate_fit_to_json(fit));
    say(config, "rate slope=" + format_full(fit.slope) + " r2=" + format_full(fit.r_squared));
  }

  if (!result.complete) {
    std::fprintf(stderr, "sweep failed at eps=%s: %s\n",
                 format_full(result.failed_eps.value_or(0.0)).c_str(),
                 result.failure_message.c_str());
    return kExitSolver;
  }
  say(config, "sweep complete: " + std::to_string(result.profiles.size()) + " profiles");
  return kExitOk;
}

int cmd_rate(const RunConfig& config) {
  if (config.rate_points_path.empty()) {
    std::fprintf(stderr, "rate needs a points CSV (--points or config rate_points)\n");
    return kExitConfig;
  }
  auto [header, rows] = read_table_csv(config.rate_points_path);
  std::size_t err_col = 1;
  for (std::size_t c = 0; c < header.size(); ++c)
    if (header[c] == "err" || header[c] == "l2_error") err_col = c;
  std::vector<std::pair<double, double>> points;
  for (const auto& row : rows) points.emplace_back(row.at(0), row.at(err_col));
  RateFit fit = fit_rate(points);
  write_json_file(out_path(config, "rate.json").string(), rate_fit_to_json(fit));
  say(config, "slope=" + format_full(fit.slope) + " intercept=" + format_full(fit.intercept) +
                  " r2=" + format_full(fit.r_squared));
  return kExitOk;
}

int cmd_bounds(const RunConfig& config) {
  if (!validated(config)) return kExitConfig;
  Grid grid(config.n_cells);
  try {
    SolutionProfile profile = solve_truncated(config.spec, config.eps, grid, {}, config.solver);
    BoundaryFit left = fit_boundary(profile.u, Side::Left, config.fit_window);
    BoundaryFit right = fit_boundary(profile.u, Side::Right, config.fit_window);
    json j{{"eps", profile.eps},
           {"window", config.fit_window},
           {"left",
            {{"linear_slope", left.linear_slope},
             {"power_exponent", left.power_exponent},
             {"r_squared_linear", left.r_squared_linear}}},
           {"right",
            {{"linear_slope", right.linear_slope},
             {"power_exponent", right.power_exponent},
             {"r_squared_linear", right.r_squared_linear}}}};
    write_json_file(out_path(config, "bounds.json").string(), j);
    say(config, "left slope=" + format_full(left.linear_slope) +
                    " power=" + format_full(left.power_exponent) +
                    "; right slope=" + format_full(right.linear_slope) +
                    " power=" + format_full(right.power_exponent));
    return kExitOk;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "solver failed: %s\n", e.what());
    return kExitSolver;
  }
}

int cmd_energy(const RunConfig& config) {
  if (!validated(config)) return kExitConfig;
  Grid grid(config.n_cells);
  ContinuationResult result = continuation_sweep(config.spec, config.eps_schedule, grid,
                                                 config.solver);
  if (!result.complete) {
    std::fprintf(stderr, "sweep failed at eps=%s: %s\n",
                 format_full(result.failed_eps.value_or(0.0)).c_str(),
                 result.failure_message.c_str());
    return kExitSolver;
  }
  if (result.profiles.size() < 2) {
    std::fprintf(stderr, "energy needs a schedule with at least 2 entries\n");
    return kExitConfig;
  }
  std::vector<std::vector<double>> rows;
  for (const EnergyDecayEntry& e : energy_decay(result, config.spec)) {
    rows.push_back({e.eps, e.energy, e.energy_gap});
    say(config, "eps=" + format_full(e.eps) + " energy=" + format_full(e.energy) +
                    " gap=" + format_full(e.energy_gap));
  }
  write_table_csv(out_path(config, "energies.csv").string(), {"eps", "energy", "gap"}, rows);
  return kExitOk;
}

int cmd_exponents(const RunConfig& config) {
  if (!validated(config)) return kExitConfig;
  ExponentReport report = theoretical_exponents(config.spec, config.alpha_f, config.n_samples);
  write_json_file(out_path(config, "exponents.json").string(),
                  exponent_report_to_json(report));
  say(config, "mu1=" + format_full(report.mu1) +
                  (report.mu2 ? " mu2=" + format_full(*report.mu2) : " mu2=blow-up") +
                  (report.gamma_rate ? " gamma_rate=" + format_full(*report.gamma_rate)
                                     : " gamma_rate=n/a") +
                  " gamma_holder=" + format_full(report.gamma_holder));
  return kExitOk;
}

int cmd_compare(const RunConfig& config) {
  if (!validated(config)) return kExitConfig;
  Grid grid(config.n_cells);
  ProblemSpec spec2 = config.spec;
  if (config.compare_lambda) spec2.lambda = *config.compare_lambda;
  if (config.compare_f_shift) spec2.f = spec2.f.shifted(*config.compare_f_shift);
  try {
    OrderReport report = comparison_experiment(config.spec, spec2, config.eps, grid,
                                               config.solver);
    write_json_file(out_path(config, "compare.json").string(), order_report_to_json(report));
    say(config, std::string(report.holds ? "ordering holds" : "ordering violated") +
                    ", max violation " + format_full(report.max_violation));
    return report.holds ? kExitOk : kExitProperty;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "solver failed: %s\n", e.what());
    return kExitSolver;
  }
}

int cmd_verify(const RunConfig& config) {
  if (!validated(config)) return kExitConfig;
  Grid grid(config.n_cells);
  std::vector<PropertyResult> results;

  auto run = [&](const std::string& name, auto&& body) {
    PropertyResult r;
    r.name = name;
    try {
      body(r);
    } catch (const std::exception& e) {
      r.status = "error";
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  };

  run("comparison", [&](PropertyResult& r) {
    ProblemSpec low = config.spec, high = config.spec;
    low.lambda = config.verify_lambda_low;
    high.lambda = config.verify_lambda_high;
    OrderReport report = comparison_experiment(low, high, config.eps, grid, config.solver);
    r.metric = report.max_violation;
    r.status = report.holds ? "pass" : "fail";
    r.detail = "max ordering violation";
  });

  run("monotonicity", [&](PropertyResult& r) {
    OrderReport report =
        epsilon_monotonicity(config.spec, config.verify_schedule, grid, config.solver);
    r.metric = report.max_violation;
    r.status = report.holds ? "pass" : "fail";
    r.detail = "worst eps-pair violation";
  });

  run("stability", [&](PropertyResult& r) {
    std::vector<double> ratios;
    for (double c : {1e-1, 1e-2, 1e-3}) {
      ProblemSpec bumped = config.spec;
      bumped.f = bumped.f.shifted(c);
      ratios.push_back(
          stability_experiment(config.spec, bumped, config.eps, grid, config.solver).ratio);
    }
    double lo = *std::min_element(ratios.begin(), ratios.end());
    double hi = *std::max_element(ratios.begin(), ratios.end());
    r.metric = hi / lo;
    r.status = (lo > 0.0 && hi / lo <= 3.0) ? "pass" : "fail";
    r.detail = "spread of Lipschitz ratios across perturbation sizes";
  });

  run("symmetry", [&](PropertyResult& r) {
    ProblemSpec sym = config.spec;
    sym.p = ExponentField::constant(2.0);
    SolutionProfile profile = solve_truncated(sym, config.eps, grid, {}, config.solver);
    r.metric = linf_norm(subtract(profile.u, flipped(profile.u)));
    r.status = r.metric <= 1e-8 ? "pass" : "fail";
    r.detail = "|u(x) - u(1-x)| for constant p and symmetric forcing";
  });

  run("manufactured", [&](PropertyResult& r) {
    double coarse = manufactured_error(100, 0.01, 1.5, 0.1, 4.0, config.solver);
    double fine = manufactured_error(200, 0.01, 1.5, 0.1, 4.0, config.solver);
    r.metric = coarse / fine;
    r.status = (r.metric >= 3.2 && r.metric <= 4.8) ? "pass" : "fail";
    r.detail = "Linf error ratio N=100 vs N=200 against the exact profile";
  });

  run("renormalized", [&](PropertyResult& r) {
    SolutionProfile profile = solve_truncated(config.spec, config.eps, grid, {}, config.solver);
    RenormalizedCheck check = renormalized_check(profile, config.spec, config.test_function);
    r.metric = check.residual;
    r.status = check.residual <= 1e-6 * (1.0 + check.rhs) ? "pass" : "fail";
    r.detail = "identity residual vs 1e-6 (1 + |RHS|)";
  });

  bool all_pass = true;
  json entries = json::array();
  if (!config.quiet) std::printf("%-14s %-6s %s\n", "property", "status", "metric");
  for (const PropertyResult& r : results) {
    all_pass = all_pass && r.status == "pass";
    if (!config.quiet)
      std::printf("%-14s %-6s %.3e  (%s)\n", r.name.c_str(), r.status.c_str(), r.metric,
                  r.detail.c_str());
    entries.push_back({{"name", r.name},
                       {"status", r.status},
                       {"metric", r.metric},
                       {"detail", r.detail}});
  }
  write_json_file(out_path(config, "verify.json").string(),
                  json{{"properties", entries}, {"all_pass", all_pass}});
  return all_pass ? kExitOk : kExitProperty;
}

}  // namespace kirchhoff1d
