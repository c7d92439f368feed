#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kirchhoff1d/analysis.hpp"
#include "kirchhoff1d/io.hpp"
#include "kirchhoff1d/problem.hpp"
#include "kirchhoff1d/solver.hpp"

namespace kirchhoff1d {

// Exit-code contract, fixed for CI use.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitSolver = 2;
inline constexpr int kExitProperty = 3;

/**
 * Everything a command needs: the problem instance, grid and truncation
 * choices, solver options, output directory and the command-specific
 * knobs.  Defaults reproduce the reference experiment (N = 400,
 * eps = 1e-3, schedule 1e-1 .. 1e-5).
 */
struct RunConfig {
  ProblemSpec spec = default_spec();
  int n_cells = 400;
  double eps = 1e-3;
  std::vector<double> eps_schedule{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  SolverOptions solver;
  std::string out_dir = ".";
  bool quiet = false;

  double fit_window = 0.05;                               // bounds command
  TestFunction test_function = TestFunction::bump(0.05, 0.15);  // verify / renormalized check
  double alpha_f = 1.0;                                   // exponents command
  int n_samples = 1001;
  std::string rate_points_path;                           // rate command input CSV

  std::optional<double> compare_lambda;   // compare command: second spec overrides
  std::optional<double> compare_f_shift;

  double verify_lambda_low = 0.05;        // verify command data pair
  double verify_lambda_high = 0.1;
  std::vector<double> verify_schedule{1e-1, 1e-2, 1e-3};
};

/// Apply a JSON configuration document on top of the defaults.
RunConfig config_from_json(const json& j);
RunConfig load_config(const std::string& path);

int cmd_solve(const RunConfig& config);
int cmd_sweep(const RunConfig& config);
int cmd_rate(const RunConfig& config);
int cmd_bounds(const RunConfig& config);
int cmd_energy(const RunConfig& config);
int cmd_exponents(const RunConfig& config);
int cmd_compare(const RunConfig& config);
int cmd_verify(const RunConfig& config);

}  // namespace kirchhoff1d
