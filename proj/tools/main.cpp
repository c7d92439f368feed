#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kirchhoff1d/cli.hpp"

using namespace kirchhoff1d;

int main(int argc, char** argv) {
  CLI::App app{"one-dimensional singular Kirchhoff boundary-value solver"};
  app.require_subcommand(1);

  std::string config_path, out_dir, points_path;
  int n_cells = 0;
  bool quiet = false;
  double eps = 0.0, window = 0.0, alpha_f = 0.0;
  double lambda2 = 0.0, f_shift = 0.0;

  app.add_option("--config", config_path, "JSON configuration document");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--grid", n_cells, "number of grid cells");
  app.add_flag("--quiet", quiet, "suppress progress output");

  CLI::App* solve = app.add_subcommand("solve", "solve at one truncation level");
  solve->add_option("--eps", eps, "truncation parameter");

  CLI::App* sweep = app.add_subcommand("sweep", "continuation over the eps schedule");

  CLI::App* rate = app.add_subcommand("rate", "log-log rate fit of an (eps, err) table");
  rate->add_option("--points", points_path, "CSV with columns eps and err (or l2_error)");

  CLI::App* bounds = app.add_subcommand("bounds", "boundary asymptotics fit");
  bounds->add_option("--eps", eps, "truncation parameter");
  bounds->add_option("--window", window, "fit window adjacent to the boundary");

  CLI::App* energy = app.add_subcommand("energy", "energy decay along the eps schedule");

  CLI::App* exponents = app.add_subcommand("exponents", "theoretical exponent report");
  exponents->add_option("--alpha-f", alpha_f, "Hoelder exponent of the forcing data");

  CLI::App* compare = app.add_subcommand("compare", "ordered-data comparison experiment");
  compare->add_option("--eps", eps, "truncation parameter");
  compare->add_option("--lambda2", lambda2, "reaction weight of the second problem");
  compare->add_option("--f-shift", f_shift, "nonnegative constant added to the second forcing");

  CLI::App* verify = app.add_subcommand("verify", "run the full property suite");
  verify->add_option("--eps", eps, "truncation parameter");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig config = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (n_cells > 0) config.n_cells = n_cells;
    if (quiet) config.quiet = true;
    if (solve->count("--eps") || bounds->count("--eps") || compare->count("--eps") ||
        verify->count("--eps"))
      config.eps = eps;
    if (rate->count("--points")) config.rate_points_path = points_path;
    if (bounds->count("--window")) config.fit_window = window;
    if (exponents->count("--alpha-f")) config.alpha_f = alpha_f;
    if (compare->count("--lambda2")) config.compare_lambda = lambda2;
    if (compare->count("--f-shift")) config.compare_f_shift = f_shift;

    if (app.got_subcommand(solve)) return cmd_solve(config);
    if (app.got_subcommand(sweep)) return cmd_sweep(config);
    if (app.got_subcommand(rate)) return cmd_rate(config);
    if (app.got_subcommand(bounds)) return cmd_bounds(config);
    if (app.got_subcommand(energy)) return cmd_energy(config);
    if (app.got_subcommand(exponents)) return cmd_exponents(config);
    if (app.got_subcommand(compare)) return cmd_compare(config);
    if (app.got_subcommand(verify)) return cmd_verify(config);
    return kExitConfig;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "solver failed: %s\n", e.what());
    return kExitSolver;
  } catch (const LinearSolveError& e) {
    std::fprintf(stderr, "solver failed: %s\n", e.what());
    return kExitSolver;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
}
