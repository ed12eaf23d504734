// Command-line front end: simulate sample paths, aggregate ensembles, run
// self-convergence studies, or probe a problem's claimed regularity.
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 I/O failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdvi/assumptions.hpp"
#include "sdvi/brownian.hpp"
#include "sdvi/convergence.hpp"
#include "sdvi/csv.hpp"
#include "sdvi/ensemble.hpp"
#include "sdvi/models.hpp"
#include "sdvi/stepper.hpp"

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string problem;  // circuit | bridge
  // circuit parameters
  double epsilon = 0.1, a = 0.0, b = 0.0, c = 0.0;
  // bridge parameters
  double tau = 1.0, k = 1.0, theta = 0.0;
  std::optional<double> horizon;

  int steps = 50;
  int paths = 1;
  std::uint64_t seed = 0;
  std::string out_dir = ".";

  double vi_tol = 1e-10;
  int vi_max_iter = 10000;
  std::optional<double> rho;

  int fine_steps = 512;
  int levels = 5;
  int samples = 2000;

  bool keep_paths = false;
  bool serial = false;
  bool strict = false;
};

struct BuiltProblem {
  sdvi::SdviProblem problem;
  std::optional<sdvi::ProblemConstants> constants;
};

BuiltProblem build_problem(const Options& opt) {
  BuiltProblem built;
  if (opt.problem == "circuit") {
    sdvi::CircuitParams p;
    p.epsilon = opt.epsilon;
    p.a = opt.a;
    p.b = opt.b;
    p.c = opt.c;
    if (opt.horizon) p.horizon = *opt.horizon;
    built.problem = sdvi::build_circuit(p);
    built.constants = sdvi::circuit_constants(p);
  } else if (opt.problem == "bridge") {
    sdvi::BridgeParams p;
    p.tau = opt.tau;
    p.k = opt.k;
    p.theta = opt.theta;
    if (opt.horizon) p.horizon = *opt.horizon;
    built.problem = sdvi::build_bridge(p);
    built.constants = sdvi::bridge_constants(p);
  } else {
    throw CLI::ValidationError("--problem must be 'circuit' or 'bridge'");
  }
  return built;
}

// Assembles the VI configuration.  An explicit --rho runs unchecked (no
// constants attached) so experiments outside the admissible interval are
// possible; that is recorded as a warning.
sdvi::EulerConfig make_config(const Options& opt, const BuiltProblem& built,
                              std::vector<std::string>& warnings) {
  sdvi::EulerConfig config;
  config.vi.tolerance = opt.vi_tol;
  config.vi.max_iterations = opt.vi_max_iter;
  if (opt.rho) {
    config.vi.rho = *opt.rho;
    warnings.push_back("rho = " + sdvi::format_double(*opt.rho) +
                       " supplied explicitly; admissibility not checked");
  } else if (built.constants) {
    config.vi.constants = built.constants;
  } else {
    throw CLI::ValidationError(
        "this problem has no usable constants (epsilon <= 0); supply --rho");
  }
  return config;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fs::filesystem_error("cannot open for writing", path, std::error_code());
  return out;
}

std::string path_file_name(std::uint64_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "path_%04llu.csv", static_cast<unsigned long long>(index));
  return buf;
}

void flush_diagnostics(const fs::path& dir, const std::vector<std::string>& warnings) {
  if (warnings.empty()) return;
  std::ofstream out = open_output(dir / "diagnostics.txt");
  for (const std::string& w : warnings) out << "warning: " << w << '\n';
  std::cout << "wrote " << (dir / "diagnostics.txt").string() << " (" << warnings.size()
            << " warning(s))\n";
}

void note_nonconvergence(const sdvi::PathSolution& sol, std::vector<std::string>& warnings) {
  for (int node : sol.nonconverged_nodes)
    warnings.push_back("VI did not converge: path " + std::to_string(sol.path_index) + " node " +
                       std::to_string(node));
}

int run(const Options& opt, const std::string& mode) {
  const BuiltProblem built = build_problem(opt);
  std::vector<std::string> warnings;

  const fs::path out_dir(opt.out_dir);
  fs::create_directories(out_dir);
  const sdvi::Execution exec = opt.serial ? sdvi::Execution::kSerial : sdvi::Execution::kParallel;

  if (mode == "verify") {
    const sdvi::AssumptionReport report = sdvi::verify_assumptions(
        built.problem, built.constants, opt.samples, opt.seed);
    std::ofstream out = open_output(out_dir / "verify.txt");
    out << sdvi::format_report(report);
    std::cout << "wrote " << (out_dir / "verify.txt").string() << '\n';
    std::cout << sdvi::format_report(report);
    return report.violations.empty() ? 0 : 3;
  }

  const sdvi::EulerConfig config = make_config(opt, built, warnings);
  const sdvi::TimeGrid grid = sdvi::make_grid(built.problem.horizon, opt.steps);

  if (mode == "simulate") {
    for (int k = 0; k < opt.paths; ++k) {
      const sdvi::BrownianPath path = sdvi::sample_brownian(
          grid, built.problem.noise_dim, opt.seed, static_cast<std::uint64_t>(k));
      const sdvi::PathSolution sol = sdvi::euler_path(built.problem, path, config);
      note_nonconvergence(sol, warnings);
      const fs::path file = out_dir / path_file_name(sol.path_index);
      std::ofstream out = open_output(file);
      sdvi::write_trajectory_csv(out, sol);
      std::cout << "wrote " << file.string() << '\n';
    }
  } else if (mode == "ensemble") {
    const sdvi::EnsembleResult result = sdvi::run_ensemble(
        built.problem, grid, opt.paths, opt.seed, config, exec, opt.keep_paths);
    if (result.total_nonconverged > 0)
      warnings.push_back("VI did not converge at " + std::to_string(result.total_nonconverged) +
                         " node(s) across the ensemble");
    std::ofstream out = open_output(out_dir / "ensemble.csv");
    sdvi::write_ensemble_csv(out, result);
    std::cout << "wrote " << (out_dir / "ensemble.csv").string() << '\n';
    if (opt.keep_paths) {
      for (const sdvi::PathSolution& sol : result.paths) {
        const fs::path file = out_dir / path_file_name(sol.path_index);
        std::ofstream pout = open_output(file);
        sdvi::write_trajectory_csv(pout, sol);
      }
      std::cout << "wrote " << result.paths.size() << " per-path file(s)\n";
    }
  } else if (mode == "converge") {
    const sdvi::ConvergenceReport report = sdvi::estimate_strong_order(
        built.problem, opt.fine_steps, opt.levels, opt.paths, opt.seed, config, exec);
    std::ofstream out = open_output(out_dir / "convergence.json");
    out << sdvi::report_to_json(report);
    std::cout << "wrote " << (out_dir / "convergence.json").string() << '\n';
    std::cout << "fitted_order_state = " << sdvi::format_double(report.fitted_order_state)
              << ", fitted_order_control = " << sdvi::format_double(report.fitted_order_control)
              << '\n';
  } else {
    throw CLI::ValidationError("unknown mode: " + mode);
  }

  flush_diagnostics(out_dir, warnings);
  if (opt.strict && !warnings.empty()) {
    std::cerr << "error: warnings present under --strict\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator for stochastic differential systems with pointwise "
               "variational-inequality constraints"};
  app.fallthrough();
  Options opt;

  app.add_option("--problem", opt.problem, "Problem to run: circuit | bridge")->required();
  app.add_option("--epsilon", opt.epsilon, "circuit: monotonicity parameter");
  app.add_option("--a", opt.a, "circuit: diffusion state gain");
  app.add_option("--b", opt.b, "circuit: diffusion control gain");
  app.add_option("--c", opt.c, "circuit: diffusion forcing gain");
  app.add_option("--tau", opt.tau, "bridge: damping coefficient");
  app.add_option("--k", opt.k, "bridge: noise amplitude");
  app.add_option("--theta", opt.theta, "bridge: initial velocity");
  app.add_option("--horizon", opt.horizon, "override the problem's time horizon");
  app.add_option("--steps", opt.steps, "grid steps")->check(CLI::PositiveNumber);
  app.add_option("--paths", opt.paths, "number of sample paths")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "ensemble seed");
  app.add_option("--out", opt.out_dir, "output directory")->envname("SDVI_OUT_DIR");
  app.add_option("--vi-tol", opt.vi_tol, "VI stopping tolerance")->check(CLI::PositiveNumber);
  app.add_option("--vi-max-iter", opt.vi_max_iter, "VI iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--rho", opt.rho, "explicit VI step size (skips admissibility checks)");
  app.add_option("--fine-steps", opt.fine_steps, "converge: fine grid steps")
      ->check(CLI::PositiveNumber);
  app.add_option("--levels", opt.levels, "converge: refinement levels")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", opt.samples, "verify: probe count")->check(CLI::PositiveNumber);
  app.add_flag("--keep-paths", opt.keep_paths, "ensemble: also write per-path CSVs");
  app.add_flag("--serial", opt.serial, "disable parallel path execution");
  app.add_flag("--strict", opt.strict, "treat warnings as errors (exit 3)");
  app.set_config("--config", "", "flat key=value configuration file; flags take precedence");

  auto* simulate = app.add_subcommand("simulate", "integrate sample paths and write CSVs");
  auto* ensemble = app.add_subcommand("ensemble", "aggregate node statistics over many paths");
  auto* converge = app.add_subcommand("converge", "self-convergence study across refinements");
  auto* verify = app.add_subcommand("verify", "probe Lipschitz/growth/monotonicity claims");
  for (CLI::App* sub : {simulate, ensemble, converge, verify}) sub->fallthrough();
  app.require_subcommand(1);

  std::string mode;
  try {
    app.parse(argc, argv);
    if (simulate->parsed()) mode = "simulate";
    if (ensemble->parsed()) mode = "ensemble";
    if (converge->parsed()) mode = "converge";
    if (verify->parsed()) mode = "verify";
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(opt, mode);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 4;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  }
}
