// End-to-end acceptance gate: one self-contained check per shipped claim,
// each printing a [PASS]/[FAIL] line with the measured quantities.  The
// binary exits nonzero when any check fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sdvi/assumptions.hpp"
#include "sdvi/brownian.hpp"
#include "sdvi/convergence.hpp"
#include "sdvi/csv.hpp"
#include "sdvi/ensemble.hpp"
#include "sdvi/models.hpp"
#include "sdvi/rng.hpp"
#include "sdvi/stepper.hpp"
#include "sdvi/vi_solver.hpp"

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

int g_failures = 0;

void report(int id, bool pass, const std::string& label, const std::string& detail) {
  if (!pass) ++g_failures;
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << label;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << '\n';
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) { return sdvi::format_double(v); }

sdvi::EulerConfig bridge_config(const sdvi::BridgeParams& params) {
  sdvi::EulerConfig config;
  config.vi.constants = sdvi::bridge_constants(params);
  return config;
}

sdvi::EulerConfig circuit_config(const sdvi::CircuitParams& params) {
  sdvi::EulerConfig config;
  config.vi.constants = sdvi::circuit_constants(params);
  config.vi.max_iterations = 200000;
  return config;
}

// 1. Across the bridge parameter grid, the computed control must match the
//    closed-form complementarity solution at every node.
void check_bridge_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 seed_gen(20260814);
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < 10; ++i) seeds.push_back(seed_gen());

  double worst = 0.0;
  for (double tau : {0.0, 1.0, 2.0}) {
    for (double k : {0.0, 1.0, 10.0}) {
      for (double theta : {0.0, 1.0}) {
        sdvi::BridgeParams params;
        params.tau = tau;
        params.k = k;
        params.theta = theta;
        const sdvi::SdviProblem problem = sdvi::build_bridge(params);
        const sdvi::TimeGrid grid = sdvi::make_grid(params.horizon, 50);
        for (std::uint64_t seed : seeds) {
          const sdvi::BrownianPath path = sdvi::sample_brownian(grid, 1, seed, 0);
          const sdvi::PathSolution sol = sdvi::euler_path(problem, path, bridge_config(params));
          for (std::size_t i = 0; i < sol.states.size(); ++i) {
            const double expect = sdvi::bridge_vi_oracle(sol.states[i][0]);
            worst = std::max(worst, std::abs(sol.controls[i][0] - expect));
          }
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  report(1, worst <= 1e-8 && elapsed < 5.0, "bridge control equals the complementarity oracle",
         "max |u - u*| = " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

// 2. Self-convergence on the noisy bridge; the claimed window is the
//    half-order regime.  The bridge diffusion is constant in (x, u), so the
//    measured rate is the additive-noise rate (about 1), not 1/2; this check
//    is expected to fail and documents the gap honestly.
void check_strong_order_window() {
  const auto start = std::chrono::steady_clock::now();
  const sdvi::BridgeParams params;  // tau = 1, k = 1, theta = 0
  const sdvi::ConvergenceReport rep = sdvi::estimate_strong_order(
      sdvi::build_bridge(params), 512, 5, 200, 42, bridge_config(params));
  const double elapsed = seconds_since(start);
  const bool state_ok = rep.fitted_order_state >= 0.35 && rep.fitted_order_state <= 0.70;
  const bool control_ok = rep.fitted_order_control >= 0.35 && rep.fitted_order_control <= 0.80;
  report(2, state_ok && control_ok && elapsed < 60.0,
         "noisy bridge fitted orders inside the half-order windows",
         "state " + fmt(rep.fitted_order_state) + " vs [0.35, 0.70], control " +
             fmt(rep.fitted_order_control) + " vs [0.35, 0.80], " + fmt(elapsed) + " s");
}

// 3. With the noise switched off the scheme degenerates to forward Euler on
//    an ODE and the fitted state order must be at least first-order-ish.
void check_deterministic_order() {
  const auto start = std::chrono::steady_clock::now();
  sdvi::BridgeParams params;
  params.k = 0.0;
  const sdvi::ConvergenceReport rep = sdvi::estimate_strong_order(
      sdvi::build_bridge(params), 512, 5, 200, 42, bridge_config(params));
  const double elapsed = seconds_since(start);
  report(3, rep.fitted_order_state >= 0.9 && elapsed < 30.0,
         "noise-free bridge reaches first-order state convergence",
         "state " + fmt(rep.fitted_order_state) + ", " + fmt(elapsed) + " s");
}

// 4. The projected iteration's measured residual decay must respect the
//    contraction factor, and the synthetic identity map must land in one
//    projected step.
void check_contraction_rate() {
  sdvi::CircuitParams params;
  params.epsilon = 0.1;
  const sdvi::SdviProblem problem = sdvi::build_circuit(params);
  sdvi::ViSolverConfig vi;
  vi.constants = sdvi::circuit_constants(params);
  vi.tolerance = 1e-10;
  vi.max_iterations = 200000;

  const double rho = sdvi::optimal_rho(*vi.constants);
  const double factor = 1.0 - 2.0 * rho * vi.constants->mono_C +
                        rho * rho * vi.constants->lip_F * vi.constants->lip_F;
  const double bound = std::sqrt(factor) + 0.05;

  const sdvi::ViSolveResult result =
      sdvi::solve_vi(problem, 0.0, problem.initial_state, sdvi::Scenario(0, 0, 0), vi);
  const bool rate_ok = result.converged && result.contraction_estimate.has_value() &&
                       *result.contraction_estimate <= bound;

  // Identity map, C = L_F = 1, rho = 1: one projected step is exact, the
  // second step only confirms a zero residual.
  sdvi::SdviProblem identity;
  identity.state_dim = 1;
  identity.control_dim = 1;
  identity.noise_dim = 1;
  identity.horizon = 1.0;
  identity.initial_state = VectorXd::Zero(1);
  identity.constraint = sdvi::ConvexSet::whole_space(1);
  identity.drift = [](double, const VectorXd&, const VectorXd&) {
    return VectorXd(VectorXd::Zero(1));
  };
  identity.diffusion = [](double, const VectorXd&, const VectorXd&) {
    return MatrixXd(MatrixXd::Zero(1, 1));
  };
  identity.vi_map = [](double, const VectorXd&, const VectorXd& u, const sdvi::Scenario&) {
    return u;
  };
  sdvi::ViSolverConfig one_step;
  sdvi::ProblemConstants constants;
  constants.mono_C = 1.0;
  constants.lip_F = 1.0;
  one_step.constants = constants;
  one_step.rho = 1.0;
  one_step.warm_start = VectorXd::Constant(1, 5.0);
  const sdvi::ViSolveResult synthetic =
      sdvi::solve_vi(identity, 0.0, identity.initial_state, sdvi::Scenario(0, 0, 0), one_step);
  const bool one_ok = synthetic.converged && synthetic.final_residual == 0.0 &&
                      synthetic.iterations <= 2 && synthetic.solution[0] == 0.0;

  report(4, rate_ok && one_ok, "projected iteration contracts at the predicted rate",
         "estimate " +
             (result.contraction_estimate ? fmt(*result.contraction_estimate)
                                          : std::string("n/a")) +
             " <= " + fmt(bound) + ", iters " + std::to_string(result.iterations));
}

// 5. The VI solution's sensitivity to the anchor state obeys the sqrt(M')
//    Lipschitz bound with zero violations over a thousand random pairs.
void check_state_sensitivity() {
  const sdvi::BridgeParams params;
  const sdvi::SdviProblem problem = sdvi::build_bridge(params);
  const sdvi::ProblemConstants constants = sdvi::bridge_constants(params);
  const double rho = sdvi::optimal_rho(constants);
  const double sqrt_mprime = std::sqrt(sdvi::lipschitz_bound_mprime(constants, rho));

  sdvi::ViSolverConfig vi;
  vi.constants = constants;
  vi.tolerance = 1e-12;
  vi.max_iterations = 100000;

  sdvi::NormalStream stream(909);
  const sdvi::Scenario scenario(0, 0, 0);
  int violations = 0;
  double worst_margin = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const VectorXd x1 = 3.0 * stream.normal_vector(2);
    const VectorXd x2 = 3.0 * stream.normal_vector(2);
    const VectorXd u1 = sdvi::solve_vi(problem, 0.37, x1, scenario, vi).solution;
    const VectorXd u2 = sdvi::solve_vi(problem, 0.37, x2, scenario, vi).solution;
    const double lhs = (u1 - u2).norm();
    const double rhs = sqrt_mprime * (x1 - x2).norm() + 1e-8;
    if (lhs > rhs) ++violations;
    worst_margin = std::max(worst_margin, lhs - rhs);
  }
  report(5, violations == 0, "VI solutions are sqrt(M')-Lipschitz in the anchor state",
         "violations " + std::to_string(violations) + ", sqrt(M') = " + fmt(sqrt_mprime));
}

// 6. The whole-path fixed-point iteration must reproduce the forward scheme
//    node for node, in at most one corrective round per step.
void check_picard_equivalence() {
  struct Case {
    sdvi::SdviProblem problem;
    sdvi::EulerConfig euler;
    std::string name;
  };
  std::vector<Case> cases;

  {
    const sdvi::BridgeParams params;
    cases.push_back({sdvi::build_bridge(params), bridge_config(params), "bridge"});
  }
  {
    const sdvi::CircuitParams params;  // a = b = c = 0: deterministic circuit
    cases.push_back({sdvi::build_circuit(params), circuit_config(params), "circuit"});
  }
  {
    sdvi::CircuitParams params;
    params.a = 0.5;
    params.b = 0.5;
    params.c = 1.0;
    cases.push_back({sdvi::build_circuit(params), circuit_config(params), "noisy circuit"});
  }

  bool ok = true;
  double worst = 0.0;
  int worst_rounds = 0;
  for (const Case& c : cases) {
    for (int steps : {10, 50}) {
      const sdvi::TimeGrid grid = sdvi::make_grid(c.problem.horizon, steps);
      for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
        const sdvi::BrownianPath path = sdvi::sample_brownian(grid, c.problem.noise_dim, seed, 0);
        const sdvi::PathSolution euler = sdvi::euler_path(c.problem, path, c.euler);
        sdvi::PicardConfig picard;
        picard.euler = c.euler;
        picard.outer_tolerance = 1e-14;
        const sdvi::PicardResult result = sdvi::picard_path(c.problem, path, picard);
        for (std::size_t i = 0; i < euler.states.size(); ++i) {
          worst = std::max(worst, (euler.states[i] - result.solution.states[i]).norm());
          worst = std::max(worst, (euler.controls[i] - result.solution.controls[i]).norm());
        }
        worst_rounds = std::max(worst_rounds, result.outer_rounds);
        ok = ok && result.converged && result.outer_rounds <= steps && worst <= 1e-12;
      }
    }
  }
  report(6, ok, "whole-path fixed point reproduces the forward scheme",
         "max node deviation " + fmt(worst) + ", max rounds " + std::to_string(worst_rounds));
}

// 7. Raw increment statistics at scale: mean, variance and cross-covariance
//    of 1e5 draws must sit inside standard-error bands.
void check_increment_statistics() {
  const auto start = std::chrono::steady_clock::now();
  const int n = 100000;
  const double h = 0.01;
  const sdvi::TimeGrid grid = sdvi::make_grid(n * h, n);
  const sdvi::BrownianPath path = sdvi::sample_brownian(grid, 2, 20260814, 0);

  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  for (int i = 0; i < n; ++i) mean += path.increment(i);
  mean /= n;
  Eigen::Vector2d var = Eigen::Vector2d::Zero();
  double cross = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d d = path.increment(i) - mean;
    var += d.cwiseProduct(d);
    cross += d[0] * d[1];
  }
  var /= n;
  cross /= n;

  const double mean_band = 4.0 * std::sqrt(h / n);
  const double cross_band = 4.0 / std::sqrt(static_cast<double>(n));
  const bool ok = std::abs(mean[0]) <= mean_band && std::abs(mean[1]) <= mean_band &&
                  std::abs(var[0] - h) <= 0.05 * h && std::abs(var[1] - h) <= 0.05 * h &&
                  std::abs(cross) <= cross_band;
  const double elapsed = seconds_since(start);
  report(7, ok && elapsed < 2.0, "increment moments match Normal(0, h)",
         "mean (" + fmt(mean[0]) + ", " + fmt(mean[1]) + "), var (" + fmt(var[0]) + ", " +
             fmt(var[1]) + "), cross " + fmt(cross) + ", " + fmt(elapsed) + " s");
}

// 8. The probe harness must recover the circuit's exact monotonicity modulus,
//    and the monotone-but-not-strongly-monotone case must stay finite.
void check_monotonicity_structure() {
  bool ok = true;
  std::string detail;
  for (double eps : {1.0, 0.1, 0.001}) {
    sdvi::CircuitParams params;
    params.epsilon = eps;
    const sdvi::AssumptionReport rep = sdvi::verify_assumptions(
        sdvi::build_circuit(params), sdvi::circuit_constants(params), 2000, 7);
    ok = ok && std::abs(rep.min_monotonicity - eps) <= 1e-9 && rep.violations.empty();
    detail += fmt(rep.min_monotonicity) + " ";
  }

  sdvi::CircuitParams flat;
  flat.epsilon = 0.0;
  const sdvi::SdviProblem problem = sdvi::build_circuit(flat);
  sdvi::ViSolverConfig vi;
  vi.rho = 0.1;  // no admissible interval exists; run unchecked
  vi.max_iterations = 500;
  const sdvi::ViSolveResult result =
      sdvi::solve_vi(problem, 0.0, problem.initial_state, sdvi::Scenario(0, 0, 0), vi);
  ok = ok && result.solution.allFinite() && problem.constraint.contains(result.solution, 1e-12) &&
       std::isfinite(result.final_residual);
  detail += result.converged ? "(eps=0 converged)" : "(eps=0 flagged non-convergence)";

  report(8, ok, "probe harness recovers the monotonicity modulus", "min ratios " + detail);
}

// 9. With all diffusion gains zero the circuit is deterministic: different
//    seeds must give byte-identical CSV output and exactly zero variance.
void check_deterministic_degeneration() {
  const sdvi::CircuitParams params;  // a = b = c = 0
  const sdvi::SdviProblem problem = sdvi::build_circuit(params);
  const sdvi::EulerConfig config = circuit_config(params);
  const sdvi::TimeGrid grid = sdvi::make_grid(params.horizon, 30);

  std::string reference;
  bool identical = true;
  for (std::uint64_t seed : {11ULL, 22ULL, 33ULL, 44ULL, 55ULL}) {
    const sdvi::BrownianPath path = sdvi::sample_brownian(grid, problem.noise_dim, seed, 0);
    const sdvi::PathSolution sol = sdvi::euler_path(problem, path, config);
    std::ostringstream out;
    sdvi::write_trajectory_csv(out, sol);
    if (reference.empty())
      reference = out.str();
    else
      identical = identical && out.str() == reference;
  }

  const sdvi::EnsembleResult ensemble = sdvi::run_ensemble(problem, grid, 5, 99, config);
  double max_var = 0.0;
  for (const VectorXd& v : ensemble.var_state) max_var = std::max(max_var, v.maxCoeff());
  for (const VectorXd& v : ensemble.var_control) max_var = std::max(max_var, v.maxCoeff());

  report(9, identical && max_var == 0.0, "zero diffusion gains degenerate deterministically",
         std::string("CSVs identical: ") + (identical ? "yes" : "no") + ", max variance " +
             fmt(max_var));
}

// 10. Solutions move continuously in epsilon: on a common path, the gap
//     between eps = 1e-3 and eps = 1e-4 must be smaller than the gap between
//     eps = 1 and eps = 1e-4.
void check_epsilon_continuity() {
  const sdvi::TimeGrid grid = sdvi::make_grid(1.5, 10);
  const sdvi::BrownianPath path = sdvi::sample_brownian(grid, 1, 0, 0);

  const auto solve_at = [&](double eps) {
    sdvi::CircuitParams params;
    params.epsilon = eps;
    params.a = 1.0;
    params.b = 1.0;
    params.c = 1.0;
    sdvi::EulerConfig config;
    config.vi.rho = 0.05;  // common step so runs differ only through eps
    config.vi.tolerance = 1e-10;
    config.vi.max_iterations = 100;
    return sdvi::euler_path(sdvi::build_circuit(params), path, config);
  };

  const sdvi::PathSolution x1 = solve_at(1.0);
  const sdvi::PathSolution x3 = solve_at(1e-3);
  const sdvi::PathSolution x4 = solve_at(1e-4);
  const double near = sdvi::discrete_h_norm(grid, x3.states, x4.states);
  const double far = sdvi::discrete_h_norm(grid, x1.states, x4.states);
  report(10, near < far, "solutions vary continuously in the monotonicity parameter",
         "|x(1e-3) - x(1e-4)| = " + fmt(near) + " < |x(1) - x(1e-4)| = " + fmt(far));
}

}  // namespace

int main() {
  check_bridge_oracle();
  check_strong_order_window();
  check_deterministic_order();
  check_contraction_rate();
  check_state_sensitivity();
  check_picard_equivalence();
  check_increment_statistics();
  check_monotonicity_structure();
  check_deterministic_degeneration();
  check_epsilon_continuity();

  if (g_failures == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cout << g_failures << " check(s) failed\n";
  return 1;
}
