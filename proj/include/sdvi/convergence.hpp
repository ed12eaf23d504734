#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sdvi/ensemble.hpp"
#include "sdvi/time_grid.hpp"

namespace sdvi {

/// Discrete path norm sqrt(h * sum_{i=0}^{N-1} ||a(t_i) - b(t_i)||^2): a
/// left-endpoint Riemann sum over [0, horizon], exact for the piecewise
/// constant control interpolation.  Both trajectories must carry
/// grid.num_steps + 1 entries of equal dimension.
double discrete_h_norm(const TimeGrid& grid, const std::vector<Eigen::VectorXd>& a,
                       const std::vector<Eigen::VectorXd>& b);

/// Keeps every factor-th entry of a node trajectory (fine node i*factor
/// becomes coarse node i); the last node is kept.  Throws unless factor >= 1
/// divides the fine step count.
std::vector<Eigen::VectorXd> restrict_to_coarse(const std::vector<Eigen::VectorXd>& fine,
                                                int factor);

/// Self-convergence study summary.  step_sizes is decreasing; errors_* align
/// with it.  Fitted orders are ordinary least-squares slopes of log error
/// against log step; an order is NaN when some level's error is exactly zero
/// (log undefined), which happens for degenerate problems.
struct ConvergenceReport {
  std::vector<double> step_sizes;
  std::vector<double> errors_state;
  std::vector<double> errors_control;
  double fitted_order_state{0.0};
  double fitted_order_control{0.0};
  int num_paths{0};
  std::uint64_t seed{0};
};

/// Strong-order estimate by coupled self-convergence: per sample path, draw
/// the Brownian path on the fine grid (fine_steps steps), integrate there as
/// the reference, then for each level j = 1..levels integrate on the grid
/// coarsened by 2^j from the same increments (coarsen) and measure the
/// discrete norm of the difference at coarse nodes, for states and controls.
/// Level errors are root-mean-squares over paths; orders are log-log OLS
/// slopes.  Requires fine_steps divisible by 2^levels, levels >= 2 and
/// num_paths >= 30.  Identical inputs give identical reports.
ConvergenceReport estimate_strong_order(const SdviProblem& problem, int fine_steps, int levels,
                                        int num_paths, std::uint64_t seed,
                                        const EulerConfig& config,
                                        Execution exec = Execution::kParallel);

/// JSON rendering with exactly the report's fields; doubles use shortest
/// round-trip decimals, NaN serializes as null.
std::string report_to_json(const ConvergenceReport& report);

}  // namespace sdvi
