#pragma once

#include <Eigen/Core>

#include "sdvi/brownian.hpp"
#include "sdvi/path_solution.hpp"
#include "sdvi/problem.hpp"
#include "sdvi/vi_solver.hpp"

namespace sdvi {

struct EulerConfig {
  ViSolverConfig vi;
  /// When true the solution may be evaluated between nodes (see
  /// interpolate_state); interpolant_substeps is the nominal per-step
  /// resolution recorded with the path.
  bool record_interpolant{false};
  int interpolant_substeps{1};
};

/// Forward scheme on the path's grid: at each node solve the VI at
/// (t_i, x_h(t_i)) for u_h(t_i), then advance
///   x_h(t_{i+1}) = x_h(t_i) + f(t_i, x_h, u_h) h + g(t_i, x_h, u_h) dB_i.
/// The VI at node i warm-starts from u_h(t_{i-1}); at t_0 the configured
/// warm start (projected into K) seeds the solve, which always runs.  The VI
/// is solved at every node including t_N, so controls align with states.
/// A non-finite state aborts with std::runtime_error naming the node; VI
/// non-convergence is recorded in nonconverged_nodes and the run continues.
PathSolution euler_path(const SdviProblem& problem, const BrownianPath& path,
                        const EulerConfig& config);

/// Value of the continuous interpolant at time t in [0, horizon]:
///   x_h(t) = x_h(t_i) + f(t_i, x_h, u_h) (t - t_i) + g(t_i, x_h, u_h) (B_t - B_{t_i})
/// on [t_i, t_{i+1}), where B_t - B_{t_i} = sqrt((t - t_i)/h) * dB_i, the
/// step's own increment rescaled to the elapsed fraction (continuous at both
/// endpoints, no extra randomness).  Grid nodes return the stored state; any
/// other t requires the solution to have been produced with
/// record_interpolant = true, otherwise std::invalid_argument is thrown.
Eigen::VectorXd interpolate_state(const PathSolution& solution, const SdviProblem& problem,
                                  const BrownianPath& path, double t);

struct PicardConfig {
  EulerConfig euler;
  double outer_tolerance{1e-12};
  /// Outer round cap; <= 0 means 2 * num_steps.  The fixed point is reached
  /// in at most num_steps corrective rounds because node i is exact once all
  /// earlier nodes are, so the cap only guards pathological configurations.
  int max_outer{0};
};

struct PicardResult {
  PathSolution solution;
  /// Rounds that changed the state by more than outer_tolerance.  One final
  /// confirming round (not counted) detects the fixed point.
  int outer_rounds{0};
  bool converged{false};
};

/// Whole-path fixed-point iteration on a frozen Brownian path: start from
/// x ≡ initial_state, and per round solve the VI at every node against the
/// current state iterate, then rebuild states by cumulative sums
///   x(t_i) = x0 + sum_{k<i} [ f(t_k, x(t_k), u(t_k)) h + g(t_k, x(t_k), u(t_k)) dB_k ].
/// Rounds stop when the max node-wise state change is <= outer_tolerance.
/// Within a round the VI warm start chains node to node exactly as in
/// euler_path, and the cumulative sums accumulate in euler_path's order, so
/// the fixed point coincides with euler_path on the same path bit for bit;
/// node i is exact after i corrective rounds.
PicardResult picard_path(const SdviProblem& problem, const BrownianPath& path,
                         const PicardConfig& config);

}  // namespace sdvi
