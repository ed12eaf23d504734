#include "sdvi/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdvi {
namespace {

void check_path(const SdviProblem& problem, const BrownianPath& path) {
  validate_problem(problem);
  if (path.noise_dim != problem.noise_dim)
    throw std::invalid_argument("path noise dimension != problem noise_dim");
  if (path.increments.cols() != path.grid.num_steps)
    throw std::invalid_argument("path increments do not match its grid");
  if (std::abs(path.grid.horizon - problem.horizon) >
      1e-12 * std::max(1.0, std::abs(problem.horizon)))
    throw std::invalid_argument("path horizon != problem horizon");
}

void check_state_finite(const Eigen::VectorXd& x, int node) {
  if (!x.allFinite())
    throw std::runtime_error("stepper: non-finite state at node " + std::to_string(node));
}

}  // namespace

PathSolution euler_path(const SdviProblem& problem, const BrownianPath& path,
                        const EulerConfig& config) {
  check_path(problem, path);
  if (config.record_interpolant && config.interpolant_substeps < 1)
    throw std::invalid_argument("euler_path: interpolant_substeps must be >= 1");

  const TimeGrid& grid = path.grid;
  const int n_steps = grid.num_steps;

  PathSolution sol;
  sol.grid = grid;
  sol.seed = path.seed;
  sol.path_index = path.path_index;
  sol.interpolant_substeps = config.record_interpolant ? config.interpolant_substeps : 0;
  sol.states.reserve(static_cast<std::size_t>(n_steps) + 1);
  sol.controls.reserve(static_cast<std::size_t>(n_steps) + 1);
  sol.vi_iterations.reserve(static_cast<std::size_t>(n_steps) + 1);

  Eigen::VectorXd x = problem.initial_state;
  ViSolverConfig vi = config.vi;  // warm start is rewritten node to node

  for (int i = 0; i <= n_steps; ++i) {
    check_state_finite(x, i);
    const double t = grid.node(i);
    const Scenario scenario(path.seed, path.path_index, i);
    ViSolveResult r = solve_vi(problem, t, x, scenario, vi);
    if (!r.converged) sol.nonconverged_nodes.push_back(i);
    sol.vi_iterations.push_back(r.iterations);
    vi.warm_start = r.solution;

    sol.states.push_back(std::move(x));
    sol.controls.push_back(std::move(r.solution));

    if (i < n_steps) {
      const Eigen::VectorXd& xi = sol.states.back();
      const Eigen::VectorXd& u = sol.controls.back();
      const Eigen::VectorXd f = problem.drift(t, xi, u);
      const Eigen::MatrixXd g = problem.diffusion(t, xi, u);
      if (f.size() != problem.state_dim || g.rows() != problem.state_dim ||
          g.cols() != problem.noise_dim)
        throw std::invalid_argument("euler_path: coefficient output has wrong shape");
      x = xi + f * grid.step + g * path.increments.col(i);
    }
  }
  return sol;
}

Eigen::VectorXd interpolate_state(const PathSolution& solution, const SdviProblem& problem,
                                  const BrownianPath& path, double t) {
  const TimeGrid& grid = solution.grid;
  if (!(grid == path.grid))
    throw std::invalid_argument("interpolate_state: solution and path grids differ");
  const double tol = 1e-12 * std::max(1.0, std::abs(grid.horizon));
  if (t < -tol || t > grid.horizon + tol)
    throw std::invalid_argument("interpolate_state: t outside [0, horizon]");

  // Exact node hits return the stored state.
  const double pos = t / grid.step;
  const int nearest = static_cast<int>(std::lround(pos));
  if (nearest >= 0 && nearest <= grid.num_steps && std::abs(t - grid.node(nearest)) <= tol)
    return solution.states[static_cast<std::size_t>(nearest)];

  if (solution.interpolant_substeps <= 0)
    throw std::invalid_argument(
        "interpolate_state: off-node time but the solution was produced without "
        "record_interpolant");

  int i = static_cast<int>(std::floor(pos));
  i = std::max(0, std::min(i, grid.num_steps - 1));
  const double ti = grid.node(i);
  const double dt = t - ti;
  const Eigen::VectorXd& x = solution.states[static_cast<std::size_t>(i)];
  const Eigen::VectorXd& u = solution.controls[static_cast<std::size_t>(i)];
  // B_t - B_{t_i} = sqrt(dt / h) * dB_i: the step's increment rescaled to the
  // elapsed fraction, continuous at both step endpoints.
  const double frac = std::sqrt(dt / grid.step);
  return x + problem.drift(ti, x, u) * dt +
         problem.diffusion(ti, x, u) * (frac * path.increments.col(i));
}

PicardResult picard_path(const SdviProblem& problem, const BrownianPath& path,
                         const PicardConfig& config) {
  check_path(problem, path);
  // Zero is allowed: the iteration then runs to its exact fixed point, which
  // it reaches after at most num_steps corrective rounds.
  if (!(config.outer_tolerance >= 0.0))
    throw std::invalid_argument("picard_path: outer_tolerance must be nonnegative");

  const TimeGrid& grid = path.grid;
  const int n_steps = grid.num_steps;
  const int max_outer = config.max_outer > 0 ? config.max_outer : 2 * n_steps;
  const std::size_t n_nodes = static_cast<std::size_t>(n_steps) + 1;

  std::vector<Eigen::VectorXd> states(n_nodes, problem.initial_state);

  // One VI pass over all nodes against the frozen state iterate.  The warm
  // start chains node to node exactly as in euler_path, so once the states
  // reach the Euler recursion the controls reproduce euler_path's bit for
  // bit (and the sweep becomes idempotent, which is what the convergence
  // check detects).
  const auto vi_sweep = [&](PathSolution* diagnostics) {
    std::vector<Eigen::VectorXd> controls(n_nodes);
    ViSolverConfig vi = config.euler.vi;
    for (int i = 0; i <= n_steps; ++i) {
      const Scenario scenario(path.seed, path.path_index, i);
      ViSolveResult r =
          solve_vi(problem, grid.node(i), states[static_cast<std::size_t>(i)], scenario, vi);
      vi.warm_start = r.solution;
      if (diagnostics) {
        if (!r.converged) diagnostics->nonconverged_nodes.push_back(i);
        diagnostics->vi_iterations.push_back(r.iterations);
      }
      controls[static_cast<std::size_t>(i)] = std::move(r.solution);
    }
    return controls;
  };

  PicardResult result;
  for (int round = 1; round <= max_outer; ++round) {
    const std::vector<Eigen::VectorXd> controls = vi_sweep(nullptr);

    // Cumulative sums with coefficients at the frozen states and controls of
    // this round; the accumulation order matches euler_path's update.
    std::vector<Eigen::VectorXd> next_states(n_nodes);
    next_states[0] = problem.initial_state;
    Eigen::VectorXd x = problem.initial_state;
    double max_change = 0.0;
    for (int i = 0; i < n_steps; ++i) {
      const Eigen::VectorXd& x_old = states[static_cast<std::size_t>(i)];
      const Eigen::VectorXd& u = controls[static_cast<std::size_t>(i)];
      const double t = grid.node(i);
      x = x + problem.drift(t, x_old, u) * grid.step +
          problem.diffusion(t, x_old, u) * path.increments.col(i);
      check_state_finite(x, i + 1);
      next_states[static_cast<std::size_t>(i) + 1] = x;
      max_change =
          std::max(max_change, (x - states[static_cast<std::size_t>(i) + 1]).norm());
    }
    states = std::move(next_states);

    if (max_change <= config.outer_tolerance) {
      result.converged = true;
      break;
    }
    ++result.outer_rounds;
  }

  // Final VI sweep so the reported controls and diagnostics correspond to the
  // final states (the in-loop sweeps ran against pre-update states).
  PathSolution sol;
  sol.grid = grid;
  sol.seed = path.seed;
  sol.path_index = path.path_index;
  sol.interpolant_substeps =
      config.euler.record_interpolant ? config.euler.interpolant_substeps : 0;
  sol.vi_iterations.reserve(n_nodes);
  sol.controls = vi_sweep(&sol);
  sol.states = std::move(states);

  result.solution = std::move(sol);
  return result;
}

}  // namespace sdvi
