#include "sdvi/ensemble.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "parallel_for.hpp"
#include "sdvi/brownian.hpp"

namespace sdvi {

EnsembleResult run_ensemble(const SdviProblem& problem, const TimeGrid& grid, int num_paths,
                            std::uint64_t seed, const EulerConfig& config, Execution exec,
                            bool keep_paths) {
  if (num_paths < 1) throw std::invalid_argument("run_ensemble: num_paths must be >= 1");
  validate_problem(problem);

  std::vector<PathSolution> slots(static_cast<std::size_t>(num_paths));
  detail::for_each_index(num_paths, exec, "path", [&](int k) {
    const BrownianPath path =
        sample_brownian(grid, problem.noise_dim, seed, static_cast<std::uint64_t>(k));
    slots[static_cast<std::size_t>(k)] = euler_path(problem, path, config);
  });

  EnsembleResult result;
  result.grid = grid;
  result.num_paths = num_paths;
  result.seed = seed;

  const std::size_t n_nodes = static_cast<std::size_t>(grid.num_steps) + 1;
  result.mean_state.assign(n_nodes, Eigen::VectorXd::Zero(problem.state_dim));
  result.var_state.assign(n_nodes, Eigen::VectorXd::Zero(problem.state_dim));
  result.mean_control.assign(n_nodes, Eigen::VectorXd::Zero(problem.control_dim));
  result.var_control.assign(n_nodes, Eigen::VectorXd::Zero(problem.control_dim));

  // Welford update in path order; var_* hold M2 until the final divide.
  // Identical paths keep delta == 0 exactly, so the variance of a degenerate
  // ensemble is 0 with no rounding residue.
  const auto accumulate = [](const Eigen::VectorXd& value, Eigen::VectorXd& mean,
                             Eigen::VectorXd& m2, int count) {
    const Eigen::VectorXd delta = value - mean;
    mean += delta / static_cast<double>(count);
    m2.array() += delta.array() * (value - mean).array();
  };

  for (int k = 0; k < num_paths; ++k) {
    const PathSolution& sol = slots[static_cast<std::size_t>(k)];
    result.total_nonconverged += static_cast<long>(sol.nonconverged_nodes.size());
    for (std::size_t i = 0; i < n_nodes; ++i) {
      accumulate(sol.states[i], result.mean_state[i], result.var_state[i], k + 1);
      accumulate(sol.controls[i], result.mean_control[i], result.var_control[i], k + 1);
    }
  }
  for (std::size_t i = 0; i < n_nodes; ++i) {
    result.var_state[i] /= static_cast<double>(num_paths);
    result.var_control[i] /= static_cast<double>(num_paths);
  }

  if (keep_paths) result.paths = std::move(slots);
  return result;
}

}  // namespace sdvi
