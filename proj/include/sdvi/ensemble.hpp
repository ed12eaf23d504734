#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "sdvi/path_solution.hpp"
#include "sdvi/stepper.hpp"

namespace sdvi {

/// Execution policy for embarrassingly parallel path loops.  kParallel uses
/// OpenMP when compiled in; results are written into per-path slots and
/// reduced serially in path order, so both policies produce bit-identical
/// output regardless of thread count.
enum class Execution { kSerial, kParallel };

/// Node-wise first and second moments over an ensemble of paths.  Variances
/// are population variances (divide by num_paths), accumulated with
/// Welford's update in path order: identical paths give exactly zero.
struct EnsembleResult {
  TimeGrid grid;
  int num_paths{0};
  std::uint64_t seed{0};
  std::vector<Eigen::VectorXd> mean_state;    // per node
  std::vector<Eigen::VectorXd> var_state;     // per node
  std::vector<Eigen::VectorXd> mean_control;  // per node
  std::vector<Eigen::VectorXd> var_control;   // per node
  /// Total VI non-convergences over all paths and nodes.
  long total_nonconverged{0};
  /// Per-path solutions, kept only when requested.
  std::vector<PathSolution> paths;
};

/// Integrates paths 0..num_paths-1 (path k uses the Brownian stream keyed by
/// (seed, k)) and aggregates node statistics.  Per-path hard errors are
/// rethrown with the path index attached after all workers finish.
EnsembleResult run_ensemble(const SdviProblem& problem, const TimeGrid& grid, int num_paths,
                            std::uint64_t seed, const EulerConfig& config,
                            Execution exec = Execution::kParallel, bool keep_paths = false);

}  // namespace sdvi
