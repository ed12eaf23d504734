#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "sdvi/time_grid.hpp"

namespace sdvi {

/// One sample path of the coupled scheme: states x_h(t_i) and controls
/// u_h(t_i) at every grid node, with per-node VI diagnostics.  The control
/// is piecewise constant: u_h(t) = u_h(t_i) on [t_i, t_{i+1}).
struct PathSolution {
  TimeGrid grid;
  std::vector<Eigen::VectorXd> states;    // num_steps + 1 entries
  std::vector<Eigen::VectorXd> controls;  // num_steps + 1 entries, each in K
  std::vector<int> vi_iterations;         // projected steps spent per node
  std::vector<int> nonconverged_nodes;    // nodes whose VI solve hit max_iterations
  std::uint64_t seed{0};
  std::uint64_t path_index{0};
  /// > 0 when the run recorded an interpolant; value is substeps per step.
  int interpolant_substeps{0};
};

}  // namespace sdvi
