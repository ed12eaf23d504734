#pragma once

#include <vector>

namespace sdvi {

/// Uniform grid 0 = t_0 < t_1 < ... < t_N = horizon with step h = horizon/N.
/// Nodes are defined as i*h (a product, not a running sum) so that node
/// values and their text renderings are independent of traversal order.
struct TimeGrid {
  double horizon{0.0};
  int num_steps{0};
  double step{0.0};

  double node(int i) const { return static_cast<double>(i) * step; }
  std::vector<double> nodes() const;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

/// Builds the grid; throws std::invalid_argument unless horizon is positive
/// and finite and num_steps >= 1.
TimeGrid make_grid(double horizon, int num_steps);

}  // namespace sdvi
