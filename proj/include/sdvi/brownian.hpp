#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "sdvi/time_grid.hpp"

namespace sdvi {

/// Increments of an l-dimensional standard Brownian motion over one uniform
/// grid.  Column i holds B(t_{i+1}) - B(t_i); values at nodes follow by
/// prefix summation.  seed and path_index identify the generating stream so
/// refinements and reruns can be coupled to the same underlying path.
struct BrownianPath {
  TimeGrid grid;
  Eigen::Index noise_dim{0};
  Eigen::MatrixXd increments;  // noise_dim x num_steps
  std::uint64_t seed{0};
  std::uint64_t path_index{0};

  Eigen::VectorXd increment(int i) const { return increments.col(i); }

  /// B(t_i) - B(0): left-to-right sum of the first i increments.
  Eigen::VectorXd value_at_node(int i) const;
};

/// Draws increments sqrt(h) * Z with Z ~ N(0, I), using the stream keyed by
/// (seed, path_index).  Draw order is step-major, component-minor: all of
/// column 0, then column 1, and so on.  Deterministic; safe to call for
/// different path_index values concurrently.
BrownianPath sample_brownian(const TimeGrid& grid, Eigen::Index noise_dim, std::uint64_t seed,
                             std::uint64_t path_index);

/// Same Brownian path on a grid coarsened by `factor`: coarse increment j is
/// the left-to-right sum of fine increments [j*factor, (j+1)*factor).  The
/// summation order is fixed so results are reproducible bit for bit.  Throws
/// std::invalid_argument unless factor >= 1 divides num_steps.
BrownianPath coarsen(const BrownianPath& path, int factor);

}  // namespace sdvi
