#include "sdvi/brownian.hpp"

#include <cmath>
#include <stdexcept>

#include "sdvi/rng.hpp"

namespace sdvi {

Eigen::VectorXd BrownianPath::value_at_node(int i) const {
  if (i < 0 || i > grid.num_steps)
    throw std::invalid_argument("value_at_node: node out of range");
  Eigen::VectorXd b = Eigen::VectorXd::Zero(noise_dim);
  for (int k = 0; k < i; ++k) b += increments.col(k);
  return b;
}

BrownianPath sample_brownian(const TimeGrid& grid, Eigen::Index noise_dim, std::uint64_t seed,
                             std::uint64_t path_index) {
  if (noise_dim < 1) throw std::invalid_argument("sample_brownian: noise_dim must be >= 1");
  if (grid.num_steps < 1) throw std::invalid_argument("sample_brownian: empty grid");

  BrownianPath path;
  path.grid = grid;
  path.noise_dim = noise_dim;
  path.seed = seed;
  path.path_index = path_index;
  path.increments.resize(noise_dim, grid.num_steps);

  NormalStream stream(path_stream_seed(seed, path_index));
  const double scale = std::sqrt(grid.step);
  for (int i = 0; i < grid.num_steps; ++i)
    for (Eigen::Index c = 0; c < noise_dim; ++c) path.increments(c, i) = scale * stream.normal();
  return path;
}

BrownianPath coarsen(const BrownianPath& path, int factor) {
  if (factor < 1) throw std::invalid_argument("coarsen: factor must be >= 1");
  if (path.grid.num_steps % factor != 0)
    throw std::invalid_argument("coarsen: factor " + std::to_string(factor) +
                                " does not divide num_steps " +
                                std::to_string(path.grid.num_steps));

  BrownianPath out;
  out.grid = make_grid(path.grid.horizon, path.grid.num_steps / factor);
  out.noise_dim = path.noise_dim;
  out.seed = path.seed;
  out.path_index = path.path_index;
  out.increments.resize(path.noise_dim, out.grid.num_steps);
  for (int j = 0; j < out.grid.num_steps; ++j) {
    // Left-to-right accumulation keeps the result independent of Eigen's
    // reduction choices, so coarse paths are reproducible bit for bit.
    Eigen::VectorXd sum = path.increments.col(static_cast<Eigen::Index>(j) * factor);
    for (int q = 1; q < factor; ++q)
      sum += path.increments.col(static_cast<Eigen::Index>(j) * factor + q);
    out.increments.col(j) = sum;
  }
  return out;
}

}  // namespace sdvi
