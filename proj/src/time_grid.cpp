#include "sdvi/time_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace sdvi {

std::vector<double> TimeGrid::nodes() const {
  std::vector<double> out(static_cast<std::size_t>(num_steps) + 1);
  for (int i = 0; i <= num_steps; ++i) out[static_cast<std::size_t>(i)] = node(i);
  return out;
}

TimeGrid make_grid(double horizon, int num_steps) {
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw std::invalid_argument("make_grid: horizon must be positive and finite");
  if (num_steps < 1) throw std::invalid_argument("make_grid: num_steps must be >= 1");
  TimeGrid grid;
  grid.horizon = horizon;
  grid.num_steps = num_steps;
  grid.step = horizon / num_steps;
  return grid;
}

}  // namespace sdvi
