#include "sdvi/convergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "parallel_for.hpp"
#include "sdvi/brownian.hpp"

namespace sdvi {
namespace {

// OLS slope of log(errors) against log(steps).  NaN when a level's error is
// exactly zero: the problem degenerated and no order is defined.
double fit_order(const std::vector<double>& steps, const std::vector<double>& errors) {
  const std::size_t n = steps.size();
  for (double e : errors)
    if (!(e > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(steps[i]);
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = static_cast<double>(n) * sxx - sx * sx;
  return (static_cast<double>(n) * sxy - sx * sy) / denom;
}

}  // namespace

double discrete_h_norm(const TimeGrid& grid, const std::vector<Eigen::VectorXd>& a,
                       const std::vector<Eigen::VectorXd>& b) {
  const std::size_t n_nodes = static_cast<std::size_t>(grid.num_steps) + 1;
  if (a.size() != n_nodes || b.size() != n_nodes)
    throw std::invalid_argument("discrete_h_norm: trajectory length != num_steps + 1");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n_nodes; ++i) {  // left endpoints
    if (a[i].size() != b[i].size())
      throw std::invalid_argument("discrete_h_norm: dimension mismatch at node " +
                                  std::to_string(i));
    sum += (a[i] - b[i]).squaredNorm();
  }
  return std::sqrt(grid.step * sum);
}

std::vector<Eigen::VectorXd> restrict_to_coarse(const std::vector<Eigen::VectorXd>& fine,
                                                int factor) {
  if (factor < 1) throw std::invalid_argument("restrict_to_coarse: factor must be >= 1");
  if (fine.empty() || (fine.size() - 1) % static_cast<std::size_t>(factor) != 0)
    throw std::invalid_argument("restrict_to_coarse: factor does not divide step count");
  const std::size_t coarse_steps = (fine.size() - 1) / static_cast<std::size_t>(factor);
  std::vector<Eigen::VectorXd> out(coarse_steps + 1);
  for (std::size_t i = 0; i <= coarse_steps; ++i)
    out[i] = fine[i * static_cast<std::size_t>(factor)];
  return out;
}

ConvergenceReport estimate_strong_order(const SdviProblem& problem, int fine_steps, int levels,
                                        int num_paths, std::uint64_t seed,
                                        const EulerConfig& config, Execution exec) {
  if (levels < 2) throw std::invalid_argument("estimate_strong_order: levels must be >= 2");
  if (num_paths < 30) throw std::invalid_argument("estimate_strong_order: num_paths must be >= 30");
  const int denom = 1 << levels;
  if (fine_steps % denom != 0)
    throw std::invalid_argument("estimate_strong_order: fine_steps must be divisible by 2^levels");
  validate_problem(problem);

  const TimeGrid fine_grid = make_grid(problem.horizon, fine_steps);

  // Per-path squared errors land in slots; the reduction below runs in path
  // order so the report is reproducible across execution policies.
  struct PathErrors {
    std::vector<double> state_sq, control_sq;  // one entry per level
  };
  std::vector<PathErrors> slots(static_cast<std::size_t>(num_paths));

  detail::for_each_index(num_paths, exec, "path", [&](int k) {
    const BrownianPath fine_path =
        sample_brownian(fine_grid, problem.noise_dim, seed, static_cast<std::uint64_t>(k));
    const PathSolution reference = euler_path(problem, fine_path, config);

    PathErrors& mine = slots[static_cast<std::size_t>(k)];
    mine.state_sq.resize(static_cast<std::size_t>(levels));
    mine.control_sq.resize(static_cast<std::size_t>(levels));
    for (int j = 1; j <= levels; ++j) {
      const int factor = 1 << j;
      const BrownianPath coarse_path = coarsen(fine_path, factor);
      const PathSolution coarse = euler_path(problem, coarse_path, config);
      const double es = discrete_h_norm(coarse.grid, coarse.states,
                                        restrict_to_coarse(reference.states, factor));
      const double ec = discrete_h_norm(coarse.grid, coarse.controls,
                                        restrict_to_coarse(reference.controls, factor));
      // Levels are reported coarsest first (descending step), index levels - j.
      mine.state_sq[static_cast<std::size_t>(levels - j)] = es * es;
      mine.control_sq[static_cast<std::size_t>(levels - j)] = ec * ec;
    }
  });

  ConvergenceReport report;
  report.num_paths = num_paths;
  report.seed = seed;
  report.step_sizes.resize(static_cast<std::size_t>(levels));
  for (int j = 1; j <= levels; ++j)
    report.step_sizes[static_cast<std::size_t>(levels - j)] =
        problem.horizon / (fine_steps / (1 << j));

  report.errors_state.assign(static_cast<std::size_t>(levels), 0.0);
  report.errors_control.assign(static_cast<std::size_t>(levels), 0.0);
  for (int k = 0; k < num_paths; ++k) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(levels); ++j) {
      report.errors_state[j] += slots[static_cast<std::size_t>(k)].state_sq[j];
      report.errors_control[j] += slots[static_cast<std::size_t>(k)].control_sq[j];
    }
  }
  for (std::size_t j = 0; j < static_cast<std::size_t>(levels); ++j) {
    report.errors_state[j] = std::sqrt(report.errors_state[j] / num_paths);
    report.errors_control[j] = std::sqrt(report.errors_control[j] / num_paths);
  }
  report.fitted_order_state = fit_order(report.step_sizes, report.errors_state);
  report.fitted_order_control = fit_order(report.step_sizes, report.errors_control);
  return report;
}

std::string report_to_json(const ConvergenceReport& report) {
  nlohmann::json j;
  j["step_sizes"] = report.step_sizes;
  j["errors_state"] = report.errors_state;
  j["errors_control"] = report.errors_control;
  j["fitted_order_state"] = report.fitted_order_state;
  j["fitted_order_control"] = report.fitted_order_control;
  j["num_paths"] = report.num_paths;
  j["seed"] = report.seed;
  return j.dump(2) + "\n";
}

}  // namespace sdvi
