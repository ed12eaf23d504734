#include "sdvi/vi_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sdvi {
namespace {

// Squared one-step contraction factor of the projected iteration.
double contraction_factor_sq(double mono_C, double lip_F, double rho) {
  return 1.0 - 2.0 * rho * mono_C + rho * rho * lip_F * lip_F;
}

void check_admissible(double mono_C, double lip_F, double rho) {
  const double upper = 2.0 * mono_C / (lip_F * lip_F);
  if (!(rho > 0.0) || !(rho < upper))
    throw std::invalid_argument("rho = " + std::to_string(rho) +
                                " outside admissible interval (0, " + std::to_string(upper) + ")");
}

}  // namespace

double optimal_rho(const ProblemConstants& constants) {
  validate_constants(constants);
  return constants.mono_C / (constants.lip_F * constants.lip_F);
}

double lipschitz_bound_mprime(const ProblemConstants& constants, double rho) {
  validate_constants(constants);
  const double mono_C = constants.mono_C;
  const double lip_F = constants.lip_F;
  check_admissible(mono_C, lip_F, rho);
  const double factor = std::max(0.0, contraction_factor_sq(mono_C, lip_F, rho));
  const double denom = 1.0 - std::sqrt(factor);
  return rho * rho * lip_F * lip_F / (denom * denom);
}

ResolvedRho resolve_rho(const ViSolverConfig& config) {
  if (config.constants) {
    validate_constants(*config.constants);
    if (config.rho) {
      check_admissible(config.constants->mono_C, config.constants->lip_F, *config.rho);
      return {*config.rho, true};
    }
    return {optimal_rho(*config.constants), true};
  }
  if (!config.rho)
    throw std::invalid_argument("vi config: rho is required when no constants are attached");
  if (!(*config.rho > 0.0) || !std::isfinite(*config.rho))
    throw std::invalid_argument("vi config: rho must be positive and finite");
  return {*config.rho, false};  // caller may want to log that rho went unchecked
}

ViSolveResult solve_vi(const SdviProblem& problem, double t, const Eigen::VectorXd& x,
                       const Scenario& scenario, const ViSolverConfig& config) {
  if (!(config.tolerance > 0.0))
    throw std::invalid_argument("vi config: tolerance must be positive");
  if (config.max_iterations < 1)
    throw std::invalid_argument("vi config: max_iterations must be >= 1");
  if (x.size() != problem.state_dim)
    throw std::invalid_argument("solve_vi: state has wrong dimension");
  const double rho = resolve_rho(config).value;

  Eigen::VectorXd u = config.warm_start
                          ? problem.constraint.project(*config.warm_start)
                          : problem.constraint.project(Eigen::VectorXd::Zero(problem.control_dim));

  ViSolveResult result;
  double first_residual = -1.0;
  double last_residual = -1.0;
  int ratio_count = 0;

  for (int k = 0; k < config.max_iterations; ++k) {
    Eigen::VectorXd fval = problem.vi_map(t, x, u, scenario);
    if (fval.size() != problem.control_dim)
      throw std::invalid_argument("solve_vi: vi_map output has wrong dimension");
    if (!fval.allFinite())
      throw std::runtime_error("solve_vi: vi_map returned a non-finite value at t = " +
                               std::to_string(t));
    Eigen::VectorXd next = problem.constraint.project(u - rho * fval);
    const double residual = (next - u).norm();
    u = std::move(next);
    result.iterations = k + 1;
    result.final_residual = residual;
    if (first_residual < 0.0)
      first_residual = residual;
    else
      ++ratio_count;
    last_residual = residual;
    if (residual <= config.tolerance) {
      result.converged = true;
      break;
    }
  }

  // Geometric mean of successive residual ratios, (r_K / r_1)^(1/(K-1)).
  if (ratio_count > 0 && first_residual > 0.0) {
    const double est = std::pow(last_residual / first_residual, 1.0 / ratio_count);
    if (est < 1.0) result.contraction_estimate = est;
  }
  result.solution = std::move(u);
  return result;
}

}  // namespace sdvi
