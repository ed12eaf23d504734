#include "sdvi/problem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sdvi {

void validate_problem(const SdviProblem& problem) {
  if (problem.state_dim < 1 || problem.control_dim < 1 || problem.noise_dim < 1)
    throw std::invalid_argument("problem: dimensions must be >= 1");
  if (!(problem.horizon > 0.0) || !std::isfinite(problem.horizon))
    throw std::invalid_argument("problem: horizon must be positive and finite");
  if (!problem.drift || !problem.diffusion || !problem.vi_map)
    throw std::invalid_argument("problem: drift, diffusion and vi_map must all be set");
  if (problem.constraint.dim() != problem.control_dim)
    throw std::invalid_argument("problem: constraint set dimension != control_dim");
  if (problem.initial_state.size() != problem.state_dim)
    throw std::invalid_argument("problem: initial_state length != state_dim");
  if (!problem.initial_state.allFinite())
    throw std::invalid_argument("problem: non-finite initial_state");

  // Probe evaluation at (t=0, x0, project(K, 0)).
  const Eigen::VectorXd u0 =
      problem.constraint.project(Eigen::VectorXd::Zero(problem.control_dim));
  const Scenario scenario(0, 0, 0);
  const Eigen::VectorXd f = problem.drift(0.0, problem.initial_state, u0);
  if (f.size() != problem.state_dim)
    throw std::invalid_argument("problem: drift output length " + std::to_string(f.size()) +
                                " != state_dim " + std::to_string(problem.state_dim));
  const Eigen::MatrixXd g = problem.diffusion(0.0, problem.initial_state, u0);
  if (g.rows() != problem.state_dim || g.cols() != problem.noise_dim)
    throw std::invalid_argument("problem: diffusion output is " + std::to_string(g.rows()) + "x" +
                                std::to_string(g.cols()) + ", expected " +
                                std::to_string(problem.state_dim) + "x" +
                                std::to_string(problem.noise_dim));
  const Eigen::VectorXd F = problem.vi_map(0.0, problem.initial_state, u0, scenario);
  if (F.size() != problem.control_dim)
    throw std::invalid_argument("problem: vi_map output length " + std::to_string(F.size()) +
                                " != control_dim " + std::to_string(problem.control_dim));
}

void validate_constants(const ProblemConstants& c) {
  const double fields[] = {c.lip_f, c.lip_g, c.lip_F, c.growth_f, c.growth_g, c.mono_C};
  for (double v : fields) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("constants: fields must be finite and nonnegative");
  }
  if (!(c.lip_F > 0.0) || !(c.mono_C > 0.0))
    throw std::invalid_argument("constants: lip_F and mono_C must be strictly positive");
  if (!(c.mono_C <= c.lip_F))
    throw std::invalid_argument("constants: mono_C must not exceed lip_F");
}

}  // namespace sdvi
