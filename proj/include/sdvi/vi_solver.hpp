#pragma once

#include <optional>

#include <Eigen/Core>

#include "sdvi/problem.hpp"

namespace sdvi {

/// Fixed-point step size rho* = mono_C / lip_F^2, the minimizer of the
/// squared contraction factor 1 - 2 rho C + rho^2 L^2 over the admissible
/// interval (0, 2 C / L^2).
double optimal_rho(const ProblemConstants& constants);

/// Squared Lipschitz bound M' = rho^2 L^2 / (1 - sqrt(1 - 2 rho C + rho^2 L^2))^2
/// for the dependence of the VI solution on the anchor state: for fixed t,
/// ||u(x1) - u(x2)||^2 <= M' ||x1 - x2||^2 whenever the VI map is also
/// L-Lipschitz in x.  Throws std::invalid_argument unless the constants are
/// valid and rho lies in the admissible interval (0, 2 C / L^2), on which the
/// inner square root stays in [0, 1).
double lipschitz_bound_mprime(const ProblemConstants& constants, double rho);

/// Configuration of the projected fixed-point iteration
///   u_{k+1} = project(K, u_k - rho * F(t, x, u_k)).
struct ViSolverConfig {
  /// When present, rho defaults to optimal_rho(constants) and an explicit
  /// rho is validated against the admissible interval.  When absent, rho is
  /// required and used unchecked (resolve_rho reports that).
  std::optional<ProblemConstants> constants;
  std::optional<double> rho;
  double tolerance{1e-10};
  int max_iterations{10000};
  /// Starting point; projected into K before use.  Defaults to project(K, 0).
  std::optional<Eigen::VectorXd> warm_start;
};

struct ResolvedRho {
  double value{0.0};
  bool admissibility_checked{false};
};

/// Resolves the effective step.  Throws std::invalid_argument when neither
/// rho nor constants are given, or when an explicit rho falls outside the
/// admissible interval of attached constants.
ResolvedRho resolve_rho(const ViSolverConfig& config);

struct ViSolveResult {
  Eigen::VectorXd solution;  // always the image of a projection, so in K
  int iterations{0};         // number of projected steps taken
  double final_residual{0.0};
  /// Geometric mean of successive residual ratios (r_K / r_1)^(1/(K-1)).
  /// Present only when at least two residuals exist and the mean is < 1.
  std::optional<double> contraction_estimate;
  bool converged{false};
};

/// Solves the pointwise VI at (t, x): find u in K with
/// <F(t, omega, x, u), v - u> >= 0 for all v in K, by projected fixed-point
/// iteration, stopping when ||u_{k+1} - u_k|| <= tolerance.  Non-convergence
/// within max_iterations is reported via converged=false, never by throwing;
/// a non-finite F value raises std::runtime_error.
ViSolveResult solve_vi(const SdviProblem& problem, double t, const Eigen::VectorXd& x,
                       const Scenario& scenario, const ViSolverConfig& config);

}  // namespace sdvi
