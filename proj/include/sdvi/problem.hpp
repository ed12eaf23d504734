#pragma once

#include <functional>

#include <Eigen/Core>

#include "sdvi/convex_set.hpp"
#include "sdvi/rng.hpp"

namespace sdvi {

using DriftFn =
    std::function<Eigen::VectorXd(double t, const Eigen::VectorXd& x, const Eigen::VectorXd& u)>;
using DiffusionFn =
    std::function<Eigen::MatrixXd(double t, const Eigen::VectorXd& x, const Eigen::VectorXd& u)>;
using ViMapFn = std::function<Eigen::VectorXd(
    double t, const Eigen::VectorXd& x, const Eigen::VectorXd& u, const Scenario& scenario)>;

/// Coupled system on [0, horizon]:
///
///   dx = drift(t, x, u) dt + diffusion(t, x, u) dB_t,   x(0) = initial_state,
///   u(t) in K solves  <vi_map(t, omega, x(t), u(t)), v - u(t)> >= 0  for all v in K.
///
/// drift maps into R^n, diffusion into R^(n x l), vi_map into R^m; the
/// constraint set K lives in control space R^m.  B is an l-dimensional
/// standard Brownian motion.
struct SdviProblem {
  Eigen::Index state_dim{0};    // n
  Eigen::Index control_dim{0};  // m
  Eigen::Index noise_dim{0};    // l

  DriftFn drift;
  DiffusionFn diffusion;
  ViMapFn vi_map;

  ConvexSet constraint{ConvexSet::whole_space(0)};
  Eigen::VectorXd initial_state;
  double horizon{0.0};
};

/// Structural check: dimensions positive and consistent, horizon positive
/// and finite, callables present, and one probe evaluation of drift,
/// diffusion and vi_map at (0, initial_state, project(K, 0)) returns values
/// of the declared shapes.  Throws std::invalid_argument on any violation.
void validate_problem(const SdviProblem& problem);

/// Quantitative regularity attached to a problem.  All constants refer to
/// joint Lipschitz continuity in (t, x, u) with the metric
/// |t1-t2| + ||x1-x2|| + ||u1-u2||, linear growth in (1 + ||x|| + ||u||),
/// and strong monotonicity of the VI map in u alone.
struct ProblemConstants {
  double lip_f{0.0};     // drift Lipschitz bound
  double lip_g{0.0};     // diffusion Lipschitz bound
  double lip_F{0.0};     // VI map Lipschitz bound, at least mono_C
  double growth_f{0.0};  // drift linear-growth bound
  double growth_g{0.0};  // diffusion linear-growth bound
  double mono_C{0.0};    // strong monotonicity modulus, strictly positive
};

/// Throws std::invalid_argument unless every field is finite and
/// nonnegative, lip_F and mono_C are strictly positive, and mono_C <= lip_F.
/// Equality is attainable (the identity VI map has C = L = 1) and keeps the
/// contraction factor well defined, so only mono_C > lip_F is rejected.
void validate_constants(const ProblemConstants& constants);

}  // namespace sdvi
