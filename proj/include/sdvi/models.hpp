#pragma once

#include <optional>

#include "sdvi/problem.hpp"

namespace sdvi {

/// RLC network with four ideal diodes.  State x in R^2 (inductor current,
/// capacitor voltage), control u in R^4 (diode branch variables), scalar
/// noise.  Dynamics
///   dx = [A x + B u + p(t)] dt + [a x + b E u + q(t)] dB_t,
/// with A = diag(-2/3, -1/5), B = [[0, 1/3, -1/3, 0], [1, 0, 0, 1]],
/// p(t) = (2 sin(3t - pi/3), 0), E the all-ones 2x4 matrix and
/// q(t) = (c sin t, 0).  The diode characteristic is the box-constrained VI
/// with affine map F(x, u) = Q x + M u; the symmetric part of M is
/// epsilon * I, so epsilon is the exact strong-monotonicity modulus.
struct CircuitParams {
  double epsilon{0.1};
  double a{0.0};  // state feedback gain in the diffusion
  double b{0.0};  // control feedthrough gain in the diffusion
  double c{0.0};  // deterministic forcing gain in the diffusion
  double horizon{1.5};
};

SdviProblem build_circuit(const CircuitParams& params);

/// Constants backing the solver: mono_C = epsilon and lip_F = the largest
/// singular value of [Q M] (computed, not hard-coded).  Empty when
/// epsilon <= 0: the VI map is then monotone but not strongly so, and runs
/// must supply an explicit rho.
std::optional<ProblemConstants> circuit_constants(const CircuitParams& params);

/// Suspension bridge deck section: state y = (displacement, velocity),
/// scalar control, scalar noise.  Dynamics
///   dy1 = y2 dt,
///   dy2 = [-(2/5) y1 - tau y2 - (1/10) u + sin(4t)] dt + k dB_t,
/// control constrained to [0, inf) by the VI with F(y, u) = u + 3 y1
/// (a one-sided stay cable: tension only when the deck drops).
struct BridgeParams {
  double tau{1.0};    // damping
  double k{1.0};      // additive noise amplitude
  double theta{0.0};  // initial velocity
  double horizon{1.0};
};

SdviProblem build_bridge(const BridgeParams& params);

/// mono_C = 1, lip_F = sqrt(10) (joint Lipschitz in (y, u) through the
/// coefficients (3, 1)); drift/diffusion bounds are conservative and
/// parameter-dependent.
ProblemConstants bridge_constants(const BridgeParams& params);

/// Closed form of the bridge VI solution: u*(y1) = max(0, -3 y1).  The
/// scalar VI on [0, inf) reduces to complementarity 0 <= u  ⊥  u + 3 y1 >= 0.
double bridge_vi_oracle(double y1);

}  // namespace sdvi
