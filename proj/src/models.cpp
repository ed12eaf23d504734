#include "sdvi/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>

namespace sdvi {
namespace {

Eigen::Matrix<double, 4, 2> circuit_Q() {
  Eigen::Matrix<double, 4, 2> Q;
  Q << 0, 1, 1, 0, -1, 0, 0, 1;
  return Q;
}

Eigen::Matrix4d circuit_M(double epsilon) {
  Eigen::Matrix4d M;
  M << epsilon, 0, -1, 0,  //
      0, epsilon, 0, 1,    //
      1, 0, epsilon, 0,    //
      0, -1, 0, epsilon;
  return M;
}

void check_finite_params(std::initializer_list<double> values, const char* what) {
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite parameter");
}

}  // namespace

SdviProblem build_circuit(const CircuitParams& params) {
  check_finite_params({params.epsilon, params.a, params.b, params.c, params.horizon}, "circuit");
  if (params.epsilon < 0.0) throw std::invalid_argument("circuit: epsilon must be >= 0");
  if (!(params.horizon > 0.0)) throw std::invalid_argument("circuit: horizon must be positive");

  const Eigen::Matrix2d A = Eigen::Vector2d(-2.0 / 3.0, -1.0 / 5.0).asDiagonal();
  Eigen::Matrix<double, 2, 4> B;
  B << 0, 1.0 / 3.0, -1.0 / 3.0, 0,  //
      1, 0, 0, 1;
  const Eigen::Matrix<double, 4, 2> Q = circuit_Q();
  const Eigen::Matrix4d M = circuit_M(params.epsilon);
  const double a = params.a, b = params.b, c = params.c;

  SdviProblem problem;
  problem.state_dim = 2;
  problem.control_dim = 4;
  problem.noise_dim = 1;
  problem.horizon = params.horizon;
  problem.initial_state = Eigen::Vector2d(-1.0, 0.0);

  Eigen::Vector4d lower, upper;
  lower << -10, -10, 0, 0;
  upper << 10, 10, 20, 20;
  problem.constraint = ConvexSet::box(lower, upper);

  problem.drift = [A, B](double t, const Eigen::VectorXd& x, const Eigen::VectorXd& u) {
    Eigen::Vector2d forcing(2.0 * std::sin(3.0 * t - std::numbers::pi / 3.0), 0.0);
    return Eigen::VectorXd(A * x + B * u + forcing);
  };
  problem.diffusion = [a, b, c](double t, const Eigen::VectorXd& x, const Eigen::VectorXd& u) {
    Eigen::Vector2d col = a * x;
    col += b * Eigen::Matrix<double, 2, 4>::Ones() * u;
    col += Eigen::Vector2d(c * std::sin(t), 0.0);
    return Eigen::MatrixXd(col);
  };
  problem.vi_map = [Q, M](double /*t*/, const Eigen::VectorXd& x, const Eigen::VectorXd& u,
                          const Scenario& /*scenario*/) {
    return Eigen::VectorXd(Q * x + M * u);
  };
  return problem;
}

std::optional<ProblemConstants> circuit_constants(const CircuitParams& params) {
  check_finite_params({params.epsilon, params.a, params.b, params.c}, "circuit");
  if (!(params.epsilon > 0.0)) return std::nullopt;  // monotone but not strongly

  ProblemConstants constants;
  // The VI map (x, u) -> Qx + Mu is linear; its joint Lipschitz constant is
  // the largest singular value of the stacked matrix [Q M].
  Eigen::Matrix<double, 4, 6> QM;
  QM.block<4, 2>(0, 0) = circuit_Q();
  QM.block<4, 4>(0, 2) = circuit_M(params.epsilon);
  constants.lip_F = QM.jacobiSvd().singularValues()(0);
  // The symmetric part of M is epsilon * I, so epsilon is the exact modulus.
  constants.mono_C = params.epsilon;

  // Drift: |d/dt forcing| <= 6, state/control parts linear.
  Eigen::Matrix2d A = Eigen::Vector2d(-2.0 / 3.0, -1.0 / 5.0).asDiagonal();
  Eigen::Matrix<double, 2, 4> B;
  B << 0, 1.0 / 3.0, -1.0 / 3.0, 0, 1, 0, 0, 1;
  const double nA = A.jacobiSvd().singularValues()(0);
  const double nB = B.jacobiSvd().singularValues()(0);
  constants.lip_f = 6.0 + nA + nB;
  constants.growth_f = std::max(2.0, std::max(nA, nB));
  // Diffusion: a x + b E u + (c sin t, 0).
  const double nE = Eigen::Matrix<double, 2, 4>::Ones().jacobiSvd().singularValues()(0);
  constants.lip_g = std::abs(params.c) + std::abs(params.a) + std::abs(params.b) * nE;
  constants.growth_g =
      std::max(std::abs(params.c), std::max(std::abs(params.a), std::abs(params.b) * nE));
  return constants;
}

SdviProblem build_bridge(const BridgeParams& params) {
  check_finite_params({params.tau, params.k, params.theta, params.horizon}, "bridge");
  if (!(params.horizon > 0.0)) throw std::invalid_argument("bridge: horizon must be positive");

  const double tau = params.tau, k = params.k;

  SdviProblem problem;
  problem.state_dim = 2;
  problem.control_dim = 1;
  problem.noise_dim = 1;
  problem.horizon = params.horizon;
  problem.initial_state = Eigen::Vector2d(0.0, params.theta);
  problem.constraint = ConvexSet::nonneg_orthant(1);

  problem.drift = [tau](double t, const Eigen::VectorXd& y, const Eigen::VectorXd& u) {
    Eigen::Vector2d f;
    f << y[1], -(2.0 / 5.0) * y[0] - tau * y[1] - 0.1 * u[0] + std::sin(4.0 * t);
    return Eigen::VectorXd(f);
  };
  problem.diffusion = [k](double /*t*/, const Eigen::VectorXd& /*y*/,
                          const Eigen::VectorXd& /*u*/) {
    Eigen::MatrixXd g(2, 1);
    g << 0.0, k;
    return g;
  };
  problem.vi_map = [](double /*t*/, const Eigen::VectorXd& y, const Eigen::VectorXd& u,
                      const Scenario& /*scenario*/) {
    Eigen::VectorXd F(1);
    F[0] = u[0] + 3.0 * y[0];
    return F;
  };
  return problem;
}

ProblemConstants bridge_constants(const BridgeParams& params) {
  check_finite_params({params.tau, params.k, params.theta}, "bridge");

  ProblemConstants constants;
  constants.mono_C = 1.0;              // dF/du = 1
  constants.lip_F = std::sqrt(10.0);   // coefficients (3, 1) on (y1, u)
  // Drift pieces: 4 from sin(4t), the state matrix norm, 0.1 from u.
  Eigen::Matrix2d J;
  J << 0, 1, -0.4, -params.tau;
  const double nJ = J.jacobiSvd().singularValues()(0);
  constants.lip_f = 4.0 + nJ + 0.1;
  constants.growth_f = std::max(1.0, nJ + 0.1);
  constants.lip_g = 0.0;  // diffusion is constant
  constants.growth_g = std::abs(params.k);
  return constants;
}

double bridge_vi_oracle(double y1) { return std::max(0.0, -3.0 * y1); }

}  // namespace sdvi
