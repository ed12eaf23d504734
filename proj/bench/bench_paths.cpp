// Wall-clock comparison of serial vs parallel ensemble execution.  Both runs
// must produce bitwise identical statistics; the benchmark aborts otherwise.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "sdvi/ensemble.hpp"
#include "sdvi/models.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool bitwise_equal(const std::vector<Eigen::VectorXd>& a, const std::vector<Eigen::VectorXd>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    if (std::memcmp(a[i].data(), b[i].data(), sizeof(double) * a[i].size()) != 0) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int paths = 2000;
  int steps = 200;
  if (argc > 1) paths = std::atoi(argv[1]);
  if (argc > 2) steps = std::atoi(argv[2]);

  sdvi::CircuitParams params;
  // A well-conditioned VI (fast contraction at epsilon = 1) keeps the run
  // dominated by path integration, which is the axis being parallelized.
  params.epsilon = 1.0;
  params.a = 0.5;
  params.b = 0.5;
  params.c = 1.0;
  const sdvi::SdviProblem problem = sdvi::build_circuit(params);

  sdvi::EulerConfig config;
  config.vi.constants = sdvi::circuit_constants(params);
  const sdvi::TimeGrid grid = sdvi::make_grid(problem.horizon, steps);

  std::cout << "paths=" << paths << " steps=" << steps << '\n';

  auto t0 = std::chrono::steady_clock::now();
  const sdvi::EnsembleResult serial =
      sdvi::run_ensemble(problem, grid, paths, 7, config, sdvi::Execution::kSerial);
  const double serial_s = seconds_since(t0);
  std::cout << "serial:   " << serial_s << " s\n";

  t0 = std::chrono::steady_clock::now();
  const sdvi::EnsembleResult parallel =
      sdvi::run_ensemble(problem, grid, paths, 7, config, sdvi::Execution::kParallel);
  const double parallel_s = seconds_since(t0);
  std::cout << "parallel: " << parallel_s << " s\n";
  std::cout << "speedup:  " << serial_s / parallel_s << "x\n";

  const bool same = bitwise_equal(serial.mean_state, parallel.mean_state) &&
                    bitwise_equal(serial.var_state, parallel.var_state) &&
                    bitwise_equal(serial.mean_control, parallel.mean_control) &&
                    bitwise_equal(serial.var_control, parallel.var_control);
  if (!same) {
    std::cerr << "FAIL: serial and parallel statistics differ\n";
    return 1;
  }
  std::cout << "statistics bitwise identical\n";
  return 0;
}
