#include "sdvi/csv.hpp"

#include <charconv>
#include <ios>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace sdvi {

std::string format_double(double v) {
  char buf[64];
  // Shortest round-trip form; never exceeds 17 significant digits.
  const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

void write_trajectory_csv(std::ostream& out, const PathSolution& solution) {
  if (solution.states.empty()) throw std::invalid_argument("write_trajectory_csv: empty solution");
  const Eigen::Index n = solution.states.front().size();
  const Eigen::Index m = solution.controls.front().size();

  out << 't';
  for (Eigen::Index j = 0; j < n; ++j) out << ",x_" << (j + 1);
  for (Eigen::Index j = 0; j < m; ++j) out << ",u_" << (j + 1);
  out << ",vi_iters\n";

  for (std::size_t i = 0; i < solution.states.size(); ++i) {
    out << format_double(solution.grid.node(static_cast<int>(i)));
    for (Eigen::Index j = 0; j < n; ++j) out << ',' << format_double(solution.states[i][j]);
    for (Eigen::Index j = 0; j < m; ++j) out << ',' << format_double(solution.controls[i][j]);
    out << ',' << solution.vi_iterations[i] << '\n';
  }
  if (!out) throw std::ios_base::failure("write_trajectory_csv: stream failure");
}

void write_ensemble_csv(std::ostream& out, const EnsembleResult& result) {
  if (result.mean_state.empty()) throw std::invalid_argument("write_ensemble_csv: empty result");
  const Eigen::Index n = result.mean_state.front().size();
  const Eigen::Index m = result.mean_control.front().size();

  out << 't';
  for (Eigen::Index j = 0; j < n; ++j) out << ",mean_x_" << (j + 1);
  for (Eigen::Index j = 0; j < n; ++j) out << ",var_x_" << (j + 1);
  for (Eigen::Index j = 0; j < m; ++j) out << ",mean_u_" << (j + 1);
  for (Eigen::Index j = 0; j < m; ++j) out << ",var_u_" << (j + 1);
  out << '\n';

  for (std::size_t i = 0; i < result.mean_state.size(); ++i) {
    out << format_double(result.grid.node(static_cast<int>(i)));
    for (Eigen::Index j = 0; j < n; ++j) out << ',' << format_double(result.mean_state[i][j]);
    for (Eigen::Index j = 0; j < n; ++j) out << ',' << format_double(result.var_state[i][j]);
    for (Eigen::Index j = 0; j < m; ++j) out << ',' << format_double(result.mean_control[i][j]);
    for (Eigen::Index j = 0; j < m; ++j) out << ',' << format_double(result.var_control[i][j]);
    out << '\n';
  }
  if (!out) throw std::ios_base::failure("write_ensemble_csv: stream failure");
}

}  // namespace sdvi
