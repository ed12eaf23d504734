#pragma once

#include <iosfwd>
#include <string>

#include "sdvi/ensemble.hpp"
#include "sdvi/path_solution.hpp"

namespace sdvi {

/// Shortest decimal that round-trips to the same double (via std::to_chars),
/// never more than 17 significant digits.  This is the single rendering used
/// by every emitter, so equal runs produce byte-identical files.
std::string format_double(double v);

/// One path as CSV: header t,x_1..x_n,u_1..u_m,vi_iters then one row per
/// node with t = i*h.  Rows end with '\n'.
void write_trajectory_csv(std::ostream& out, const PathSolution& solution);

/// Ensemble statistics as CSV: header
/// t,mean_x_*,var_x_*,mean_u_*,var_u_* then one row per node.
void write_ensemble_csv(std::ostream& out, const EnsembleResult& result);

}  // namespace sdvi
