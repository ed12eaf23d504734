#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdvi/problem.hpp"

namespace sdvi {

/// Sampled falsification evidence for the regularity a problem claims.
/// Observed ratios are maxima (Lipschitz, growth) or minima (monotonicity)
/// over random probes; they can only refute claimed constants, never prove
/// them.
struct AssumptionReport {
  int samples{0};
  std::uint64_t seed{0};

  double max_lipschitz_f{0.0};
  double max_lipschitz_g{0.0};
  double max_lipschitz_F{0.0};
  double min_monotonicity{0.0};
  double max_growth_f{0.0};
  double max_growth_g{0.0};

  std::optional<ProblemConstants> claimed;
  /// One line per claimed constant beaten by an observed ratio; empty when
  /// nothing was falsified or nothing was claimed.
  std::vector<std::string> violations;
};

/// Draws `samples` probe tuples and reports extreme ratios.  Probes are
/// deterministic in seed: t ~ U[0, horizon], x ~ 10 * N(0, I_n), and
/// u = project(K, 10 * N(0, I_m)).  Lipschitz ratios use two independent
/// tuples; the monotonicity ratio <F(t,x,u1) - F(t,x,u2), u1 - u2> / ||u1 - u2||^2
/// reuses one (t, x) with two controls and skips pairs with
/// ||u1 - u2|| < 1e-12.  Throws std::invalid_argument unless samples >= 1.
AssumptionReport verify_assumptions(const SdviProblem& problem,
                                    const std::optional<ProblemConstants>& claimed, int samples,
                                    std::uint64_t seed);

/// Key: value rendering of the report, one line per field, stable across
/// runs with equal inputs.
std::string format_report(const AssumptionReport& report);

}  // namespace sdvi
