#include "sdvi/assumptions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sdvi/csv.hpp"

namespace sdvi {
namespace {

constexpr std::uint64_t kVerifyTag = 0x56455249ULL;  // keeps probes off path streams
constexpr double kPairFloor = 1e-12;                 // controls closer than this are skipped
// Observed > claimed * (1 + kSlack) + kSlack counts as a violation; the slack
// absorbs rounding in ratio evaluation, nothing more.
constexpr double kSlack = 1e-12;

struct Probe {
  double t;
  Eigen::VectorXd x;
  Eigen::VectorXd u;
};

Probe draw_probe(NormalStream& stream, const SdviProblem& problem) {
  Probe p;
  p.t = stream.uniform() * problem.horizon;
  p.x = 10.0 * stream.normal_vector(problem.state_dim);
  p.u = problem.constraint.project(10.0 * stream.normal_vector(problem.control_dim));
  return p;
}

bool beats(double observed, double claimed) {
  return observed > claimed * (1.0 + kSlack) + kSlack;
}

}  // namespace

AssumptionReport verify_assumptions(const SdviProblem& problem,
                                    const std::optional<ProblemConstants>& claimed, int samples,
                                    std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("verify_assumptions: samples must be >= 1");
  validate_problem(problem);
  if (claimed) validate_constants(*claimed);

  AssumptionReport report;
  report.samples = samples;
  report.seed = seed;
  report.claimed = claimed;
  report.min_monotonicity = std::numeric_limits<double>::infinity();

  NormalStream stream(mix64(mix64(seed) ^ kVerifyTag));
  const Scenario scenario(seed, 0, 0);

  for (int s = 0; s < samples; ++s) {
    const Probe p1 = draw_probe(stream, problem);
    const Probe p2 = draw_probe(stream, problem);

    // Lipschitz ratios across two independent probes.
    const double metric =
        std::abs(p1.t - p2.t) + (p1.x - p2.x).norm() + (p1.u - p2.u).norm();
    if (metric > kPairFloor) {
      const double rf = (problem.drift(p1.t, p1.x, p1.u) - problem.drift(p2.t, p2.x, p2.u)).norm();
      const double rg =
          (problem.diffusion(p1.t, p1.x, p1.u) - problem.diffusion(p2.t, p2.x, p2.u)).norm();
      const double rF = (problem.vi_map(p1.t, p1.x, p1.u, scenario) -
                         problem.vi_map(p2.t, p2.x, p2.u, scenario))
                            .norm();
      report.max_lipschitz_f = std::max(report.max_lipschitz_f, rf / metric);
      report.max_lipschitz_g = std::max(report.max_lipschitz_g, rg / metric);
      report.max_lipschitz_F = std::max(report.max_lipschitz_F, rF / metric);
    }

    // Monotonicity in u at a shared (t, x).
    const Eigen::VectorXd du = p1.u - p2.u;
    const double du2 = du.squaredNorm();
    if (du2 > kPairFloor * kPairFloor) {
      const Eigen::VectorXd dF = problem.vi_map(p1.t, p1.x, p1.u, scenario) -
                                 problem.vi_map(p1.t, p1.x, p2.u, scenario);
      report.min_monotonicity = std::min(report.min_monotonicity, dF.dot(du) / du2);
    }

    // Linear growth at single probes.
    const double denom = 1.0 + p1.x.norm() + p1.u.norm();
    report.max_growth_f =
        std::max(report.max_growth_f, problem.drift(p1.t, p1.x, p1.u).norm() / denom);
    report.max_growth_g =
        std::max(report.max_growth_g, problem.diffusion(p1.t, p1.x, p1.u).norm() / denom);
  }

  if (claimed) {
    const auto flag = [&](bool bad, const std::string& line) {
      if (bad) report.violations.push_back(line);
    };
    flag(beats(report.max_lipschitz_f, claimed->lip_f),
         "lip_f claimed " + format_double(claimed->lip_f) + " but observed " +
             format_double(report.max_lipschitz_f));
    flag(beats(report.max_lipschitz_g, claimed->lip_g),
         "lip_g claimed " + format_double(claimed->lip_g) + " but observed " +
             format_double(report.max_lipschitz_g));
    flag(beats(report.max_lipschitz_F, claimed->lip_F),
         "lip_F claimed " + format_double(claimed->lip_F) + " but observed " +
             format_double(report.max_lipschitz_F));
    flag(beats(report.max_growth_f, claimed->growth_f),
         "growth_f claimed " + format_double(claimed->growth_f) + " but observed " +
             format_double(report.max_growth_f));
    flag(beats(report.max_growth_g, claimed->growth_g),
         "growth_g claimed " + format_double(claimed->growth_g) + " but observed " +
             format_double(report.max_growth_g));
    // Monotonicity is a lower bound: observed minimum must not undercut it.
    flag(beats(claimed->mono_C, report.min_monotonicity),
         "mono_C claimed " + format_double(claimed->mono_C) + " but observed minimum " +
             format_double(report.min_monotonicity));
  }
  return report;
}

std::string format_report(const AssumptionReport& report) {
  std::ostringstream out;
  out << "samples: " << report.samples << '\n';
  out << "seed: " << report.seed << '\n';
  out << "max_lipschitz_f: " << format_double(report.max_lipschitz_f) << '\n';
  out << "max_lipschitz_g: " << format_double(report.max_lipschitz_g) << '\n';
  out << "max_lipschitz_F: " << format_double(report.max_lipschitz_F) << '\n';
  out << "min_monotonicity: " << format_double(report.min_monotonicity) << '\n';
  out << "max_growth_f: " << format_double(report.max_growth_f) << '\n';
  out << "max_growth_g: " << format_double(report.max_growth_g) << '\n';
  if (report.claimed) {
    out << "claimed lip_f: " << format_double(report.claimed->lip_f) << '\n';
    out << "claimed lip_g: " << format_double(report.claimed->lip_g) << '\n';
    out << "claimed lip_F: " << format_double(report.claimed->lip_F) << '\n';
    out << "claimed growth_f: " << format_double(report.claimed->growth_f) << '\n';
    out << "claimed growth_g: " << format_double(report.claimed->growth_g) << '\n';
    out << "claimed mono_C: " << format_double(report.claimed->mono_C) << '\n';
  } else {
    out << "claimed: none\n";
  }
  if (report.violations.empty()) {
    out << "violations: none\n";
  } else {
    out << "violations: " << report.violations.size() << '\n';
    for (const std::string& v : report.violations) out << "  - " << v << '\n';
  }
  return out.str();
}

}  // namespace sdvi
