#include "sdvi/rng.hpp"

#include <cmath>
#include <numbers>

namespace sdvi {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
// Distinguishes scenario streams from Brownian streams derived from the same
// (seed, path_index).
constexpr std::uint64_t kScenarioTag = 0xA3EC4E9D25B0C9E1ULL;

}  // namespace

std::uint64_t mix64(std::uint64_t z) noexcept {
  z += kGoldenGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t path_stream_seed(std::uint64_t seed, std::uint64_t path_index) noexcept {
  return mix64(mix64(seed) + kGoldenGamma * (path_index + 1));
}

NormalStream::NormalStream(std::uint64_t stream_seed) : engine_(stream_seed) {}

double NormalStream::uniform() {
  // 53-bit mantissa, shifted into (0, 1] so log() below never sees 0.
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
}

double NormalStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller: two uniforms to two independent normals; one is cached.
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

Eigen::VectorXd NormalStream::normal_vector(Eigen::Index dim) {
  Eigen::VectorXd z(dim);
  for (Eigen::Index i = 0; i < dim; ++i) z[i] = normal();
  return z;
}

NormalStream Scenario::stream() const {
  const std::uint64_t base = path_stream_seed(seed_, path_index_);
  return NormalStream(mix64(base ^ kScenarioTag ^ (static_cast<std::uint64_t>(node_) * kGoldenGamma)));
}

}  // namespace sdvi
