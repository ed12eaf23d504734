#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace sdvi {

/// SplitMix64 finalizer (Steele/Lea/Flood mixing constants).  Used to derive
/// independent stream seeds from (ensemble seed, path index) so that path
/// streams can be created in any order, on any thread, with the same result.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Seed of the stream driving path `path_index` of an ensemble rooted at
/// `seed`.  Defined as mix64(mix64(seed) + golden_gamma * (path_index + 1)).
std::uint64_t path_stream_seed(std::uint64_t seed, std::uint64_t path_index) noexcept;

/// Stream of standard normal variates.
///
/// The engine is std::mt19937_64 (output sequence fixed by the standard) and
/// variates are produced by the Box-Muller transform on 53-bit uniforms in
/// (0, 1].  Both choices are frozen: golden outputs downstream depend on them.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t stream_seed);

  /// One draw from U(0, 1], ((raw >> 11) + 1) * 2^-53.  Never returns 0.
  double uniform();

  /// One N(0, 1) draw.
  double normal();

  /// `dim` independent N(0, 1) draws, in order.
  Eigen::VectorXd normal_vector(Eigen::Index dim);

 private:
  std::mt19937_64 engine_;
  double spare_{0.0};
  bool has_spare_{false};
};

/// Randomness handle seen by the VI map at one grid node.  Both bundled
/// problems ignore it; it exists so problems with genuinely random F keep
/// per-path, per-node reproducibility.  stream() is deterministic in the
/// (seed, path_index, node) triple and independent of the Brownian stream.
class Scenario {
 public:
  Scenario(std::uint64_t seed, std::uint64_t path_index, std::int64_t node) noexcept
      : seed_(seed), path_index_(path_index), node_(node) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t path_index() const noexcept { return path_index_; }
  std::int64_t node() const noexcept { return node_; }

  NormalStream stream() const;

 private:
  std::uint64_t seed_;
  std::uint64_t path_index_;
  std::int64_t node_;
};

}  // namespace sdvi
