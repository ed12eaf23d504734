#pragma once

#include <vector>

#include <Eigen/Core>

namespace sdvi {

/// Closed convex constraint set with an exact closed-form projection.
///
/// Supported shapes: coordinate boxes (+-infinity bounds mean "no bound on
/// that side"), the nonnegative orthant, the whole space, and finite products
/// of these.  Projections are single clamps per coordinate, never iterative,
/// so project(project(v)) == project(v) holds bitwise.
class ConvexSet {
 public:
  enum class Kind { kBox, kNonnegOrthant, kWholeSpace, kProduct };

  /// Box {v : lower <= v <= upper}.  Bounds may be +-infinity but never NaN,
  /// and lower(i) <= upper(i) must hold for every coordinate.
  static ConvexSet box(Eigen::VectorXd lower, Eigen::VectorXd upper);

  /// {v in R^dim : v >= 0}.
  static ConvexSet nonneg_orthant(Eigen::Index dim);

  /// R^dim (projection is the identity).
  static ConvexSet whole_space(Eigen::Index dim);

  /// Cartesian product of members, in order; dimension is the sum.
  static ConvexSet product(std::vector<ConvexSet> members);

  Kind kind() const noexcept { return kind_; }
  Eigen::Index dim() const noexcept { return dim_; }

  /// Euclidean projection onto the set.  Throws std::invalid_argument on a
  /// dimension mismatch or non-finite input.
  Eigen::VectorXd project(const Eigen::VectorXd& v) const;

  /// ||v - project(v)||.  Zero exactly when v is in the set.
  double distance(const Eigen::VectorXd& v) const;

  /// Membership test: distance(v) <= tol.
  bool contains(const Eigen::VectorXd& v, double tol = 0.0) const;

 private:
  ConvexSet() = default;

  Kind kind_{Kind::kWholeSpace};
  Eigen::Index dim_{0};
  Eigen::VectorXd lower_, upper_;   // box only
  std::vector<ConvexSet> members_;  // product only
};

/// Free-function spellings used throughout the library.
Eigen::VectorXd project(const ConvexSet& set, const Eigen::VectorXd& v);
double distance_to_set(const ConvexSet& set, const Eigen::VectorXd& v);

}  // namespace sdvi
