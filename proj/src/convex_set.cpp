#include "sdvi/convex_set.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sdvi {
namespace {

void check_input(const ConvexSet& set, const Eigen::VectorXd& v) {
  if (v.size() != set.dim())
    throw std::invalid_argument("project: vector has dimension " + std::to_string(v.size()) +
                                ", set has dimension " + std::to_string(set.dim()));
  if (!v.allFinite()) throw std::invalid_argument("project: non-finite input");
}

}  // namespace

ConvexSet ConvexSet::box(Eigen::VectorXd lower, Eigen::VectorXd upper) {
  if (lower.size() != upper.size())
    throw std::invalid_argument("box: bound dimensions differ");
  if (lower.size() == 0) throw std::invalid_argument("box: empty bounds");
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    if (std::isnan(lower[i]) || std::isnan(upper[i]))
      throw std::invalid_argument("box: NaN bound");
    if (!(lower[i] <= upper[i]))
      throw std::invalid_argument("box: lower > upper at coordinate " + std::to_string(i));
  }
  ConvexSet s;
  s.kind_ = Kind::kBox;
  s.dim_ = lower.size();
  s.lower_ = std::move(lower);
  s.upper_ = std::move(upper);
  return s;
}

ConvexSet ConvexSet::nonneg_orthant(Eigen::Index dim) {
  if (dim < 1) throw std::invalid_argument("nonneg_orthant: dimension must be >= 1");
  ConvexSet s;
  s.kind_ = Kind::kNonnegOrthant;
  s.dim_ = dim;
  return s;
}

ConvexSet ConvexSet::whole_space(Eigen::Index dim) {
  if (dim < 0) throw std::invalid_argument("whole_space: negative dimension");
  ConvexSet s;
  s.kind_ = Kind::kWholeSpace;
  s.dim_ = dim;
  return s;
}

ConvexSet ConvexSet::product(std::vector<ConvexSet> members) {
  if (members.empty()) throw std::invalid_argument("product: no members");
  ConvexSet s;
  s.kind_ = Kind::kProduct;
  s.dim_ = 0;
  for (const ConvexSet& m : members) s.dim_ += m.dim();
  s.members_ = std::move(members);
  return s;
}

Eigen::VectorXd ConvexSet::project(const Eigen::VectorXd& v) const {
  check_input(*this, v);
  switch (kind_) {
    case Kind::kWholeSpace:
      return v;
    case Kind::kNonnegOrthant:
      return v.cwiseMax(0.0);
    case Kind::kBox:
      return v.cwiseMax(lower_).cwiseMin(upper_);
    case Kind::kProduct: {
      Eigen::VectorXd out(dim_);
      Eigen::Index offset = 0;
      for (const ConvexSet& m : members_) {
        out.segment(offset, m.dim()) = m.project(v.segment(offset, m.dim()));
        offset += m.dim();
      }
      return out;
    }
  }
  throw std::logic_error("project: unknown set kind");
}

double ConvexSet::distance(const Eigen::VectorXd& v) const {
  return (v - project(v)).norm();
}

bool ConvexSet::contains(const Eigen::VectorXd& v, double tol) const {
  return distance(v) <= tol;
}

Eigen::VectorXd project(const ConvexSet& set, const Eigen::VectorXd& v) {
  return set.project(v);
}

double distance_to_set(const ConvexSet& set, const Eigen::VectorXd& v) {
  return set.distance(v);
}

}  // namespace sdvi
