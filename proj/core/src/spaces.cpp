#include "conemet/spaces.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "conemet/sampling.hpp"

namespace conemet {

OrderedVectorSpace OrderedVectorSpace::orthant_lp(int dim, double p,
                                                  double tolerance) {
  return make(dim, NormSpec::lp(p), ConeSpec::orthant(dim), tolerance);
}

OrderedVectorSpace OrderedVectorSpace::make(int dim, NormSpec norm,
                                            ConeSpec cone, double tolerance) {
  OrderedVectorSpace s{dim, std::move(norm), std::move(cone), tolerance};
  validate_space(s);
  return s;
}

void validate_space(const OrderedVectorSpace& space) {
  if (space.dim <= 0) {
    throw std::invalid_argument("OrderedVectorSpace: dim must be positive");
  }
  space.norm.validate(space.dim);
  if (space.cone.dim() != space.dim) {
    throw std::invalid_argument(
        "OrderedVectorSpace: cone lives in dimension " +
        std::to_string(space.cone.dim()) + ", space has dimension " +
        std::to_string(space.dim));
  }
  if (!(space.tolerance >= 0.0)) {
    throw std::invalid_argument(
        "OrderedVectorSpace: tolerance must be nonnegative");
  }
}

bool leq(const OrderedVectorSpace& space, const Eigen::VectorXd& x,
         const Eigen::VectorXd& y) {
  return cone_contains(space.cone, y - x, space.tolerance);
}

bool strictly_less(const OrderedVectorSpace& space, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y, double margin) {
  return interior_contains(space.cone, y - x, margin);
}

double estimate_normality_constant(const OrderedVectorSpace& space,
                                   int sample_count, std::uint64_t seed) {
  double best = 0.0;
  auto consider = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    const double ny = space.norm_of(y);
    if (ny <= 1e-15) return;
    best = std::max(best, space.norm_of(x) / ny);
  };

  const auto rays = canonical_rays(space.cone);
  for (const auto& r : rays) {
    consider(r, r);
    for (const auto& s : rays) consider(r, r + s);
  }
  for (int t = 0; t < sample_count; ++t) {
    const Eigen::VectorXd p1 =
        sample_cone_point(space.cone, seed, 2 * static_cast<std::uint64_t>(t));
    const Eigen::VectorXd p2 = sample_cone_point(
        space.cone, seed, 2 * static_cast<std::uint64_t>(t) + 1);
    consider(p1, p1 + p2);
  }
  return best;
}

}  // namespace conemet
