#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "conemet/cones.hpp"
#include "conemet/norms.hpp"

namespace conemet {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kDefaultMargin = 1e-6;

/// Normed space R^dim ordered by a closed convex pointed cone:
/// x <= y iff y - x lies in the cone.
struct OrderedVectorSpace {
  int dim = 0;
  NormSpec norm = NormSpec::lp(2.0);
  ConeSpec cone = ConeSpec::orthant(1);
  double tolerance = kDefaultTolerance;

  static OrderedVectorSpace orthant_lp(int dim, double p,
                                       double tolerance = kDefaultTolerance);
  static OrderedVectorSpace make(int dim, NormSpec norm, ConeSpec cone,
                                 double tolerance = kDefaultTolerance);

  double norm_of(const Eigen::VectorXd& v) const { return norm.evaluate(v); }
};

/// Throws std::invalid_argument when dim, norm, and cone disagree.
void validate_space(const OrderedVectorSpace& space);

bool leq(const OrderedVectorSpace& space, const Eigen::VectorXd& x,
         const Eigen::VectorXd& y);

bool strictly_less(const OrderedVectorSpace& space, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y, double margin = kDefaultMargin);

/// Sampled lower estimate of the normality constant
///   K = sup { ||x|| / ||y|| : 0 <= x <= y, y != 0 },
/// from canonical ray pairs plus `sample_count` seeded random pairs
/// x = p1, y = p1 + p2 with p1, p2 in the cone. Deterministic per seed; an
/// estimate above 1 + epsilon certifies non-normality of unit constant.
double estimate_normality_constant(const OrderedVectorSpace& space,
                                   int sample_count, std::uint64_t seed);

}  // namespace conemet
