#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "conemet/cones.hpp"

namespace conemet {

/// Deterministic, structurally extreme rays of the cone: axes for the
/// orthant, the axis plus boundary rays for the second-order cone, the
/// generators themselves, inward row normals for halfspace cones.
std::vector<Eigen::VectorXd> canonical_rays(const ConeSpec& cone);

/// The i-th sample of a seeded stream of cone points. Sample i depends only
/// on (seed, i), never on how many other samples were drawn, so enlarging a
/// sample set keeps every previously drawn point.
Eigen::VectorXd sample_cone_point(const ConeSpec& cone, std::uint64_t seed,
                                  std::uint64_t index);

}  // namespace conemet
