#pragma once

#include <vector>

#include "conemet/cone_metrics.hpp"
#include "conemet/points.hpp"
#include "conemet/self_maps.hpp"
#include "conemet/spaces.hpp"

namespace conemet {

/// Record of a fixed-point iteration x_{n+1} = T(x_n), measured with the
/// metrized distance of a cone metric.
struct IterationTrace {
  std::vector<Point> iterates;
  /// distances[n] = d(x_{n+1}, x_n); nonnegative.
  std::vector<double> distances;
  /// distances_to_final[n] = d(x_n, x_N) against the last iterate.
  std::vector<double> distances_to_final;
  bool converged = false;
  /// Set when a step distance exceeds one million times the first nonzero
  /// step; reported, never thrown.
  bool diverged = false;
  /// Median of d(x_{n+1},x_n)/d(x_n,x_{n-1}) over the last ten steps with a
  /// nonzero denominator; zero when no such step exists.
  double estimated_rate = 0.0;

  int steps() const { return static_cast<int>(distances.size()); }
};

/// Iterate T from x0 until the metrized step distance drops to tol or
/// max_iter steps have run. Requires tol > 0 and max_iter >= 1. A map that
/// fails to act on an iterate propagates its exception mid-run.
IterationTrace banach_iterate(const ConeMetric& cm,
                              const OrderedVectorSpace& space, const SelfMap& T,
                              const Point& x0, double tol, int max_iter);

/// Result of checking a trace against a contraction factor alpha.
struct RateReport {
  double alpha = 0.0;
  bool stepwise_ok = false;
  bool apriori_ok = false;
  double max_stepwise_violation = 0.0;
  double max_apriori_violation = 0.0;
  int first_stepwise_failure = -1;
  int first_apriori_failure = -1;

  bool pass() const { return stepwise_ok && apriori_ok; }
};

/// Check d(x_{n+1}, x_n) <= alpha * d(x_n, x_{n-1}) + tau for every step, and
/// the tail bound d(x_n, x_N) <= alpha^n / (1 - alpha) * d(x_1, x_0) + tau
/// with the final iterate standing in for the fixed point. Requires
/// 0 <= alpha < 1 and a trace with at least three iterates.
RateReport verify_rate_bounds(const IterationTrace& trace, double alpha,
                              double tau = 1e-9);

}  // namespace conemet
