#include "conemet/fixpoint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "conemet/metrize.hpp"

namespace conemet {

IterationTrace banach_iterate(const ConeMetric& cm,
                              const OrderedVectorSpace& space, const SelfMap& T,
                              const Point& x0, double tol, int max_iter) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("banach_iterate: tol must be positive");
  }
  if (max_iter < 1) {
    throw std::invalid_argument("banach_iterate: max_iter must be >= 1");
  }
  const EquivalentMetric d(cm, space);

  IterationTrace trace;
  trace.iterates.push_back(x0);
  double first_nonzero = 0.0;
  for (int n = 0; n < max_iter; ++n) {
    const Point next = T(trace.iterates.back());
    const double step = d(next, trace.iterates.back());
    trace.iterates.push_back(next);
    trace.distances.push_back(step);
    if (first_nonzero == 0.0 && step > 0.0) first_nonzero = step;
    if (!std::isfinite(step) ||
        (first_nonzero > 0.0 && step > 1e6 * first_nonzero)) {
      trace.diverged = true;
      break;
    }
    if (step <= tol) {
      trace.converged = true;
      break;
    }
  }

  const Point& final_point = trace.iterates.back();
  trace.distances_to_final.reserve(trace.iterates.size());
  for (const Point& p : trace.iterates) {
    trace.distances_to_final.push_back(d(p, final_point));
  }

  std::vector<double> ratios;
  const int m = trace.steps();
  for (int i = std::max(1, m - 10); i < m; ++i) {
    if (trace.distances[static_cast<size_t>(i) - 1] > 0.0) {
      ratios.push_back(trace.distances[static_cast<size_t>(i)] /
                       trace.distances[static_cast<size_t>(i) - 1]);
    }
  }
  if (!ratios.empty()) {
    std::sort(ratios.begin(), ratios.end());
    const size_t mid = ratios.size() / 2;
    trace.estimated_rate = (ratios.size() % 2 == 1)
                               ? ratios[mid]
                               : 0.5 * (ratios[mid - 1] + ratios[mid]);
  }
  return trace;
}

RateReport verify_rate_bounds(const IterationTrace& trace, double alpha,
                              double tau) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument(
        "verify_rate_bounds: alpha must lie in [0,1)");
  }
  if (trace.iterates.size() < 3 || trace.distances.size() < 2) {
    throw std::invalid_argument(
        "verify_rate_bounds: the trace needs at least three iterates");
  }
  if (trace.distances_to_final.size() != trace.iterates.size()) {
    throw std::invalid_argument(
        "verify_rate_bounds: the trace is missing distances to the final "
        "iterate");
  }

  RateReport rep;
  rep.alpha = alpha;
  rep.stepwise_ok = true;
  rep.apriori_ok = true;

  for (size_t n = 1; n < trace.distances.size(); ++n) {
    const double bound = alpha * trace.distances[n - 1] + tau;
    const double excess = trace.distances[n] - bound;
    if (excess > 0.0) {
      rep.stepwise_ok = false;
      if (rep.first_stepwise_failure < 0) {
        rep.first_stepwise_failure = static_cast<int>(n);
      }
      rep.max_stepwise_violation =
          std::max(rep.max_stepwise_violation, excess);
    }
  }

  const double d0 = trace.distances[0];
  double alpha_pow = 1.0;
  for (size_t n = 0; n < trace.distances_to_final.size(); ++n) {
    const double bound = alpha_pow / (1.0 - alpha) * d0 + tau;
    const double excess = trace.distances_to_final[n] - bound;
    if (excess > 0.0) {
      rep.apriori_ok = false;
      if (rep.first_apriori_failure < 0) {
        rep.first_apriori_failure = static_cast<int>(n);
      }
      rep.max_apriori_violation = std::max(rep.max_apriori_violation, excess);
    }
    alpha_pow *= alpha;
  }
  return rep;
}

}  // namespace conemet
