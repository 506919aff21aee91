#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "conemet/cone_metrics.hpp"
#include "conemet/points.hpp"
#include "conemet/spaces.hpp"

namespace conemet {

enum class MetrizeMethod {
  MonotoneFastPath,
  DualFastPath,
  EuclideanProjection,
  LocalSearch,
};

const char* to_string(MetrizeMethod method);

struct MetrizationResult {
  double value = 0.0;
  Eigen::VectorXd minimizer;
  MetrizeMethod method = MetrizeMethod::MonotoneFastPath;
  /// Certified gap: value - (a dual lower bound on the infimum), so the
  /// exact infimum lies in [value - error_bound, value]. Zero on the fast
  /// paths; a failed solve surfaces as a large error_bound, never as a
  /// silently wrong value.
  double error_bound = 0.0;
};

/// The induced scalar distance for a cone value c in the cone:
///   inf { ||u|| : c <= u }.
/// Method selection: monotone norm on the orthant evaluates ||c|| directly;
/// c in the dual cone with the Euclidean norm gives ||c|| as well; the
/// Euclidean norm reduces to a cone projection of -c; anything else runs a
/// projected local search seeded by the Euclidean solution, with the gap
/// bounded through norm equivalence constants.
MetrizationResult metrize_vector(const OrderedVectorSpace& space,
                                 const Eigen::VectorXd& c);

/// Same computation with a forced method, for consistency checks. Throws
/// std::invalid_argument when the method's precondition fails (for example
/// forcing the monotone fast path off the orthant).
MetrizationResult metrize_vector_with_method(const OrderedVectorSpace& space,
                                             const Eigen::VectorXd& c,
                                             MetrizeMethod method);

/// The scalar metric d(x, y) = metrize(D(x, y)) induced by a cone metric,
/// metrized in the given space (defaults to the metric's codomain).
class EquivalentMetric {
 public:
  explicit EquivalentMetric(ConeMetric metric);
  EquivalentMetric(ConeMetric metric, OrderedVectorSpace space);

  double operator()(const Point& x, const Point& y) const;
  MetrizationResult detailed(const Point& x, const Point& y) const;

  const ConeMetric& metric() const { return metric_; }
  const OrderedVectorSpace& space() const { return space_; }

 private:
  ConeMetric metric_;
  OrderedVectorSpace space_;
};

struct LabeledMatrix {
  std::vector<std::string> labels;
  Eigen::MatrixXd values;
  std::vector<MetrizeMethod> methods;      // per pair i < j, row-major
  std::vector<double> error_bounds;        // same layout
};

LabeledMatrix distance_matrix(const ConeMetric& metric,
                              const OrderedVectorSpace& space,
                              const std::vector<Point>& points);

struct MetricAxiomReport {
  int point_count = 0;
  int pair_count = 0;
  int triple_count = 0;
  double max_self_distance = 0.0;
  double max_asymmetry = 0.0;
  double max_negative = 0.0;
  double max_triangle_violation = 0.0;
  int zero_distinct_pairs = 0;
  std::optional<std::array<int, 3>> worst_triple;
  bool pass(double tau) const {
    return max_self_distance <= tau && max_asymmetry <= tau &&
           max_negative <= tau && max_triangle_violation <= tau &&
           zero_distinct_pairs == 0;
  }
};

/// Scalar metric axioms for an arbitrary distance evaluator over indexed
/// points. All ordered triples are enumerated when their count is within
/// `triple_cap`; beyond that a deterministic sample of `triple_cap` triples
/// is checked.
MetricAxiomReport check_metric_axioms(
    const std::function<double(int, int)>& distance, int point_count,
    double tau, int triple_cap = 100000, std::uint64_t seed = 0);

struct DirectionEquivalence {
  Eigen::VectorXd direction;
  double epsilon = 0.0;
  Eigen::VectorXd scaled_direction;
  /// 1-based index N with D(x_n, x) strictly below the scaled direction for
  /// every n >= N; empty if no such N exists within the sequence.
  std::optional<int> domination_index;
  /// 1-based index N with d(x_n, x) < epsilon for every n >= N.
  std::optional<int> scalar_index;
  double tail_sup = 0.0;
  bool consistent() const {
    return domination_index.has_value() == scalar_index.has_value();
  }
};

struct ConvergenceEquivalenceReport {
  std::vector<DirectionEquivalence> directions;
  bool cone_converges = false;
  bool scalar_converges = false;
  bool agreement() const { return cone_converges == scalar_converges; }
};

/// Compares cone convergence against scalar convergence along a finite
/// sequence. For each interior direction c with radius epsilon (defaulting
/// to the max-coordinate of c), the dominating vector is c rescaled to
/// space-norm epsilon, mirroring the choice of an interior point of norm
/// below epsilon; the scalar side tests d(x_n, x) < epsilon. Directions
/// must be interior with the given margin, before and after rescaling.
ConvergenceEquivalenceReport check_convergence_equivalence(
    const ConeMetric& metric, const OrderedVectorSpace& space,
    const std::vector<Point>& sequence, const Point& limit,
    const std::vector<Eigen::VectorXd>& directions, double margin = kDefaultMargin,
    const std::vector<double>& epsilons = {});

}  // namespace conemet
