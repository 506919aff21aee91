#include "conemet/metrize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace conemet {

const char* to_string(MetrizeMethod method) {
  switch (method) {
    case MetrizeMethod::MonotoneFastPath: return "monotone-fast-path";
    case MetrizeMethod::DualFastPath: return "dual-fast-path";
    case MetrizeMethod::EuclideanProjection: return "euclidean-projection";
    case MetrizeMethod::LocalSearch: return "local-search";
  }
  return "unknown";
}

namespace {

// Any unit vector y in the dual cone certifies <y, c> <= inf{||u||_2 : c <= u};
// the Euclidean projection of a candidate minimizer onto the dual cone
// recovers the optimal multiplier in the limit.
double euclidean_lower_bound(const ConeSpec& cone, const Eigen::VectorXd& c,
                             const Eigen::VectorXd& minimizer) {
  const ProjectionResult dual = project_onto_dual_cone(cone, minimizer);
  const double n = dual.point.norm();
  if (!dual.converged || n <= 1e-14) return 0.0;
  return std::max(0.0, dual.point.dot(c) / n);
}

MetrizationResult monotone_fast_path(const OrderedVectorSpace& space,
                                     const Eigen::VectorXd& c) {
  MetrizationResult r;
  r.method = MetrizeMethod::MonotoneFastPath;
  r.minimizer = c.cwiseMax(0.0);
  r.value = space.norm_of(r.minimizer);
  r.error_bound = 0.0;
  return r;
}

MetrizationResult dual_fast_path(const OrderedVectorSpace& space,
                                 const Eigen::VectorXd& c) {
  MetrizationResult r;
  r.method = MetrizeMethod::DualFastPath;
  r.minimizer = c;
  r.value = space.norm_of(c);
  r.error_bound = 0.0;
  return r;
}

MetrizationResult euclidean_projection_path(const OrderedVectorSpace& space,
                                            const Eigen::VectorXd& c) {
  MetrizationResult r;
  r.method = MetrizeMethod::EuclideanProjection;
  const ProjectionResult proj = project_onto_cone(space.cone, -c);
  Eigen::VectorXd m = c + proj.point;
  double value = m.norm();
  if (value > c.norm()) {
    m = c;
    value = c.norm();
  }
  if (value <= 1e-15) {
    r.minimizer = m;
    r.value = 0.0;
    r.error_bound = 0.0;
    return r;
  }
  const double lb = euclidean_lower_bound(space.cone, c, m);
  r.minimizer = m;
  r.value = value;
  r.error_bound = std::max(0.0, value - lb);
  return r;
}

Eigen::VectorXd norm_subgradient(const NormSpec& norm,
                                 const Eigen::VectorXd& v) {
  const Eigen::Index n = v.size();
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  const double p = norm.p();
  if (p == NormSpec::kInf) {
    Eigen::Index k = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double w = norm.weighted() ? norm.weights()[i] : 1.0;
      const double t = w * std::abs(v[i]);
      if (t > best) {
        best = t;
        k = i;
      }
    }
    const double w = norm.weighted() ? norm.weights()[k] : 1.0;
    g[k] = w * (v[k] >= 0.0 ? 1.0 : -1.0);
    return g;
  }
  const double nv = norm.evaluate(v);
  if (nv <= 0.0) return g;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double w = norm.weighted() ? norm.weights()[i] : 1.0;
    const double s = v[i] >= 0.0 ? 1.0 : -1.0;
    g[i] = w * s * std::pow(std::abs(v[i]) / nv, p - 1.0);
  }
  return g;
}

MetrizationResult local_search_path(const OrderedVectorSpace& space,
                                    const Eigen::VectorXd& c) {
  if (space.norm.is_quasi() && space.cone.kind() != ConeKind::Orthant) {
    throw std::invalid_argument(
        "metrize: quasinorm metrization is only supported on the orthant");
  }
  MetrizationResult r;
  r.method = MetrizeMethod::LocalSearch;

  const ProjectionResult eproj = project_onto_cone(space.cone, -c);
  const double elb = euclidean_lower_bound(space.cone, c, c + eproj.point);
  const auto [meq, Meq] = space.norm.euclidean_equivalence(space.dim);
  const double lb = meq * elb;

  Eigen::VectorXd p_best = Eigen::VectorXd::Zero(space.dim);
  double f_best = space.norm_of(c);
  auto consider = [&](const Eigen::VectorXd& p) {
    const double f = space.norm_of(c + p);
    if (f < f_best) {
      f_best = f;
      p_best = p;
    }
  };
  consider(eproj.point);

  Eigen::VectorXd p = eproj.point;
  for (int it = 1; it <= 400; ++it) {
    const Eigen::VectorXd v = c + p;
    Eigen::VectorXd g = norm_subgradient(space.norm, v);
    const double gn2 = g.squaredNorm();
    if (gn2 <= 1e-30) break;
    const double f = space.norm_of(v);
    double step = (f - lb) / gn2;
    step = std::min(step, (1.0 + c.norm()) / std::sqrt(gn2));
    p = project_onto_cone(space.cone, p - step * g).point;
    consider(p);
  }

  r.minimizer = c + p_best;
  r.value = f_best;
  r.error_bound = std::max(0.0, f_best - lb);
  return r;
}

}  // namespace

MetrizationResult metrize_vector(const OrderedVectorSpace& space,
                                 const Eigen::VectorXd& c) {
  if (c.size() != space.dim) {
    throw std::invalid_argument("metrize: vector dimension mismatch");
  }
  if (!cone_contains(space.cone, c, space.tolerance)) {
    throw std::invalid_argument(
        "metrize: the value lies outside the cone; cone metrics take values "
        "in the cone");
  }
  if (space.cone.kind() == ConeKind::Orthant) {
    return monotone_fast_path(space, c);
  }
  if (space.norm.is_euclidean()) {
    if (dual_contains(space.cone, c, space.tolerance)) {
      return dual_fast_path(space, c);
    }
    return euclidean_projection_path(space, c);
  }
  return local_search_path(space, c);
}

MetrizationResult metrize_vector_with_method(const OrderedVectorSpace& space,
                                             const Eigen::VectorXd& c,
                                             MetrizeMethod method) {
  if (c.size() != space.dim) {
    throw std::invalid_argument("metrize: vector dimension mismatch");
  }
  if (!cone_contains(space.cone, c, space.tolerance)) {
    throw std::invalid_argument("metrize: the value lies outside the cone");
  }
  switch (method) {
    case MetrizeMethod::MonotoneFastPath:
      if (space.cone.kind() != ConeKind::Orthant) {
        throw std::invalid_argument(
            "metrize: the monotone fast path needs the orthant cone");
      }
      return monotone_fast_path(space, c);
    case MetrizeMethod::DualFastPath:
      if (!space.norm.is_euclidean() ||
          !dual_contains(space.cone, c, space.tolerance)) {
        throw std::invalid_argument(
            "metrize: the dual fast path needs the Euclidean norm and a "
            "value in the dual cone");
      }
      return dual_fast_path(space, c);
    case MetrizeMethod::EuclideanProjection:
      if (!space.norm.is_euclidean()) {
        throw std::invalid_argument(
            "metrize: the projection path needs the Euclidean norm");
      }
      return euclidean_projection_path(space, c);
    case MetrizeMethod::LocalSearch:
      return local_search_path(space, c);
  }
  throw std::invalid_argument("metrize: unknown method");
}

EquivalentMetric::EquivalentMetric(ConeMetric metric)
    : metric_(std::move(metric)), space_(metric_.codomain()) {}

EquivalentMetric::EquivalentMetric(ConeMetric metric, OrderedVectorSpace space)
    : metric_(std::move(metric)), space_(std::move(space)) {
  if (space_.dim != metric_.codomain().dim) {
    throw std::invalid_argument(
        "EquivalentMetric: space dimension does not match the codomain");
  }
}

double EquivalentMetric::operator()(const Point& x, const Point& y) const {
  return detailed(x, y).value;
}

MetrizationResult EquivalentMetric::detailed(const Point& x,
                                             const Point& y) const {
  return metrize_vector(space_, metric_.eval(x, y));
}

LabeledMatrix distance_matrix(const ConeMetric& metric,
                              const OrderedVectorSpace& space,
                              const std::vector<Point>& points) {
  const EquivalentMetric eq(metric, space);
  const int n = static_cast<int>(points.size());
  LabeledMatrix out;
  out.labels.reserve(points.size());
  for (int i = 0; i < n; ++i) {
    out.labels.push_back(points[i].is_label() ? points[i].as_label()
                                              : "p" + std::to_string(i));
  }
  out.values = Eigen::MatrixXd::Zero(n, n);
  out.methods.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  out.error_bounds.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const MetrizationResult r = eq.detailed(points[i], points[j]);
      out.values(i, j) = r.value;
      out.values(j, i) = r.value;
      out.methods.push_back(r.method);
      out.error_bounds.push_back(r.error_bound);
    }
  }
  return out;
}

MetricAxiomReport check_metric_axioms(
    const std::function<double(int, int)>& distance, int point_count,
    double tau, int triple_cap, std::uint64_t seed) {
  if (point_count < 0) {
    throw std::invalid_argument("check_metric_axioms: negative point count");
  }
  MetricAxiomReport rep;
  rep.point_count = point_count;
  const int n = point_count;
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d(i, j) = distance(i, j);
  }

  for (int i = 0; i < n; ++i) {
    rep.max_self_distance = std::max(rep.max_self_distance, std::abs(d(i, i)));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++rep.pair_count;
      rep.max_asymmetry =
          std::max(rep.max_asymmetry, std::abs(d(i, j) - d(j, i)));
      rep.max_negative = std::max({rep.max_negative, -d(i, j), -d(j, i)});
      if (std::abs(d(i, j)) <= tau) ++rep.zero_distinct_pairs;
    }
  }

  auto check_triple = [&](int i, int j, int k) {
    ++rep.triple_count;
    const double gap = d(i, j) - d(i, k) - d(k, j);
    if (gap > rep.max_triangle_violation) {
      rep.max_triangle_violation = gap;
      rep.worst_triple = {{i, j, k}};
    }
  };

  const long long total = static_cast<long long>(n) * n * n;
  if (total <= triple_cap) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) check_triple(i, j, k);
      }
    }
  } else if (n > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < triple_cap; ++t) {
      check_triple(pick(rng), pick(rng), pick(rng));
    }
  }
  return rep;
}

ConvergenceEquivalenceReport check_convergence_equivalence(
    const ConeMetric& metric, const OrderedVectorSpace& space,
    const std::vector<Point>& sequence, const Point& limit,
    const std::vector<Eigen::VectorXd>& directions, double margin,
    const std::vector<double>& epsilons) {
  if (sequence.empty()) {
    throw std::invalid_argument(
        "check_convergence_equivalence: empty sequence");
  }
  if (!epsilons.empty() && epsilons.size() != directions.size()) {
    throw std::invalid_argument(
        "check_convergence_equivalence: one epsilon per direction");
  }

  const EquivalentMetric eq(metric, space);
  const int len = static_cast<int>(sequence.size());
  std::vector<Eigen::VectorXd> cone_dist(len);
  std::vector<double> scalar_dist(len);
  for (int i = 0; i < len; ++i) {
    cone_dist[i] = metric.eval(sequence[i], limit);
    scalar_dist[i] = metrize_vector(space, cone_dist[i]).value;
  }

  ConvergenceEquivalenceReport rep;
  rep.cone_converges = true;
  rep.scalar_converges = true;

  for (size_t di = 0; di < directions.size(); ++di) {
    const Eigen::VectorXd& c = directions[di];
    if (c.size() != space.dim) {
      throw std::invalid_argument(
          "check_convergence_equivalence: direction dimension mismatch");
    }
    if (!interior_contains(space.cone, c, margin)) {
      throw std::invalid_argument(
          "check_convergence_equivalence: direction " +
          std::to_string(di) + " is not interior at the given margin");
    }
    DirectionEquivalence de;
    de.direction = c;
    de.epsilon = epsilons.empty() ? c.cwiseAbs().maxCoeff() : epsilons[di];
    if (!(de.epsilon > 0.0)) {
      throw std::invalid_argument(
          "check_convergence_equivalence: epsilon must be positive");
    }
    de.scaled_direction = c * (de.epsilon / space.norm_of(c));
    if (!interior_contains(space.cone, de.scaled_direction, margin)) {
      throw std::invalid_argument(
          "check_convergence_equivalence: direction " + std::to_string(di) +
          " rescaled to norm epsilon is no longer interior at the given "
          "margin; epsilon is too small");
    }

    int first_ok_suffix = len;  // 0-based start of the all-dominated suffix
    for (int i = len - 1; i >= 0; --i) {
      if (strictly_less(space, cone_dist[i], de.scaled_direction, margin)) {
        first_ok_suffix = i;
      } else {
        break;
      }
    }
    if (first_ok_suffix < len) de.domination_index = first_ok_suffix + 1;

    int scalar_suffix = len;
    for (int i = len - 1; i >= 0; --i) {
      if (scalar_dist[i] < de.epsilon) {
        scalar_suffix = i;
      } else {
        break;
      }
    }
    if (scalar_suffix < len) de.scalar_index = scalar_suffix + 1;

    const int tail_start = de.domination_index ? first_ok_suffix : 0;
    for (int i = tail_start; i < len; ++i) {
      de.tail_sup = std::max(de.tail_sup, scalar_dist[i]);
    }

    rep.cone_converges = rep.cone_converges && de.domination_index.has_value();
    rep.scalar_converges =
        rep.scalar_converges && de.scalar_index.has_value();
    rep.directions.push_back(std::move(de));
  }
  return rep;
}

}  // namespace conemet
