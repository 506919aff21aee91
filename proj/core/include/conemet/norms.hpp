#pragma once

#include <Eigen/Core>
#include <limits>
#include <utility>

namespace conemet {

/// Norm on R^n: the l^p family plus weighted variants,
///   ||v||_{p,w} = (sum_i w_i |v_i|^p)^(1/p),   ||v||_{inf,w} = max_i w_i |v_i|.
///
/// Exponents p in (0, 1) are accepted; they define quasi-norms (homogeneous
/// and positive but not subadditive). Callers that rely on the triangle
/// inequality must check is_quasi() first.
class NormSpec {
 public:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  /// Unweighted l^p. Requires p > 0 (use kInf for the max norm).
  static NormSpec lp(double p);

  /// Weighted l^p with strictly positive weights, one per coordinate.
  static NormSpec weighted_lp(double p, Eigen::VectorXd weights);

  double evaluate(const Eigen::VectorXd& v) const;

  double p() const { return p_; }
  bool weighted() const { return weights_.size() > 0; }
  const Eigen::VectorXd& weights() const { return weights_; }

  bool is_euclidean() const { return p_ == 2.0 && !weighted(); }
  bool is_quasi() const { return p_ < 1.0; }

  /// Constants (m, M) with m*||v||_2 <= ||v|| <= M*||v||_2 on R^dim.
  std::pair<double, double> euclidean_equivalence(int dim) const;

  /// Throws std::invalid_argument when p or the weights cannot define a
  /// norm on R^dim.
  void validate(int dim) const;

 private:
  NormSpec(double p, Eigen::VectorXd w) : p_(p), weights_(std::move(w)) {}

  double p_ = 2.0;
  Eigen::VectorXd weights_;
};

}  // namespace conemet
