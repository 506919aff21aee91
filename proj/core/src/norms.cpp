#include "conemet/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace conemet {

NormSpec NormSpec::lp(double p) {
  if (!(p > 0.0)) {
    throw std::invalid_argument("NormSpec: exponent must satisfy p > 0");
  }
  return NormSpec(p, Eigen::VectorXd());
}

NormSpec NormSpec::weighted_lp(double p, Eigen::VectorXd weights) {
  if (!(p > 0.0)) {
    throw std::invalid_argument("NormSpec: exponent must satisfy p > 0");
  }
  if (weights.size() == 0) {
    throw std::invalid_argument("NormSpec: weight vector is empty");
  }
  if ((weights.array() <= 0.0).any()) {
    throw std::invalid_argument("NormSpec: weights must be strictly positive");
  }
  return NormSpec(p, std::move(weights));
}

void NormSpec::validate(int dim) const {
  if (dim <= 0) {
    throw std::invalid_argument("NormSpec: dimension must be positive");
  }
  if (weighted() && weights_.size() != dim) {
    throw std::invalid_argument("NormSpec: weight count " +
                                std::to_string(weights_.size()) +
                                " does not match dimension " +
                                std::to_string(dim));
  }
}

double NormSpec::evaluate(const Eigen::VectorXd& v) const {
  if (weighted() && weights_.size() != v.size()) {
    throw std::invalid_argument("NormSpec: vector size does not match weights");
  }
  const Eigen::ArrayXd a = v.array().abs();
  if (p_ == kInf) {
    if (weighted()) return (weights_.array() * a).maxCoeff();
    return v.size() == 0 ? 0.0 : a.maxCoeff();
  }
  const double scale = v.size() == 0 ? 0.0 : a.maxCoeff();
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double t = std::pow(a[i] / scale, p_);
    sum += weighted() ? weights_[i] * t : t;
  }
  return scale * std::pow(sum, 1.0 / p_);
}

std::pair<double, double> NormSpec::euclidean_equivalence(int dim) const {
  const double d = static_cast<double>(dim);
  double m, M;
  if (p_ == kInf) {
    m = 1.0 / std::sqrt(d);
    M = 1.0;
  } else if (p_ >= 2.0) {
    m = std::pow(d, 1.0 / p_ - 0.5);
    M = 1.0;
  } else {
    m = 1.0;
    M = std::pow(d, 1.0 / p_ - 0.5);
  }
  if (weighted()) {
    const double wmin = weights_.minCoeff();
    const double wmax = weights_.maxCoeff();
    const double e = (p_ == kInf) ? 1.0 : 1.0 / p_;
    m *= std::pow(wmin, e);
    M *= std::pow(wmax, e);
  }
  return {m, M};
}

}  // namespace conemet
