#pragma once

#include <Eigen/Core>
#include <string>
#include <variant>

namespace conemet {

/// A point of the underlying set X: either an opaque label (finite spaces)
/// or a coordinate vector (scalars are 1-vectors).
class Point {
 public:
  static Point label(std::string name);
  static Point real(double x);
  static Point vec(Eigen::VectorXd v);

  bool is_label() const { return std::holds_alternative<std::string>(value_); }
  bool is_vec() const { return !is_label(); }

  const std::string& as_label() const;
  const Eigen::VectorXd& as_vec() const;
  double as_real() const;

  bool operator==(const Point& other) const;
  std::string describe() const;

 private:
  std::variant<std::string, Eigen::VectorXd> value_;
};

/// Plain scalar metric used as a building block of cone metrics.
struct ScalarMetric {
  enum class Kind { AbsDiff, Euclidean, Discrete };

  Kind kind = Kind::AbsDiff;
  double scale = 1.0;

  static ScalarMetric abs_diff(double scale = 1.0);
  static ScalarMetric euclidean(double scale = 1.0);
  static ScalarMetric discrete();

  double operator()(const Point& x, const Point& y) const;
};

}  // namespace conemet
