#pragma once

#include <Eigen/Core>
#include <functional>
#include <map>
#include <string>

#include "conemet/points.hpp"

namespace conemet {

/// Self map T : X -> X, supplied as a label table for finite spaces, an
/// affine map x -> A x + b on coordinate points, or an arbitrary callable.
/// Applying a table map to a label outside the table throws
/// std::invalid_argument (the map failed to be a self map).
class SelfMap {
 public:
  static SelfMap table(std::map<std::string, std::string> images);
  static SelfMap affine(Eigen::MatrixXd A, Eigen::VectorXd b);
  static SelfMap callable(std::function<Point(const Point&)> fn);
  static SelfMap identity();

  Point operator()(const Point& x) const;

 private:
  std::function<Point(const Point&)> fn_;
};

}  // namespace conemet
