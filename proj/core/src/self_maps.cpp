#include "conemet/self_maps.hpp"

#include <stdexcept>
#include <utility>

namespace conemet {

SelfMap SelfMap::table(std::map<std::string, std::string> images) {
  SelfMap m;
  m.fn_ = [images = std::move(images)](const Point& x) {
    const auto it = images.find(x.as_label());
    if (it == images.end()) {
      throw std::invalid_argument("SelfMap: point '" + x.as_label() +
                                  "' has no image; the map is not a self map");
    }
    return Point::label(it->second);
  };
  return m;
}

SelfMap SelfMap::affine(Eigen::MatrixXd A, Eigen::VectorXd b) {
  if (A.rows() != A.cols() || A.rows() != b.size()) {
    throw std::invalid_argument("SelfMap: affine parts have mismatched sizes");
  }
  SelfMap m;
  m.fn_ = [A = std::move(A), b = std::move(b)](const Point& x) {
    const Eigen::VectorXd& v = x.as_vec();
    if (v.size() != A.cols()) {
      throw std::invalid_argument("SelfMap: point dimension mismatch");
    }
    return Point::vec(A * v + b);
  };
  return m;
}

SelfMap SelfMap::callable(std::function<Point(const Point&)> fn) {
  SelfMap m;
  m.fn_ = std::move(fn);
  return m;
}

SelfMap SelfMap::identity() {
  SelfMap m;
  m.fn_ = [](const Point& x) { return x; };
  return m;
}

Point SelfMap::operator()(const Point& x) const {
  if (!fn_) throw std::logic_error("SelfMap: empty map");
  return fn_(x);
}

}  // namespace conemet
