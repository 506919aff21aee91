#include "conemet/points.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace conemet {

Point Point::label(std::string name) {
  Point p;
  p.value_ = std::move(name);
  return p;
}

Point Point::real(double x) {
  Point p;
  Eigen::VectorXd v(1);
  v[0] = x;
  p.value_ = std::move(v);
  return p;
}

Point Point::vec(Eigen::VectorXd v) {
  Point p;
  p.value_ = std::move(v);
  return p;
}

const std::string& Point::as_label() const {
  if (!is_label()) throw std::logic_error("Point: not a label");
  return std::get<std::string>(value_);
}

const Eigen::VectorXd& Point::as_vec() const {
  if (is_label()) throw std::logic_error("Point: not a vector");
  return std::get<Eigen::VectorXd>(value_);
}

double Point::as_real() const {
  const Eigen::VectorXd& v = as_vec();
  if (v.size() != 1) throw std::logic_error("Point: not one-dimensional");
  return v[0];
}

bool Point::operator==(const Point& other) const {
  if (is_label() != other.is_label()) return false;
  if (is_label()) return as_label() == other.as_label();
  const Eigen::VectorXd& a = as_vec();
  const Eigen::VectorXd& b = other.as_vec();
  return a.size() == b.size() && a == b;
}

std::string Point::describe() const {
  if (is_label()) return as_label();
  const Eigen::VectorXd& v = as_vec();
  std::string s = "(";
  char buf[64];
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g", v[i]);
    if (i > 0) s += ", ";
    s += buf;
  }
  s += ")";
  return s;
}

ScalarMetric ScalarMetric::abs_diff(double scale) {
  return ScalarMetric{Kind::AbsDiff, scale};
}

ScalarMetric ScalarMetric::euclidean(double scale) {
  return ScalarMetric{Kind::Euclidean, scale};
}

ScalarMetric ScalarMetric::discrete() {
  return ScalarMetric{Kind::Discrete, 1.0};
}

double ScalarMetric::operator()(const Point& x, const Point& y) const {
  switch (kind) {
    case Kind::Discrete:
      return x == y ? 0.0 : 1.0;
    case Kind::AbsDiff:
      return scale * std::abs(x.as_real() - y.as_real());
    case Kind::Euclidean:
      return scale * (x.as_vec() - y.as_vec()).norm();
  }
  return 0.0;
}

}  // namespace conemet
