#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conemet/points.hpp"
#include "conemet/spaces.hpp"

namespace conemet {

struct TableEntry {
  std::string x;
  std::string y;
  Eigen::VectorXd value;
};

/// Cone metric D : X x X -> R^dim with values ordered by the codomain cone.
///
/// Built-in families:
///   Discrete     D(x,y) = 0 or a, for a fixed unit-norm a in the cone
///   Product      D(x,y) = (a*d1(x,y), b*d2(x,y)) in the plane orthant
///   GeometricLq  D(x,y)_n = (rho(x,y)/b^n)^(1/q), n = 1..truncation,
///                in the orthant of R^truncation with the l^q (quasi)norm
///   FiniteTable  explicit symmetric table over labeled points
class ConeMetric {
 public:
  enum class Kind { Discrete, Product, GeometricLq, FiniteTable };

  static ConeMetric discrete(Eigen::VectorXd a, OrderedVectorSpace codomain);
  static ConeMetric product(double a, double b, ScalarMetric d1,
                            ScalarMetric d2);
  static ConeMetric geometric_lq(ScalarMetric rho, double b, double q,
                                 int truncation = 32);
  static ConeMetric finite_table(std::vector<std::string> labels,
                                 std::vector<TableEntry> entries,
                                 OrderedVectorSpace codomain);

  Kind kind() const { return kind_; }
  const OrderedVectorSpace& codomain() const { return codomain_; }

  Eigen::VectorXd eval(const Point& x, const Point& y) const;

  /// Known closed form of the induced scalar metric, when the family has
  /// one; empty for finite tables.
  std::optional<double> closed_form_distance(const Point& x,
                                             const Point& y) const;

  const Eigen::VectorXd& discrete_direction() const;
  double product_a() const { return a_; }
  double product_b() const { return b_; }
  const ScalarMetric& product_d1() const { return d1_; }
  const ScalarMetric& product_d2() const { return d2_; }
  const ScalarMetric& lq_rho() const { return d1_; }
  double lq_base() const { return b_; }
  double lq_exponent() const { return q_; }
  int lq_truncation() const;
  const std::vector<std::string>& table_labels() const;
  std::vector<TableEntry> table_entries() const;

 private:
  ConeMetric(Kind kind, OrderedVectorSpace codomain)
      : kind_(kind), codomain_(std::move(codomain)) {}

  struct TableData;

  Kind kind_;
  OrderedVectorSpace codomain_;
  Eigen::VectorXd a_vec_;
  double a_ = 1.0, b_ = 1.0, q_ = 1.0;
  ScalarMetric d1_, d2_;
  std::shared_ptr<const TableData> table_;
};

/// Upper bound on the truncation error of a geometric l^q metric: the gap
/// between the truncated distance and its infinite-series closed form, for
/// a given value of rho. Exact tail formula for q >= 1; for q in (0,1) a
/// first-order bound plus a roundoff allowance (the q >= 1 formula is not a
/// valid certificate there, the l^q quasinorm is not subadditive).
double truncation_tail_bound(const ConeMetric& metric, double rho_value);

struct ConeMetricValidationReport {
  int pair_count = 0;
  int triple_count = 0;
  int self_violations = 0;
  int symmetry_violations = 0;
  int membership_violations = 0;
  int triangle_violations = 0;
  int zero_distinct_pairs = 0;
  std::vector<std::string> witnesses;
  bool ok() const {
    return self_violations == 0 && symmetry_violations == 0 &&
           membership_violations == 0 && triangle_violations == 0 &&
           zero_distinct_pairs == 0;
  }
};

/// Checks the cone metric axioms on a finite point set: zero diagonal,
/// symmetry, values in the cone, triangle inequality in the cone order, and
/// no vanishing distance between distinct points. Triples are enumerated
/// exhaustively up to `triple_cap` and sampled deterministically beyond it.
ConeMetricValidationReport validate_cone_metric(
    const ConeMetric& metric, const std::vector<Point>& points, double tau,
    int triple_cap = 100000, std::uint64_t seed = 0);

/// Random finite cone metric over n labeled points with values in the
/// orthant of R^dim: coordinatewise shortest-path closure of a symmetric
/// positive weight table, so every axiom holds by construction.
/// Deterministic per seed. Labels are "p0", "p1", ...
ConeMetric random_cone_metric_table(int n, int dim, std::uint64_t seed);

}  // namespace conemet
