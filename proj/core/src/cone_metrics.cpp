#include "conemet/cone_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

namespace conemet {

struct ConeMetric::TableData {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<Eigen::VectorXd> upper;  // D(i,j) for i < j, row-major
};

namespace {

int upper_index(int i, int j, int n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

ConeMetric ConeMetric::discrete(Eigen::VectorXd a,
                                OrderedVectorSpace codomain) {
  validate_space(codomain);
  if (a.size() != codomain.dim) {
    throw std::invalid_argument("ConeMetric: direction dimension mismatch");
  }
  if (!cone_contains(codomain.cone, a, codomain.tolerance)) {
    throw std::invalid_argument(
        "ConeMetric: discrete direction lies outside the cone");
  }
  const double n = codomain.norm_of(a);
  if (std::abs(n - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "ConeMetric: discrete direction must have unit norm, got " +
        std::to_string(n));
  }
  ConeMetric m(Kind::Discrete, std::move(codomain));
  m.a_vec_ = std::move(a);
  return m;
}

ConeMetric ConeMetric::product(double a, double b, ScalarMetric d1,
                               ScalarMetric d2) {
  if (!(a >= 0.0) || !(b >= 0.0) || (a == 0.0 && b == 0.0)) {
    throw std::invalid_argument(
        "ConeMetric: product coefficients must be nonnegative, not both zero");
  }
  ConeMetric m(Kind::Product, OrderedVectorSpace::orthant_lp(2, 2.0));
  m.a_ = a;
  m.b_ = b;
  m.d1_ = d1;
  m.d2_ = d2;
  return m;
}

ConeMetric ConeMetric::geometric_lq(ScalarMetric rho, double b, double q,
                                    int truncation) {
  if (!(q > 0.0)) {
    throw std::invalid_argument("ConeMetric: geometric exponent needs q > 0");
  }
  if (!(b > 1.0)) {
    throw std::invalid_argument("ConeMetric: geometric base needs b > 1");
  }
  if (truncation < 1) {
    throw std::invalid_argument("ConeMetric: truncation must be >= 1");
  }
  ConeMetric m(Kind::GeometricLq,
               OrderedVectorSpace::orthant_lp(truncation, q));
  m.d1_ = rho;
  m.b_ = b;
  m.q_ = q;
  return m;
}

ConeMetric ConeMetric::finite_table(std::vector<std::string> labels,
                                    std::vector<TableEntry> entries,
                                    OrderedVectorSpace codomain) {
  validate_space(codomain);
  const int n = static_cast<int>(labels.size());
  if (n < 2) {
    throw std::invalid_argument("ConeMetric: table needs at least two points");
  }
  auto data = std::make_shared<TableData>();
  data->labels = labels;
  for (int i = 0; i < n; ++i) {
    if (!data->index.emplace(labels[i], i).second) {
      throw std::invalid_argument("ConeMetric: duplicate label '" + labels[i] +
                                  "'");
    }
  }
  const int pairs = n * (n - 1) / 2;
  std::vector<bool> seen(pairs, false);
  data->upper.assign(pairs, Eigen::VectorXd());
  for (const auto& e : entries) {
    const auto ix = data->index.find(e.x);
    const auto iy = data->index.find(e.y);
    if (ix == data->index.end() || iy == data->index.end()) {
      throw std::invalid_argument("ConeMetric: entry references unknown label");
    }
    if (e.value.size() != codomain.dim) {
      throw std::invalid_argument(
          "ConeMetric: entry dimension does not match the codomain");
    }
    if (ix->second == iy->second) {
      if (e.value.norm() > codomain.tolerance) {
        throw std::invalid_argument("ConeMetric: nonzero diagonal entry for '" +
                                    e.x + "'");
      }
      continue;
    }
    const int i = std::min(ix->second, iy->second);
    const int j = std::max(ix->second, iy->second);
    const int k = upper_index(i, j, n);
    if (seen[k]) {
      if ((data->upper[k] - e.value).norm() > codomain.tolerance) {
        throw std::invalid_argument(
            "ConeMetric: conflicting entries for pair ('" + e.x + "', '" +
            e.y + "'); the table must be symmetric");
      }
      continue;
    }
    seen[k] = true;
    data->upper[k] = e.value;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!seen[upper_index(i, j, n)]) {
        throw std::invalid_argument("ConeMetric: missing entry for pair ('" +
                                    labels[i] + "', '" + labels[j] + "')");
      }
    }
  }
  ConeMetric m(Kind::FiniteTable, std::move(codomain));
  m.table_ = std::move(data);
  return m;
}

Eigen::VectorXd ConeMetric::eval(const Point& x, const Point& y) const {
  switch (kind_) {
    case Kind::Discrete:
      return x == y ? Eigen::VectorXd::Zero(codomain_.dim).eval() : a_vec_;
    case Kind::Product: {
      Eigen::VectorXd v(2);
      v[0] = a_ * d1_(x, y);
      v[1] = b_ * d2_(x, y);
      return v;
    }
    case Kind::GeometricLq: {
      const double rho = d1_(x, y);
      Eigen::VectorXd v(codomain_.dim);
      for (int n = 1; n <= codomain_.dim; ++n) {
        v[n - 1] = std::pow(rho / std::pow(b_, n), 1.0 / q_);
      }
      return v;
    }
    case Kind::FiniteTable: {
      const auto ix = table_->index.find(x.as_label());
      const auto iy = table_->index.find(y.as_label());
      if (ix == table_->index.end() || iy == table_->index.end()) {
        throw std::invalid_argument("ConeMetric: point '" +
                                    (ix == table_->index.end()
                                         ? x.as_label()
                                         : y.as_label()) +
                                    "' is not in the table");
      }
      if (ix->second == iy->second) {
        return Eigen::VectorXd::Zero(codomain_.dim);
      }
      const int i = std::min(ix->second, iy->second);
      const int j = std::max(ix->second, iy->second);
      const int n = static_cast<int>(table_->labels.size());
      return table_->upper[upper_index(i, j, n)];
    }
  }
  return Eigen::VectorXd::Zero(codomain_.dim);
}

std::optional<double> ConeMetric::closed_form_distance(const Point& x,
                                                       const Point& y) const {
  switch (kind_) {
    case Kind::Discrete:
      return x == y ? 0.0 : 1.0;
    case Kind::Product: {
      const double u = a_ * d1_(x, y);
      const double v = b_ * d2_(x, y);
      return std::sqrt(u * u + v * v);
    }
    case Kind::GeometricLq: {
      const double rho = d1_(x, y);
      return std::pow(rho / (b_ - 1.0), 1.0 / q_);
    }
    case Kind::FiniteTable:
      return std::nullopt;
  }
  return std::nullopt;
}

const Eigen::VectorXd& ConeMetric::discrete_direction() const {
  if (kind_ != Kind::Discrete) {
    throw std::logic_error("ConeMetric: not a discrete metric");
  }
  return a_vec_;
}

int ConeMetric::lq_truncation() const {
  if (kind_ != Kind::GeometricLq) {
    throw std::logic_error("ConeMetric: not a geometric metric");
  }
  return codomain_.dim;
}

const std::vector<std::string>& ConeMetric::table_labels() const {
  if (kind_ != Kind::FiniteTable) {
    throw std::logic_error("ConeMetric: not a finite table");
  }
  return table_->labels;
}

std::vector<TableEntry> ConeMetric::table_entries() const {
  const auto& labels = table_labels();
  const int n = static_cast<int>(labels.size());
  std::vector<TableEntry> out;
  out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out.push_back({labels[i], labels[j], table_->upper[upper_index(i, j, n)]});
    }
  }
  return out;
}

double truncation_tail_bound(const ConeMetric& metric, double rho_value) {
  if (metric.kind() != ConeMetric::Kind::GeometricLq) {
    throw std::invalid_argument(
        "truncation_tail_bound: metric is not geometric");
  }
  if (rho_value <= 0.0) return 0.0;
  const double b = metric.lq_base();
  const double q = metric.lq_exponent();
  const double N = static_cast<double>(metric.lq_truncation());
  if (q >= 1.0) {
    return std::pow(rho_value / ((b - 1.0) * std::pow(b, N)), 1.0 / q);
  }
  const double series = std::pow(rho_value / (b - 1.0), 1.0 / q);
  const double eps = std::numeric_limits<double>::epsilon();
  return (1.0 / q) * std::pow(b, -N) * series + 64.0 * eps * (1.0 + series);
}

ConeMetricValidationReport validate_cone_metric(const ConeMetric& metric,
                                                const std::vector<Point>& points,
                                                double tau, int triple_cap,
                                                std::uint64_t seed) {
  ConeMetricValidationReport rep;
  const int n = static_cast<int>(points.size());
  const auto& space = metric.codomain();

  auto note = [&](std::string s) {
    if (rep.witnesses.size() < 8) rep.witnesses.push_back(std::move(s));
  };

  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd self = metric.eval(points[i], points[i]);
    if (space.norm_of(self) > tau) {
      ++rep.self_violations;
      note("D(x,x) != 0 at x = " + points[i].describe());
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++rep.pair_count;
      const Eigen::VectorXd dij = metric.eval(points[i], points[j]);
      const Eigen::VectorXd dji = metric.eval(points[j], points[i]);
      if (space.norm_of(dij - dji) > tau) {
        ++rep.symmetry_violations;
        note("asymmetry at (" + points[i].describe() + ", " +
             points[j].describe() + ")");
      }
      if (!cone_contains(space.cone, dij, tau)) {
        ++rep.membership_violations;
        note("D outside the cone at (" + points[i].describe() + ", " +
             points[j].describe() + ")");
      }
      if (space.norm_of(dij) <= tau && !(points[i] == points[j])) {
        ++rep.zero_distinct_pairs;
        note("vanishing distance between distinct points (" +
             points[i].describe() + ", " + points[j].describe() + ")");
      }
    }
  }

  auto check_triple = [&](int i, int j, int k) {
    ++rep.triple_count;
    const Eigen::VectorXd lhs = metric.eval(points[i], points[j]);
    const Eigen::VectorXd rhs = metric.eval(points[i], points[k]) +
                                metric.eval(points[k], points[j]);
    if (!cone_contains(space.cone, rhs - lhs, tau)) {
      ++rep.triangle_violations;
      note("triangle violation at (" + points[i].describe() + ", " +
           points[j].describe() + ", " + points[k].describe() + ")");
    }
  };

  const long long total = static_cast<long long>(n) * n * n;
  if (total <= triple_cap) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) check_triple(i, j, k);
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < triple_cap; ++t) {
      check_triple(pick(rng), pick(rng), pick(rng));
    }
  }
  return rep;
}

ConeMetric random_cone_metric_table(int n, int dim, std::uint64_t seed) {
  if (n < 2 || dim < 1) {
    throw std::invalid_argument(
        "random_cone_metric_table: need n >= 2 points and dim >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 1.5);

  std::vector<std::vector<Eigen::VectorXd>> w(
      n, std::vector<Eigen::VectorXd>(n, Eigen::VectorXd::Zero(dim)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd v(dim);
      for (int k = 0; k < dim; ++k) v[k] = weight(rng);
      w[i][j] = v;
      w[j][i] = v;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        w[i][j] = w[i][j].cwiseMin(w[i][k] + w[k][j]);
      }
    }
  }

  std::vector<std::string> labels;
  std::vector<TableEntry> entries;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      entries.push_back({labels[i], labels[j], w[i][j]});
    }
  }
  return ConeMetric::finite_table(std::move(labels), std::move(entries),
                                  OrderedVectorSpace::orthant_lp(dim, 2.0));
}

}  // namespace conemet
