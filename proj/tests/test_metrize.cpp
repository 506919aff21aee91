#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "conemet/cone_metrics.hpp"
#include "conemet/metrize.hpp"
#include "conemet/sampling.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conemet;
using conemet::testing::oracle_metrize_grid;
using conemet::testing::rng;
using conemet::testing::uniform;

namespace {

Eigen::VectorXd v2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

Eigen::VectorXd v3(double a, double b, double c) {
  Eigen::VectorXd v(3);
  v << a, b, c;
  return v;
}

}  // namespace

TEST_CASE("orthant metrization is the norm itself") {
  const std::vector<NormSpec> norms = {
      NormSpec::lp(1.0), NormSpec::lp(2.0), NormSpec::lp(NormSpec::kInf),
      NormSpec::lp(0.5), NormSpec::weighted_lp(2.0, v3(0.5, 1.0, 2.0))};
  for (const auto& norm : norms) {
    const auto space = OrderedVectorSpace::make(3, norm, ConeSpec::orthant(3));
    const Eigen::VectorXd c = v3(1.0, 2.0, 0.5);
    const MetrizationResult r = metrize_vector(space, c);
    CHECK(r.method == MetrizeMethod::MonotoneFastPath);
    CHECK(r.value == doctest::Approx(norm.evaluate(c)).epsilon(1e-12));
    CHECK(r.error_bound == 0.0);
    CHECK((r.minimizer - c).norm() == 0.0);
  }
}

TEST_CASE("dual cone values take the dual fast path under the Euclidean norm") {
  const auto soc =
      OrderedVectorSpace::make(3, NormSpec::lp(2.0), ConeSpec::second_order(3));
  const MetrizationResult r = metrize_vector(soc, v3(0.0, 0.0, 1.0));
  CHECK(r.method == MetrizeMethod::DualFastPath);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.error_bound == 0.0);

  Eigen::MatrixXd G(2, 2);
  G << 1.0, 1.0, 0.0, 1.0;
  const auto gen =
      OrderedVectorSpace::make(2, NormSpec::lp(2.0), ConeSpec::generators(G));
  const MetrizationResult rg = metrize_vector(gen, v2(1.0, 0.0));
  CHECK(rg.method == MetrizeMethod::DualFastPath);
  CHECK(rg.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("an obtuse generator cone beats the norm of the value itself") {
  Eigen::MatrixXd G(2, 2);
  G << 1.0, -0.8, 0.0, 0.6;
  const auto space =
      OrderedVectorSpace::make(2, NormSpec::lp(2.0), ConeSpec::generators(G));
  const Eigen::VectorXd c = v2(-0.8, 0.6);
  REQUIRE(space.norm_of(c) == doctest::Approx(1.0).epsilon(1e-12));

  const MetrizationResult r = metrize_vector(space, c);
  CHECK(r.method == MetrizeMethod::EuclideanProjection);
  CHECK(r.value == doctest::Approx(0.6).epsilon(1e-9));
  CHECK((r.minimizer - v2(0.0, 0.6)).norm() <= 1e-8);
  CHECK(r.error_bound <= 1e-8);
  CHECK(r.value < space.norm_of(c));
}

TEST_CASE("minimizers dominate the value and reproduce the reported number") {
  auto gen = rng(21);
  Eigen::MatrixXd G(3, 4);
  G << 1.0, 0.2, 0.1, 0.5, 0.1, 1.0, 0.2, 0.5, 0.0, 0.1, 1.0, 0.5;
  const std::vector<OrderedVectorSpace> spaces = {
      OrderedVectorSpace::make(3, NormSpec::lp(1.0), ConeSpec::second_order(3)),
      OrderedVectorSpace::make(3, NormSpec::lp(NormSpec::kInf),
                               ConeSpec::generators(G)),
      OrderedVectorSpace::make(3, NormSpec::lp(2.0), ConeSpec::second_order(3)),
  };
  for (const auto& space : spaces) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      const Eigen::VectorXd c = sample_cone_point(space.cone, 77, i);
      const MetrizationResult r = metrize_vector(space, c);
      CHECK(r.value == doctest::Approx(space.norm_of(r.minimizer)).epsilon(1e-9));
      CHECK(cone_contains(space.cone, r.minimizer - c, 1e-6));
      CHECK(r.value <= space.norm_of(c) + 1e-9);
      CHECK(r.error_bound >= 0.0);
    }
  }
}

TEST_CASE("metrization brackets the grid oracle on awkward norms") {
  const std::vector<std::pair<OrderedVectorSpace, Eigen::VectorXd>> cases = [] {
    std::vector<std::pair<OrderedVectorSpace, Eigen::VectorXd>> out;
    out.emplace_back(OrderedVectorSpace::make(3, NormSpec::lp(1.0),
                                              ConeSpec::second_order(3)),
                     v3(0.6, 0.0, 0.8));
    out.emplace_back(OrderedVectorSpace::make(3, NormSpec::lp(NormSpec::kInf),
                                              ConeSpec::second_order(3)),
                     v3(-0.3, 0.4, 0.9));
    Eigen::MatrixXd G(2, 2);
    G << 1.0, -0.8, 0.0, 0.6;
    out.emplace_back(OrderedVectorSpace::make(2, NormSpec::weighted_lp(
                                                     1.0, v2(1.0, 2.0)),
                                              ConeSpec::generators(G)),
                     v2(-0.8, 0.6));
    return out;
  }();
  for (const auto& [space, c] : cases) {
    REQUIRE(cone_contains(space.cone, c, 1e-9));
    const MetrizationResult r = metrize_vector(space, c);
    const double oracle = oracle_metrize_grid(space, c);
    CHECK(r.value >= oracle - 2e-3);
    CHECK(r.value <= oracle + r.error_bound + 1e-9);
  }
}

TEST_CASE("forced methods enforce their preconditions and agree") {
  const auto soc =
      OrderedVectorSpace::make(3, NormSpec::lp(2.0), ConeSpec::second_order(3));
  const Eigen::VectorXd c = v3(0.8, 0.0, 0.9);

  CHECK_THROWS_AS(metrize_vector_with_method(soc, c,
                                             MetrizeMethod::MonotoneFastPath),
                  std::invalid_argument);

  const MetrizationResult dual =
      metrize_vector_with_method(soc, c, MetrizeMethod::DualFastPath);
  CHECK(dual.value == doctest::Approx(c.norm()).epsilon(1e-12));
  CHECK(dual.method == MetrizeMethod::DualFastPath);

  const auto soc_l1 =
      OrderedVectorSpace::make(3, NormSpec::lp(1.0), ConeSpec::second_order(3));
  CHECK_THROWS_AS(
      metrize_vector_with_method(soc_l1, c, MetrizeMethod::DualFastPath),
      std::invalid_argument);
  CHECK_THROWS_AS(
      metrize_vector_with_method(soc_l1, c, MetrizeMethod::EuclideanProjection),
      std::invalid_argument);

  const auto obtuse = OrderedVectorSpace::make(
      2, NormSpec::lp(2.0),
      ConeSpec::generators(Eigen::Matrix2d{{1.0, -0.8}, {0.0, 0.6}}));
  CHECK_THROWS_AS(metrize_vector_with_method(obtuse, v2(-0.8, 0.6),
                                             MetrizeMethod::DualFastPath),
                  std::invalid_argument);

  const MetrizationResult a =
      metrize_vector_with_method(soc, c, MetrizeMethod::EuclideanProjection);
  const MetrizationResult b =
      metrize_vector_with_method(soc, c, MetrizeMethod::LocalSearch);
  CHECK(std::abs(a.value - b.value) <=
        a.error_bound + b.error_bound + 1e-9);

  const auto quasi = OrderedVectorSpace::make(2, NormSpec::lp(0.5),
                                              ConeSpec::second_order(2));
  CHECK_THROWS_AS(metrize_vector(quasi, v2(0.0, 1.0)), std::invalid_argument);
}

TEST_CASE("values outside the cone and dimension mismatches throw") {
  const auto space = OrderedVectorSpace::orthant_lp(2, 2.0);
  CHECK_THROWS_AS(metrize_vector(space, v2(1.0, -0.5)), std::invalid_argument);
  CHECK_THROWS_AS(metrize_vector(space, v3(1.0, 1.0, 1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(metrize_vector_with_method(space, v2(1.0, -0.5),
                                             MetrizeMethod::MonotoneFastPath),
                  std::invalid_argument);
}

TEST_CASE("the induced scalar metric of a product metric has a closed form") {
  const ConeMetric metric = ConeMetric::product(
      1.0, 2.0, ScalarMetric::abs_diff(), ScalarMetric::abs_diff());
  const EquivalentMetric d(metric);
  const Point x = Point::real(0.0);
  const Point y = Point::real(1.5);
  CHECK(d(x, y) == doctest::Approx(1.5 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(*metric.closed_form_distance(x, y) ==
        doctest::Approx(1.5 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(d.detailed(x, y).method == MetrizeMethod::MonotoneFastPath);

  const auto l1 = OrderedVectorSpace::orthant_lp(2, 1.0);
  const EquivalentMetric d1(metric, l1);
  CHECK(d1(x, y) == doctest::Approx(4.5).epsilon(1e-12));

  const auto wrong_dim = OrderedVectorSpace::orthant_lp(3, 1.0);
  CHECK_THROWS_AS(EquivalentMetric(metric, wrong_dim), std::invalid_argument);
}

TEST_CASE("distance matrices are symmetric with labeled rows") {
  const ConeMetric metric = ConeMetric::product(
      1.0, 2.0, ScalarMetric::abs_diff(), ScalarMetric::abs_diff());
  const std::vector<Point> pts = {Point::real(0.0), Point::real(1.0),
                                  Point::real(3.0)};
  const LabeledMatrix m = distance_matrix(metric, metric.codomain(), pts);
  REQUIRE(m.labels.size() == 3);
  CHECK(m.labels[0] == "p0");
  CHECK(m.values.diagonal().norm() == 0.0);
  CHECK((m.values - m.values.transpose()).norm() == 0.0);
  const double unit = std::sqrt(5.0);
  CHECK(m.values(0, 1) == doctest::Approx(unit).epsilon(1e-12));
  CHECK(m.values(0, 2) == doctest::Approx(3.0 * unit).epsilon(1e-12));
  CHECK(m.values(1, 2) == doctest::Approx(2.0 * unit).epsilon(1e-12));
  CHECK(m.methods.size() == 3);
  CHECK(m.error_bounds.size() == 3);
  for (double e : m.error_bounds) CHECK(e == 0.0);
}

TEST_CASE("metric axiom checks catch each planted defect") {
  auto clean = [](int i, int j) { return std::abs(i - j) * 1.0; };
  CHECK(check_metric_axioms(clean, 6, 1e-9).pass(1e-9));

  auto asym = [](int i, int j) {
    if (i == 0 && j == 1) return 1.2;
    return std::abs(i - j) * 1.0;
  };
  const auto rep_asym = check_metric_axioms(asym, 4, 1e-9);
  CHECK(rep_asym.max_asymmetry == doctest::Approx(0.2).epsilon(1e-9));
  CHECK_FALSE(rep_asym.pass(1e-9));

  auto selfd = [](int i, int j) {
    return (i == j && i == 2) ? 0.5 : std::abs(i - j) * 1.0;
  };
  CHECK(check_metric_axioms(selfd, 4, 1e-9).max_self_distance ==
        doctest::Approx(0.5));

  auto tri = [](int i, int j) {
    if ((i == 0 && j == 2) || (i == 2 && j == 0)) return 5.0;
    return std::abs(i - j) * 1.0;
  };
  const auto rep_tri = check_metric_axioms(tri, 3, 1e-9);
  CHECK(rep_tri.max_triangle_violation == doctest::Approx(3.0));
  REQUIRE(rep_tri.worst_triple.has_value());
  CHECK((*rep_tri.worst_triple)[2] == 1);

  auto zero = [](int i, int j) {
    if ((i == 1 && j == 2) || (i == 2 && j == 1)) return 0.0;
    return std::abs(i - j) * 1.0;
  };
  CHECK(check_metric_axioms(zero, 3, 1e-9).zero_distinct_pairs == 1);

  auto neg = [](int i, int j) { return i == j ? 0.0 : -1.0; };
  CHECK(check_metric_axioms(neg, 3, 1e-9).max_negative == doctest::Approx(1.0));

  CHECK_THROWS_AS(check_metric_axioms(clean, -1, 1e-9), std::invalid_argument);
}

TEST_CASE("cone and scalar convergence agree along a vanishing sequence") {
  const ConeMetric metric = ConeMetric::product(
      1.0, 1.0, ScalarMetric::abs_diff(), ScalarMetric::abs_diff());
  std::vector<Point> seq;
  for (int n = 1; n <= 30; ++n) seq.push_back(Point::real(1.0 / n));
  const Point limit = Point::real(0.0);
  const std::vector<Eigen::VectorXd> dirs = {v2(0.1, 0.1)};

  const auto rep = check_convergence_equivalence(metric, metric.codomain(),
                                                 seq, limit, dirs);
  REQUIRE(rep.directions.size() == 1);
  const auto& de = rep.directions[0];
  CHECK(de.epsilon == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(de.scaled_direction[0] ==
        doctest::Approx(0.1 / std::sqrt(2.0)).epsilon(1e-9));
  REQUIRE(de.domination_index.has_value());
  REQUIRE(de.scalar_index.has_value());
  CHECK(*de.domination_index == 15);
  CHECK(*de.scalar_index == 15);
  CHECK(de.consistent());
  CHECK(rep.cone_converges);
  CHECK(rep.scalar_converges);
  CHECK(rep.agreement());
  CHECK(de.tail_sup < 0.1 + 1e-12);
}

TEST_CASE("a non convergent sequence is flagged on both sides") {
  const ConeMetric metric = ConeMetric::product(
      1.0, 1.0, ScalarMetric::abs_diff(), ScalarMetric::abs_diff());
  std::vector<Point> seq(12, Point::real(1.0));
  const auto rep = check_convergence_equivalence(
      metric, metric.codomain(), seq, Point::real(0.0), {v2(0.1, 0.1)});
  CHECK_FALSE(rep.cone_converges);
  CHECK_FALSE(rep.scalar_converges);
  CHECK(rep.agreement());
  CHECK(rep.directions[0].consistent());
  CHECK(rep.directions[0].tail_sup ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("convergence equivalence rejects bad directions and epsilons") {
  const ConeMetric metric = ConeMetric::product(
      1.0, 1.0, ScalarMetric::abs_diff(), ScalarMetric::abs_diff());
  const std::vector<Point> seq = {Point::real(0.5), Point::real(0.25)};
  const Point limit = Point::real(0.0);

  CHECK_THROWS_AS(
      check_convergence_equivalence(metric, metric.codomain(), seq, limit,
                                    {v2(0.1, 0.0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      check_convergence_equivalence(metric, metric.codomain(), seq, limit,
                                    {v2(1.0, 1.0)}, kDefaultMargin, {1e-8}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      check_convergence_equivalence(metric, metric.codomain(), {}, limit,
                                    {v2(0.1, 0.1)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      check_convergence_equivalence(metric, metric.codomain(), seq, limit,
                                    {v2(0.1, 0.1)}, kDefaultMargin,
                                    {0.1, 0.2}),
      std::invalid_argument);
}
