#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "conemet/cone_metrics.hpp"
#include "conemet/metrize.hpp"
#include "conemet/sampling.hpp"
#include "conemet/transfer.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conemet;
using conemet::testing::rng;
using conemet::testing::uniform;

namespace {

Eigen::VectorXd v1(double a) {
  Eigen::VectorXd v(1);
  v << a;
  return v;
}

Eigen::VectorXd v2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

Eigen::MatrixXd mat2(double a, double b, double c, double d) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, c, d;
  return m;
}

ConeMetric line_table(double ab, double ac, double bc) {
  return ConeMetric::finite_table(
      {"a", "b", "c"},
      {{"a", "b", v1(ab)}, {"a", "c", v1(ac)}, {"b", "c", v1(bc)}},
      OrderedVectorSpace::orthant_lp(1, 2.0));
}

const std::vector<Point> kAbc = {Point::label("a"), Point::label("b"),
                                 Point::label("c")};

SelfMap affine1(double gamma, double offset = 0.0) {
  Eigen::MatrixXd A(1, 1);
  A << gamma;
  return SelfMap::affine(A, v1(offset));
}

std::vector<Point> real_points(std::initializer_list<double> xs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(Point::real(x));
  return pts;
}

ConeMetric scaled_table(const ConeMetric& base, double factor) {
  std::vector<TableEntry> entries = base.table_entries();
  for (auto& e : entries) e.value *= factor;
  return ConeMetric::finite_table(base.table_labels(), std::move(entries),
                                  base.codomain());
}

}  // namespace

TEST_CASE("bounded cone maps apply per their kind") {
  const BoundedConeMap lin = BoundedConeMap::linear(mat2(2.0, 0.0, 0.0, 3.0));
  CHECK((lin.apply(v2(1.0, 2.0)) - v2(2.0, 6.0)).norm() == 0.0);
  CHECK((lin.matrix() - mat2(2.0, 0.0, 0.0, 3.0)).norm() == 0.0);

  const BoundedConeMap f =
      BoundedConeMap::scalar_on_rplus([](double x) { return x / (1.0 + x); });
  CHECK(f.apply(v1(2.0))[0] == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(f.apply(v2(1.0, 1.0)), std::invalid_argument);

  const BoundedConeMap rays = BoundedConeMap::sampled_rays(
      {v2(1.0, 0.0), v2(0.0, 1.0)}, {v2(0.5, 0.0), v2(0.0, 0.25)});
  CHECK((rays.apply(v2(2.0, 0.0)) - v2(1.0, 0.0)).norm() <= 1e-12);
  CHECK(rays.apply(v2(0.0, 0.0)).norm() == 0.0);
  CHECK_THROWS_AS(rays.apply(v2(1.0, 1.0)), std::invalid_argument);

  CHECK_THROWS_AS(BoundedConeMap::linear(Eigen::MatrixXd::Zero(2, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(BoundedConeMap::scalar_on_rplus(nullptr),
                  std::invalid_argument);
  CHECK_THROWS_AS(BoundedConeMap::sampled_rays({v2(1.0, 0.0)}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      BoundedConeMap::sampled_rays({v2(0.0, 0.0)}, {v2(0.0, 0.0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(lin.apply(v1(1.0)), std::invalid_argument);
}

TEST_CASE("operator norms are exact on the documented special cases") {
  const auto orth2 = OrderedVectorSpace::orthant_lp(2, 2.0);

  const BoundedConeMap diag = BoundedConeMap::linear(mat2(2.0, 0.0, 0.0, 3.0));
  CHECK(phi_operator_norm(diag, orth2, 16, 0) == doctest::Approx(3.0));

  const BoundedConeMap ident = BoundedConeMap::linear(
      Eigen::MatrixXd::Identity(2, 2));
  CHECK(phi_operator_norm(ident, orth2, 16, 0) == doctest::Approx(1.0));

  const BoundedConeMap zero = BoundedConeMap::linear(Eigen::MatrixXd::Zero(2, 2));
  CHECK(phi_operator_norm(zero, orth2, 16, 0) == 0.0);

  const Eigen::MatrixXd M = mat2(1.0, 1.0, 0.0, 1.0);
  const BoundedConeMap shear = BoundedConeMap::linear(M);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const double got = phi_operator_norm(shear, orth2, 64, 0);
  CHECK(got == doctest::Approx(svd.singularValues()[0]).epsilon(1e-12));
  auto gen = rng(31);
  for (int i = 0; i < 200; ++i) {
    const Eigen::VectorXd x = v2(uniform(gen, 0.0, 2.0), uniform(gen, 0.0, 2.0));
    CHECK((M * x).norm() <= got * x.norm() + 1e-9);
  }

  const BoundedConeMap scale =
      BoundedConeMap::scalar_on_rplus([](double x) { return 0.7 * x; });
  const auto rplus = OrderedVectorSpace::orthant_lp(1, 2.0);
  CHECK(phi_operator_norm(scale, rplus, 32, 0) == doctest::Approx(0.7));

  CHECK_THROWS_AS(phi_operator_norm(scale, orth2, 32, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(phi_operator_norm(diag, orth2, 0, 0), std::invalid_argument);
}

TEST_CASE("maps that leave the cone raise a structured range error") {
  const auto orth2 = OrderedVectorSpace::orthant_lp(2, 2.0);
  const BoundedConeMap bad = BoundedConeMap::linear(mat2(-1.0, 0.0, 0.0, 1.0));
  try {
    phi_operator_norm(bad, orth2, 16, 0);
    FAIL("expected ConeMapRangeError");
  } catch (const ConeMapRangeError& e) {
    CHECK(e.input.size() == 2);
    CHECK(e.output.size() == 2);
    CHECK(e.output.minCoeff() < 0.0);
    CHECK(std::string(e.what()).find("cone") != std::string::npos);
  }

  const BoundedConeMap neg =
      BoundedConeMap::scalar_on_rplus([](double x) { return x - 2.0; });
  CHECK_THROWS_AS(
      phi_operator_norm(neg, OrderedVectorSpace::orthant_lp(1, 2.0), 16, 0),
      ConeMapRangeError);
}

TEST_CASE("psi matches its closed forms") {
  const auto rplus = OrderedVectorSpace::orthant_lp(1, 2.0);
  const BoundedConeMap f =
      BoundedConeMap::scalar_on_rplus([](double x) { return x / (1.0 + x); });
  CHECK(psi_from_phi(f, rplus, 1.0, 32, 0) == doctest::Approx(0.5));
  CHECK(psi_from_phi(f, rplus, 0.0, 32, 0) == 0.0);

  const auto orth2 = OrderedVectorSpace::orthant_lp(2, 2.0);
  const BoundedConeMap diag = BoundedConeMap::linear(mat2(2.0, 0.0, 0.0, 3.0));
  CHECK(psi_from_phi(diag, orth2, 2.0, 32, 0) == doctest::Approx(6.0));

  for (double t : {0.1, 1.0, 10.0}) {
    const double lhs = psi_from_phi(diag, orth2, t, 64, 1);
    const double rhs = t * phi_operator_norm(diag, orth2, 64, 1);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }

  CHECK_THROWS_AS(psi_from_phi(diag, orth2, -1.0, 32, 0),
                  std::invalid_argument);
}

TEST_CASE("psi dominates the map on random cone points") {
  auto gen = rng(33);
  const auto orth2 = OrderedVectorSpace::orthant_lp(2, 2.0);
  const auto rplus = OrderedVectorSpace::orthant_lp(1, 2.0);

  const BoundedConeMap lin = BoundedConeMap::linear(mat2(1.0, 0.4, 0.3, 0.8));
  for (int i = 0; i < 400; ++i) {
    const Eigen::VectorXd x = v2(uniform(gen, 0.0, 3.0), uniform(gen, 0.0, 3.0));
    if (x.norm() <= 1e-9) continue;
    const double psi = psi_from_phi(lin, orth2, x.norm(), 64, 5);
    CHECK(lin.apply(x).norm() <= psi + 1e-8);
  }

  const BoundedConeMap f =
      BoundedConeMap::scalar_on_rplus([](double x) { return x / (1.0 + x); });
  for (int i = 0; i < 400; ++i) {
    const double t = uniform(gen, 0.0, 10.0);
    const double psi = psi_from_phi(f, rplus, t, 16, 5);
    Eigen::VectorXd x(1);
    x << t;
    CHECK(f.apply(x).norm() <= psi + 1e-8);
  }

  const BoundedConeMap rays = BoundedConeMap::sampled_rays(
      {v2(1.0, 0.0), v2(0.0, 1.0)}, {v2(0.5, 0.0), v2(0.0, 0.25)});
  for (int i = 0; i < 200; ++i) {
    const double a = uniform(gen, 0.1, 4.0);
    const Eigen::VectorXd x = (i % 2 == 0) ? v2(a, 0.0) : v2(0.0, a);
    const double psi = psi_from_phi(rays, orth2, x.norm(), 16, 5);
    CHECK(rays.apply(x).norm() <= psi + 1e-8);
  }
}

TEST_CASE("growing the sample count never shrinks the sampled suprema") {
  Eigen::MatrixXd M = mat2(0.5, 0.2, 0.1, 1.0);
  const auto soc = OrderedVectorSpace::make(2, NormSpec::lp(2.0),
                                            ConeSpec::second_order(2));
  const BoundedConeMap lin = BoundedConeMap::linear(M);
  double prev = 0.0;
  for (int count : {4, 16, 64, 256}) {
    const double est = phi_operator_norm(lin, soc, count, 9);
    CHECK(est >= prev - 1e-15);
    prev = est;
  }

  const auto rplus = OrderedVectorSpace::orthant_lp(1, 2.0);
  const BoundedConeMap f = BoundedConeMap::scalar_on_rplus(
      [](double x) { return x * (1.0 + 1.0 / (1.0 + x)); });
  prev = 0.0;
  for (int count : {4, 16, 64, 256}) {
    const double est = phi_operator_norm(f, rplus, count, 9);
    CHECK(est >= prev - 1e-15);
    prev = est;
  }
}

TEST_CASE("dominance transfer passes on the guaranteed instances") {
  const ConeMetric D = random_cone_metric_table(5, 2, 11);
  std::vector<Point> pts;
  for (const auto& l : D.table_labels()) pts.push_back(Point::label(l));

  const auto trivial =
      check_dominance_transfer(D, D, SelfMap::identity(), pts, 1e-9);
  CHECK(trivial.pass());
  CHECK(trivial.samples_checked == 20);
  CHECK(trivial.cone_holds == 20);
  CHECK(trivial.scalar_holds_given_cone == 20);

  const ConeMetric Dstar = random_cone_metric_table(5, 2, 12);
  const SelfMap constant = SelfMap::table({{"p0", "p0"},
                                           {"p1", "p0"},
                                           {"p2", "p0"},
                                           {"p3", "p0"},
                                           {"p4", "p0"}});
  const auto rep = check_dominance_transfer(D, Dstar, constant, pts, 1e-9);
  CHECK(rep.pass());
  CHECK(rep.cone_holds == rep.samples_checked);
}

TEST_CASE("dominance transfer holds on a thousand random premise pairs") {
  int total_checked = 0;
  int total_premise = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const ConeMetric D = random_cone_metric_table(8, 2, 100 + seed);
    const ConeMetric Dstar = scaled_table(D, 2.0);
    std::vector<Point> pts;
    for (const auto& l : D.table_labels()) pts.push_back(Point::label(l));

    std::map<std::string, std::string> images;
    auto gen = rng(seed);
    for (int i = 0; i < 8; ++i) {
      images["p" + std::to_string(i)] =
          "p" + std::to_string(static_cast<int>(uniform(gen, 0.0, 7.999)));
    }
    const auto rep = check_dominance_transfer(D, Dstar, SelfMap::table(images),
                                              pts, 1e-8);
    CHECK(rep.pass());
    total_checked += rep.samples_checked;
    total_premise += rep.cone_holds;
  }
  CHECK(total_checked >= 1000);
  CHECK(total_premise >= 200);
}

TEST_CASE("dominance violations are reported with full context") {
  const auto l1 = OrderedVectorSpace::orthant_lp(2, 1.0);
  const auto linf = OrderedVectorSpace::orthant_lp(2, NormSpec::kInf);
  const ConeMetric D = ConeMetric::finite_table(
      {"a", "b"}, {{"a", "b", v2(1.0, 1.0)}}, l1);
  const ConeMetric Dstar = ConeMetric::finite_table(
      {"a", "b"}, {{"a", "b", v2(1.0, 1.0)}}, linf);

  const auto rep = check_dominance_transfer(D, Dstar, SelfMap::identity(),
                                            {Point::label("a"),
                                             Point::label("b")},
                                            1e-9);
  CHECK_FALSE(rep.pass());
  CHECK(rep.samples_checked == 2);
  CHECK(rep.cone_holds == 2);
  CHECK(rep.scalar_holds_given_cone == 0);
  REQUIRE(rep.violations.size() == 2);
  const auto& v = rep.violations[0];
  CHECK(v.scalar_lhs == doctest::Approx(2.0));
  CHECK(v.scalar_rhs == doctest::Approx(1.0));
  CHECK(v.slack == doctest::Approx(1.0));
  CHECK_FALSE(v.detail.empty());
  CHECK((rep.scalar_holds_given_cone < rep.cone_holds) ==
        !rep.violations.empty());

  const ConeMetric D3 = random_cone_metric_table(3, 3, 0);
  CHECK_THROWS_AS(check_dominance_transfer(D, D3, SelfMap::identity(),
                                           {Point::label("a")}, 1e-9),
                  std::invalid_argument);
}

TEST_CASE("the scalar map from the worked example transfers on the half line") {
  const ConeMetric D = line_table(2.0, 1.5, 0.5);
  const SelfMap T = SelfMap::table({{"a", "b"}, {"b", "c"}, {"c", "c"}});
  const BoundedConeMap phi =
      BoundedConeMap::scalar_on_rplus([](double x) { return x / (1.0 + x); });

  const auto rep = check_phi_transfer(D, T, phi, PhiBranch::PsiDecreasing,
                                      kAbc, 1e-9);
  CHECK(rep.pass());
  CHECK(rep.samples_checked == 6);
  CHECK(rep.cone_holds == 6);
  CHECK(rep.scalar_holds_given_cone == 6);

  const EquivalentMetric d(D);
  for (const auto& x : kAbc) {
    for (const auto& y : kAbc) {
      if (x == y) continue;
      const double dxy = d(x, y);
      CHECK(d(T(x), T(y)) <= dxy / (1.0 + dxy) + 1e-9);
    }
  }
}

TEST_CASE("the zero map transfers trivially on the linear branch") {
  const ConeMetric D = ConeMetric::product(1.0, 2.0, ScalarMetric::abs_diff(),
                                           ScalarMetric::abs_diff());
  const BoundedConeMap zero =
      BoundedConeMap::linear(Eigen::MatrixXd::Zero(2, 2));
  const SelfMap constant = affine1(0.0, 0.7);
  const auto pts = real_points({0.0, 0.5, 1.0, 2.0});

  const auto rep = check_phi_transfer(D, constant, zero,
                                      PhiBranch::PhiLinearIncreasing, pts,
                                      1e-9);
  CHECK(rep.pass());
  CHECK(rep.cone_holds == rep.samples_checked);
  CHECK(rep.samples_checked == 12);
}

TEST_CASE("a half identity map reduces to the Banach transfer") {
  const ConeMetric D = ConeMetric::product(1.0, 2.0, ScalarMetric::abs_diff(),
                                           ScalarMetric::abs_diff());
  const BoundedConeMap half =
      BoundedConeMap::linear(0.5 * Eigen::MatrixXd::Identity(2, 2));
  const auto pts = real_points({0.0, 0.4, 1.0, 1.7, 3.0});

  const auto contractive = check_phi_transfer(
      D, affine1(0.4), half, PhiBranch::PhiLinearIncreasing, pts, 1e-9);
  CHECK(contractive.pass());
  CHECK(contractive.cone_holds == contractive.samples_checked);

  const auto vacuous = check_phi_transfer(
      D, SelfMap::identity(), half, PhiBranch::PhiLinearIncreasing, pts, 1e-9);
  CHECK(vacuous.pass());
  CHECK(vacuous.cone_holds == 0);
  CHECK(vacuous.samples_checked == 20);
}

TEST_CASE("branch hypotheses are spot checked before any scoring") {
  const ConeMetric D = line_table(2.0, 1.5, 0.5);
  const BoundedConeMap f =
      BoundedConeMap::scalar_on_rplus([](double x) { return x / (1.0 + x); });
  CHECK_THROWS_AS(check_phi_transfer(D, SelfMap::identity(), f,
                                     PhiBranch::PhiLinearIncreasing, kAbc,
                                     1e-9),
                  std::invalid_argument);

  Eigen::MatrixXd G = mat2(1.0, -0.8, 0.0, 0.6);
  const auto obtuse =
      OrderedVectorSpace::make(2, NormSpec::lp(2.0), ConeSpec::generators(G));
  const ConeMetric table = ConeMetric::finite_table(
      {"a", "b"}, {{"a", "b", v2(-0.8, 0.6)}}, obtuse);
  const BoundedConeMap half =
      BoundedConeMap::linear(0.5 * Eigen::MatrixXd::Identity(2, 2));
  const SelfMap constant = SelfMap::table({{"a", "a"}, {"b", "a"}});
  CHECK_THROWS_AS(check_phi_transfer(table, constant, half,
                                     PhiBranch::PsiDecreasing,
                                     {Point::label("a"), Point::label("b")},
                                     1e-9),
                  std::invalid_argument);
  CHECK(check_phi_transfer(table, constant, half,
                           PhiBranch::PhiLinearIncreasing,
                           {Point::label("a"), Point::label("b")}, 1e-9)
            .pass());

  const BoundedConeMap leaves =
      BoundedConeMap::linear(mat2(-1.0, 0.0, 0.0, 1.0));
  const ConeMetric prod = ConeMetric::product(
      1.0, 2.0, ScalarMetric::abs_diff(), ScalarMetric::abs_diff());
  CHECK_THROWS_AS(check_phi_transfer(prod, SelfMap::identity(), leaves,
                                     PhiBranch::PsiDecreasing,
                                     real_points({0.0, 1.0}), 1e-9),
                  ConeMapRangeError);
}

TEST_CASE("contractive condition coefficients are range checked") {
  CHECK_THROWS_AS(ContractiveCondition::banach(1.0), std::invalid_argument);
  CHECK_THROWS_AS(ContractiveCondition::banach(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(ContractiveCondition::kannan(0.5), std::invalid_argument);
  CHECK_THROWS_AS(ContractiveCondition::chatterjea(0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(ContractiveCondition::two_term(1.0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(ContractiveCondition::quasi_max5(0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ContractiveCondition::quasi_max5(1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ContractiveCondition::quasi_max5_half(1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ContractiveCondition::zamfirescu_max3(1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ContractiveCondition::five_coefficient({0.3, 0.3, 0.3, 0.1, 0.1}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      ContractiveCondition::five_coefficient({-0.1, 0.1, 0.1, 0.1, 0.1}),
      std::invalid_argument);
  CHECK_THROWS_AS(ContractiveCondition::half_beta_max5(1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ContractiveCondition::hardy_rogers_sym({0.3, 0.2, 0.2, 0.2}),
      std::invalid_argument);
  CHECK_THROWS_AS(ContractiveCondition::iterated_power(0, 1, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(ContractiveCondition::iterated_power(1, 1, 1.0),
                  std::invalid_argument);

  CHECK(std::string(ContractiveCondition::banach(0.5).name()) == "banach");
  CHECK(std::string(ContractiveCondition::iterated_power(2, 2, 0.5).name()) ==
        "iterated-power");
  CHECK(std::string(ContractiveCondition::dominance().name()) == "dominance");
  CHECK(ContractiveCondition::iterated_power(2, 3, 0.5).power_m() == 2);
  CHECK(ContractiveCondition::iterated_power(2, 3, 0.5).power_n() == 3);
  CHECK_FALSE(ContractiveCondition::iterated_power(2, 3, 0.5).existential());
  CHECK(ContractiveCondition::iterated_power(2, 3, 0.5, true).existential());
}

TEST_CASE("cone side evaluation on pinned examples") {
  const ConeMetric D = ConeMetric::product(1.0, 1.0, ScalarMetric::abs_diff(),
                                           ScalarMetric::abs_diff());
  const Point x = Point::real(0.0);
  const Point y = Point::real(1.0);

  CHECK_FALSE(eval_condition_cone(ContractiveCondition::banach(0.5), D,
                                  SelfMap::identity(), x, y, 1e-9));
  CHECK(eval_condition_cone(ContractiveCondition::banach(0.3), D,
                            affine1(0.0, 0.7), x, y, 1e-9));

  const double w = 3.0 / 7.0;
  const ConeMetric K = ConeMetric::finite_table(
      {"a", "b", "c"},
      {{"a", "b", v2(1.0, 1.0)},
       {"b", "c", v2(w, w)},
       {"a", "c", v2(1.0, 1.0)}},
      OrderedVectorSpace::orthant_lp(2, 2.0));
  const SelfMap T = SelfMap::table({{"a", "b"}, {"b", "c"}, {"c", "c"}});
  CHECK(eval_condition_cone(ContractiveCondition::kannan(0.4), K, T,
                            Point::label("a"), Point::label("b"), 1e-9));
  CHECK_FALSE(eval_condition_cone(ContractiveCondition::kannan(0.25), K, T,
                                  Point::label("a"), Point::label("b"),
                                  1e-9));
}

TEST_CASE("scalar side evaluation on pinned examples") {
  const ConeMetric D = ConeMetric::product(1.0, 2.0, ScalarMetric::abs_diff(),
                                           ScalarMetric::abs_diff());
  const EquivalentMetric eq(D);
  const std::function<double(const Point&, const Point&)> d =
      [&eq](const Point& a, const Point& b) { return eq(a, b); };
  const Point x = Point::real(0.0);
  const Point y = Point::real(1.0);

  CHECK(eval_condition_scalar(ContractiveCondition::banach(0.2), d,
                              affine1(0.0, 0.4), x, y, 1e-9));
  CHECK_FALSE(eval_condition_scalar(ContractiveCondition::banach(0.1), d,
                                    SelfMap::identity(), x, y, 1e-9));

  CHECK(eval_condition_scalar(ContractiveCondition::quasi_max5(0.9), d,
                              affine1(0.72), x, y, 1e-9));
  CHECK_FALSE(eval_condition_scalar(ContractiveCondition::quasi_max5(0.5), d,
                                    affine1(0.72), x, y, 1e-9));
}

TEST_CASE("scalar evaluation agrees with the direct Banach inequality") {
  const ConeMetric D = random_cone_metric_table(6, 2, 19);
  std::vector<Point> pts;
  for (const auto& l : D.table_labels()) pts.push_back(Point::label(l));
  const EquivalentMetric eq(D);
  const std::function<double(const Point&, const Point&)> d =
      [&eq](const Point& a, const Point& b) { return eq(a, b); };
  const SelfMap T = SelfMap::table({{"p0", "p1"},
                                    {"p1", "p2"},
                                    {"p2", "p0"},
                                    {"p3", "p3"},
                                    {"p4", "p1"},
                                    {"p5", "p4"}});
  const auto cond = ContractiveCondition::banach(0.6);
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      if (x == y) continue;
      const bool got = eval_condition_scalar(cond, d, T, x, y, 1e-9);
      const bool want = d(T(x), T(y)) <= 0.6 * d(x, y) + 1e-9;
      CHECK(got == want);
    }
  }
}

TEST_CASE("iterated power quantifies over admissible witness pairs") {
  const ConeMetric D = random_cone_metric_table(4, 2, 23);
  std::vector<Point> pts;
  for (const auto& l : D.table_labels()) pts.push_back(Point::label(l));
  const SelfMap collapse = SelfMap::table(
      {{"p0", "p1"}, {"p1", "p1"}, {"p2", "p1"}, {"p3", "p1"}});

  const auto universal = ContractiveCondition::iterated_power(2, 2, 0.5);
  const auto rep = check_corollary(universal, D, D.codomain(), collapse, pts,
                                   1e-9);
  CHECK(rep.pass());
  CHECK(rep.cone_holds == rep.samples_checked);

  const SelfMap ident = SelfMap::identity();
  CHECK_FALSE(eval_condition_cone(universal, D, ident, pts[0], pts[1], 1e-9));
  const auto existential = ContractiveCondition::iterated_power(1, 1, 0.99,
                                                                true);
  CHECK_FALSE(eval_condition_cone(existential, D, ident, pts[0], pts[1],
                                  1e-9));
}

TEST_CASE("the corollary check passes on constructed contractive instances") {
  const ConeMetric D = ConeMetric::product(1.0, 2.0, ScalarMetric::abs_diff(),
                                           ScalarMetric::abs_diff());
  const auto pts = real_points({0.0, 0.3, 1.0, 1.9, 2.6});

  const auto banach = check_corollary(ContractiveCondition::banach(0.5), D,
                                      D.codomain(), affine1(0.45), pts, 1e-9);
  CHECK(banach.pass());
  CHECK(banach.cone_holds == banach.samples_checked);
  CHECK(banach.samples_checked == 20);

  const auto dom = check_corollary(ContractiveCondition::dominance(), D,
                                   D.codomain(), SelfMap::identity(), pts,
                                   1e-9);
  CHECK(dom.pass());
  CHECK(dom.cone_holds == dom.samples_checked);
}

TEST_CASE("the corollary check reports scalar violations with context") {
  const auto l1 = OrderedVectorSpace::orthant_lp(2, 1.0);
  const auto linf = OrderedVectorSpace::orthant_lp(2, NormSpec::kInf);
  const ConeMetric D = ConeMetric::finite_table(
      {"a", "b"}, {{"a", "b", v2(1.0, 1.0)}}, l1);
  const auto dstar = std::make_shared<ConeMetric>(ConeMetric::finite_table(
      {"a", "b"}, {{"a", "b", v2(1.0, 1.0)}}, linf));

  const auto rep = check_corollary(ContractiveCondition::dominance(dstar), D,
                                   l1, SelfMap::identity(),
                                   {Point::label("a"), Point::label("b")},
                                   1e-9);
  CHECK_FALSE(rep.pass());
  CHECK(rep.violations.size() == 2);
  CHECK((rep.scalar_holds_given_cone < rep.cone_holds) ==
        !rep.violations.empty());
}
