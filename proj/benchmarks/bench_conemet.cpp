#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "conemet/cone_metrics.hpp"
#include "conemet/cones.hpp"
#include "conemet/metrize.hpp"
#include "conemet/sampling.hpp"
#include "conemet/spaces.hpp"

namespace {

using namespace conemet;

std::vector<Eigen::VectorXd> seeded_points(int dim, int count) {
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(static_cast<size_t>(count));
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd v(dim);
    for (int k = 0; k < dim; ++k) v[k] = u(gen);
    pts.push_back(v);
  }
  return pts;
}

void BM_ProjectSecondOrder(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const ConeSpec cone = ConeSpec::second_order(dim);
  const auto pts = seeded_points(dim, 256);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_onto_cone(cone, pts[i % pts.size()]));
    ++i;
  }
}
BENCHMARK(BM_ProjectSecondOrder)->Arg(3)->Arg(8)->Arg(32);

void BM_ProjectGenerators(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  Eigen::MatrixXd G(3, k);
  for (int j = 0; j < k; ++j) {
    Eigen::Vector3d g(u(gen), u(gen), u(gen));
    G.col(j) = g / g.norm();
  }
  const ConeSpec cone = ConeSpec::generators(G);
  const auto pts = seeded_points(3, 256);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_onto_cone(cone, pts[i % pts.size()]));
    ++i;
  }
}
BENCHMARK(BM_ProjectGenerators)->Arg(3)->Arg(6)->Arg(12);

void BM_MetrizeMonotoneFastPath(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto space = OrderedVectorSpace::orthant_lp(dim, 2.0);
  const auto pts = seeded_points(dim, 256);
  std::vector<Eigen::VectorXd> cs;
  for (const auto& p : pts) cs.push_back(p.cwiseAbs());
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(metrize_vector(space, cs[i % cs.size()]));
    ++i;
  }
}
BENCHMARK(BM_MetrizeMonotoneFastPath)->Arg(2)->Arg(8)->Arg(64);

void BM_MetrizeLocalSearch(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto space = OrderedVectorSpace::make(dim, NormSpec::lp(1.0),
                                              ConeSpec::second_order(dim));
  std::vector<Eigen::VectorXd> cs;
  for (int i = 0; i < 32; ++i) {
    cs.push_back(sample_cone_point(space.cone, 100 + i, i));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(metrize_vector_with_method(
        space, cs[i % cs.size()], MetrizeMethod::LocalSearch));
    ++i;
  }
}
BENCHMARK(BM_MetrizeLocalSearch)->Arg(3)->Arg(8);

void BM_DistanceMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ConeMetric table = random_cone_metric_table(n, 3, 11);
  const auto space = OrderedVectorSpace::orthant_lp(3, 2.0);
  std::vector<Point> pts;
  for (const auto& l : table.table_labels()) pts.push_back(Point::label(l));
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_matrix(table, space, pts));
  }
}
BENCHMARK(BM_DistanceMatrix)->Arg(5)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
