#include "conemet/sampling.hpp"

#include <cmath>
#include <random>

namespace conemet {

namespace {

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t h = seed ^ (0x9e3779b97f4a7c15ULL + index);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return std::mt19937_64(h);
}

Eigen::VectorXd gaussian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = normal(rng);
  return v;
}

}  // namespace

std::vector<Eigen::VectorXd> canonical_rays(const ConeSpec& cone) {
  std::vector<Eigen::VectorXd> rays;
  const int dim = cone.dim();
  switch (cone.kind()) {
    case ConeKind::Orthant:
      for (int i = 0; i < dim; ++i) {
        rays.push_back(Eigen::VectorXd::Unit(dim, i));
      }
      break;
    case ConeKind::SecondOrder: {
      Eigen::VectorXd axis = Eigen::VectorXd::Zero(dim);
      axis[dim - 1] = 1.0;
      rays.push_back(axis);
      for (int i = 0; i + 1 < dim; ++i) {
        Eigen::VectorXd r = Eigen::VectorXd::Zero(dim);
        r[i] = 1.0;
        r[dim - 1] = 1.0;
        rays.push_back(r);
        r[i] = -1.0;
        rays.push_back(r);
      }
      break;
    }
    case ConeKind::Generators: {
      const Eigen::MatrixXd& G = cone.generator_matrix();
      for (Eigen::Index j = 0; j < G.cols(); ++j) {
        const double n = G.col(j).norm();
        if (n > 0.0) rays.push_back(G.col(j) / n);
      }
      break;
    }
    case ConeKind::Halfspaces: {
      const Eigen::MatrixXd& A = cone.halfspace_matrix();
      Eigen::VectorXd sum = Eigen::VectorXd::Zero(dim);
      for (Eigen::Index i = 0; i < A.rows(); ++i) {
        const double n = A.row(i).norm();
        if (n > 0.0) sum += A.row(i).transpose() / n;
      }
      if (cone_contains(cone, sum, 1e-9)) rays.push_back(sum);
      for (int i = 0; i < dim; ++i) {
        for (double s : {1.0, -1.0}) {
          const Eigen::VectorXd e = s * Eigen::VectorXd::Unit(dim, i);
          if (cone_contains(cone, e, 1e-9)) rays.push_back(e);
        }
      }
      break;
    }
  }
  return rays;
}

Eigen::VectorXd sample_cone_point(const ConeSpec& cone, std::uint64_t seed,
                                  std::uint64_t index) {
  auto rng = stream_rng(seed, index);
  const int dim = cone.dim();
  switch (cone.kind()) {
    case ConeKind::Orthant:
      return gaussian(dim, rng).cwiseAbs();
    case ConeKind::SecondOrder: {
      Eigen::VectorXd v(dim);
      Eigen::VectorXd x = gaussian(dim - 1, rng);
      std::exponential_distribution<double> expo(1.0);
      v.head(dim - 1) = x;
      v[dim - 1] = x.norm() * (1.0 + expo(rng));
      if (dim == 1) v[0] = std::abs(gaussian(1, rng)[0]);
      return v;
    }
    case ConeKind::Generators: {
      const Eigen::MatrixXd& G = cone.generator_matrix();
      const Eigen::VectorXd lambda =
          gaussian(static_cast<int>(G.cols()), rng).cwiseAbs();
      return G * lambda;
    }
    case ConeKind::Halfspaces: {
      for (int attempt = 0; attempt < 4; ++attempt) {
        const ProjectionResult pr =
            project_onto_cone(cone, gaussian(dim, rng) * (1.0 + attempt));
        if (pr.point.norm() > 1e-12) return pr.point;
      }
      return Eigen::VectorXd::Zero(dim);
    }
  }
  return Eigen::VectorXd::Zero(dim);
}

}  // namespace conemet
