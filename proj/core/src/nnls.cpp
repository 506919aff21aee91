#include "conemet/nnls.hpp"

#include <Eigen/Dense>
#include <limits>
#include <stdexcept>
#include <vector>

namespace conemet {

namespace {

Eigen::VectorXd solve_passive(const Eigen::MatrixXd& A,
                              const Eigen::VectorXd& b,
                              const std::vector<int>& passive) {
  Eigen::MatrixXd Ap(A.rows(), static_cast<Eigen::Index>(passive.size()));
  for (size_t k = 0; k < passive.size(); ++k) Ap.col(k) = A.col(passive[k]);
  return Ap.colPivHouseholderQr().solve(b);
}

}  // namespace

NnlsResult nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                int max_iterations) {
  if (A.rows() != b.size()) {
    throw std::invalid_argument("nnls: A and b have incompatible sizes");
  }
  const Eigen::Index n = A.cols();
  if (max_iterations <= 0) {
    max_iterations = 100 * static_cast<int>(std::max(A.rows(), A.cols()));
  }

  NnlsResult out;
  out.coefficients = Eigen::VectorXd::Zero(n);
  if (n == 0) {
    out.residual_norm = b.norm();
    out.converged = true;
    return out;
  }

  const double scale = std::max(1.0, (A.transpose() * b).cwiseAbs().maxCoeff());
  const double tol = 1e-12 * scale;

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  std::vector<bool> in_passive(n, false);
  std::vector<int> passive;
  int iter = 0;

  while (iter < max_iterations) {
    const Eigen::VectorXd w = A.transpose() * (b - A * x);
    int best = -1;
    double best_w = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!in_passive[j] && w[j] > best_w) {
        best_w = w[j];
        best = static_cast<int>(j);
      }
    }
    if (best < 0) {
      out.converged = true;
      break;
    }
    in_passive[best] = true;
    passive.push_back(best);

    while (iter < max_iterations) {
      ++iter;
      const Eigen::VectorXd z = solve_passive(A, b, passive);
      bool all_positive = true;
      for (size_t k = 0; k < passive.size(); ++k) {
        if (z[static_cast<Eigen::Index>(k)] <= 0.0) {
          all_positive = false;
          break;
        }
      }
      if (all_positive) {
        x.setZero();
        for (size_t k = 0; k < passive.size(); ++k) {
          x[passive[k]] = z[static_cast<Eigen::Index>(k)];
        }
        break;
      }
      double alpha = std::numeric_limits<double>::infinity();
      for (size_t k = 0; k < passive.size(); ++k) {
        const double zk = z[static_cast<Eigen::Index>(k)];
        if (zk <= 0.0) {
          const double xk = x[passive[k]];
          alpha = std::min(alpha, xk / (xk - zk));
        }
      }
      for (size_t k = 0; k < passive.size(); ++k) {
        const int j = passive[k];
        x[j] += alpha * (z[static_cast<Eigen::Index>(k)] - x[j]);
      }
      std::vector<int> still;
      for (int j : passive) {
        if (x[j] > tol) {
          still.push_back(j);
        } else {
          x[j] = 0.0;
          in_passive[j] = false;
        }
      }
      passive = std::move(still);
      if (passive.empty()) break;
    }
  }

  out.coefficients = x;
  out.residual_norm = (A * x - b).norm();
  out.iterations = iter;
  return out;
}

}  // namespace conemet
