#pragma once

#include <Eigen/Core>

namespace conemet {

struct NnlsResult {
  Eigen::VectorXd coefficients;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Solves min_{x >= 0} ||A x - b||_2 with the Lawson-Hanson active-set
/// method. The iteration cap is 100 * max(rows, cols) unless overridden.
/// On hitting the cap the best feasible iterate is returned with
/// converged = false.
NnlsResult nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                int max_iterations = 0);

}  // namespace conemet
