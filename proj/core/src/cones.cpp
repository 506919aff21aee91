#include "conemet/cones.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "conemet/nnls.hpp"
#include "conemet/sampling.hpp"

namespace conemet {

const char* to_string(ConeKind kind) {
  switch (kind) {
    case ConeKind::Orthant: return "orthant";
    case ConeKind::SecondOrder: return "second-order";
    case ConeKind::Generators: return "generators";
    case ConeKind::Halfspaces: return "halfspaces";
  }
  return "unknown";
}

namespace {

constexpr int kDykstraMaxSweeps = 10000;

// Enumerates candidate facet normals of cone(G): unit vectors orthogonal to
// dim-1 independent generators with every generator on one side. For a
// full-dimensional cone this yields a complete outer description.
std::vector<Eigen::VectorXd> enumerate_facets(const Eigen::MatrixXd& G) {
  std::vector<Eigen::VectorXd> facets;
  const int dim = static_cast<int>(G.rows());
  const int k = static_cast<int>(G.cols());

  Eigen::JacobiSVD<Eigen::MatrixXd> full(G);
  const double gscale = full.singularValues().size() > 0
                            ? full.singularValues()[0]
                            : 0.0;
  if (gscale <= 0.0) return facets;
  const int rank =
      static_cast<int>((full.singularValues().array() > 1e-10 * gscale).count());
  if (rank < dim) return facets;

  const double side_tol = 1e-10 * G.colwise().norm().maxCoeff();

  auto consider = [&](const Eigen::VectorXd& n) {
    bool plus = true, minus = true;
    for (int j = 0; j < k; ++j) {
      const double s = n.dot(G.col(j));
      if (s < -side_tol) plus = false;
      if (s > side_tol) minus = false;
    }
    if (plus == minus) return;
    const Eigen::VectorXd cand = plus ? n : Eigen::VectorXd(-n);
    for (const auto& f : facets) {
      if (f.dot(cand) > 1.0 - 1e-9) return;
    }
    facets.push_back(cand);
  };

  if (dim == 1) {
    Eigen::VectorXd n(1);
    n[0] = 1.0;
    consider(n);
    return facets;
  }

  std::vector<int> idx(dim - 1);
  std::vector<int> comb(dim - 1);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == dim - 1) {
      Eigen::MatrixXd S(dim, dim - 1);
      for (int t = 0; t < dim - 1; ++t) S.col(t) = G.col(comb[t]);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(S, Eigen::ComputeFullU);
      const auto& sv = svd.singularValues();
      if (sv[0] <= 0.0 || sv[dim - 2] < 1e-10 * sv[0]) return;
      consider(svd.matrixU().col(dim - 1));
      return;
    }
    for (int j = start; j <= k - (dim - 1 - depth); ++j) {
      comb[depth] = j;
      rec(j + 1, depth + 1);
    }
  };
  if (k >= dim - 1) rec(0, 0);
  return facets;
}

Eigen::VectorXd project_halfspace(const Eigen::VectorXd& a, double sqn,
                                  const Eigen::VectorXd& v) {
  const double s = a.dot(v);
  if (s >= 0.0 || sqn == 0.0) return v;
  return v - (s / sqn) * a;
}

ProjectionResult dykstra_project(const Eigen::MatrixXd& A,
                                 const Eigen::VectorXd& v) {
  const int m = static_cast<int>(A.rows());
  const double scale = 1.0 + v.norm();

  std::vector<Eigen::VectorXd> rows(m);
  std::vector<double> sqn(m);
  for (int i = 0; i < m; ++i) {
    rows[i] = A.row(i).transpose();
    sqn[i] = rows[i].squaredNorm();
  }

  ProjectionResult out;
  Eigen::VectorXd x = v;
  std::vector<Eigen::VectorXd> corr(m, Eigen::VectorXd::Zero(v.size()));
  int sweep = 0;
  double delta = 0.0;
  for (; sweep < kDykstraMaxSweeps; ++sweep) {
    const Eigen::VectorXd prev = x;
    for (int i = 0; i < m; ++i) {
      const Eigen::VectorXd y = x + corr[i];
      x = project_halfspace(rows[i], sqn[i], y);
      corr[i] = y - x;
    }
    delta = (x - prev).norm();
    if (delta <= 1e-14 * scale) {
      ++sweep;
      break;
    }
  }
  double deficit = 0.0;
  for (int i = 0; i < m; ++i) {
    if (sqn[i] > 0.0) {
      deficit = std::max(deficit, -rows[i].dot(x) / std::sqrt(sqn[i]));
    }
  }
  out.point = x;
  out.iterations = sweep;
  out.converged = sweep < kDykstraMaxSweeps;
  out.residual = delta + std::max(0.0, deficit);
  return out;
}

// min over the probability simplex of ||G sigma||, a zero certifies a line
// in cone(G). Edge minima are closed form; projected gradient refines.
double simplex_min_norm(const Eigen::MatrixXd& G) {
  const int k = static_cast<int>(G.cols());
  if (k == 0) return 0.0;

  auto objective = [&](const Eigen::VectorXd& s) { return (G * s).norm(); };

  Eigen::VectorXd best = Eigen::VectorXd::Zero(k);
  best[0] = 1.0;
  double best_val = objective(best);
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXd s = Eigen::VectorXd::Unit(k, i);
    const double f = objective(s);
    if (f < best_val) {
      best_val = f;
      best = s;
    }
    for (int j = i + 1; j < k; ++j) {
      const Eigen::VectorXd gi = G.col(i), gj = G.col(j), d = gi - gj;
      const double dn = d.squaredNorm();
      double t = dn > 0.0 ? std::clamp(gi.dot(d) / dn, 0.0, 1.0) : 0.0;
      Eigen::VectorXd e = Eigen::VectorXd::Zero(k);
      e[i] = 1.0 - t;
      e[j] = t;
      const double fe = objective(e);
      if (fe < best_val) {
        best_val = fe;
        best = e;
      }
    }
  }

  auto project_simplex = [](Eigen::VectorXd u) {
    std::vector<double> s(u.data(), u.data() + u.size());
    std::sort(s.begin(), s.end(), std::greater<double>());
    double cum = 0.0, theta = 0.0;
    int rho = 0;
    for (size_t j = 0; j < s.size(); ++j) {
      cum += s[j];
      const double t = (cum - 1.0) / static_cast<double>(j + 1);
      if (s[j] - t > 0.0) {
        rho = static_cast<int>(j + 1);
        theta = t;
      }
    }
    if (rho == 0) theta = (cum - 1.0) / static_cast<double>(s.size());
    return Eigen::VectorXd((u.array() - theta).max(0.0));
  };

  const Eigen::MatrixXd H = G.transpose() * G;
  const double L = std::max(1e-30, H.operatorNorm());
  Eigen::VectorXd sigma = best;
  for (int it = 0; it < 2000; ++it) {
    sigma = project_simplex(sigma - (H * sigma) / L);
    const double f = objective(sigma);
    if (f < best_val) {
      best_val = f;
      best = sigma;
    }
  }
  return best_val;
}

}  // namespace

ConeSpec ConeSpec::orthant(int dim) {
  if (dim <= 0) throw std::invalid_argument("ConeSpec: dim must be positive");
  return ConeSpec(ConeKind::Orthant, dim);
}

ConeSpec ConeSpec::second_order(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("ConeSpec: second-order cone needs dim >= 2");
  }
  return ConeSpec(ConeKind::SecondOrder, dim);
}

ConeSpec ConeSpec::generators(Eigen::MatrixXd G) {
  if (G.rows() <= 0 || G.cols() <= 0) {
    throw std::invalid_argument("ConeSpec: generator matrix is empty");
  }
  ConeSpec c(ConeKind::Generators, static_cast<int>(G.rows()));
  c.facets_ = enumerate_facets(G);
  c.mat_ = std::move(G);
  return c;
}

ConeSpec ConeSpec::halfspaces(Eigen::MatrixXd A) {
  if (A.rows() <= 0 || A.cols() <= 0) {
    throw std::invalid_argument("ConeSpec: halfspace matrix is empty");
  }
  ConeSpec c(ConeKind::Halfspaces, static_cast<int>(A.cols()));
  c.mat_ = std::move(A);
  return c;
}

const Eigen::MatrixXd& ConeSpec::generator_matrix() const {
  if (kind_ != ConeKind::Generators) {
    throw std::logic_error("ConeSpec: not a generator cone");
  }
  return mat_;
}

const Eigen::MatrixXd& ConeSpec::halfspace_matrix() const {
  if (kind_ != ConeKind::Halfspaces) {
    throw std::logic_error("ConeSpec: not a halfspace cone");
  }
  return mat_;
}

const std::vector<Eigen::VectorXd>& ConeSpec::facet_normals() const {
  return facets_;
}

bool cone_contains(const ConeSpec& cone, const Eigen::VectorXd& v,
                   double tau) {
  if (v.size() != cone.dim()) {
    throw std::invalid_argument("cone_contains: dimension mismatch");
  }
  switch (cone.kind()) {
    case ConeKind::Orthant:
      return v.minCoeff() >= -tau;
    case ConeKind::SecondOrder:
      return v[v.size() - 1] - v.head(v.size() - 1).norm() >= -tau;
    case ConeKind::Halfspaces:
      return (cone.halfspace_matrix() * v).minCoeff() >=
             -tau * (1.0 + v.norm());
    case ConeKind::Generators: {
      const NnlsResult fit = nnls(cone.generator_matrix(), v);
      return fit.residual_norm <= tau * (1.0 + v.norm());
    }
  }
  return false;
}

bool interior_contains(const ConeSpec& cone, const Eigen::VectorXd& v,
                       double margin) {
  if (v.size() != cone.dim()) {
    throw std::invalid_argument("interior_contains: dimension mismatch");
  }
  switch (cone.kind()) {
    case ConeKind::Orthant:
      return v.minCoeff() >= margin;
    case ConeKind::SecondOrder:
      return v[v.size() - 1] - v.head(v.size() - 1).norm() >= margin;
    case ConeKind::Halfspaces: {
      const Eigen::MatrixXd& A = cone.halfspace_matrix();
      for (Eigen::Index i = 0; i < A.rows(); ++i) {
        const double n = A.row(i).norm();
        if (n == 0.0) continue;
        if (A.row(i).dot(v) < margin * n) return false;
      }
      return true;
    }
    case ConeKind::Generators: {
      const auto& facets = cone.facet_normals();
      if (facets.empty()) return false;
      for (const auto& f : facets) {
        if (f.dot(v) < margin) return false;
      }
      return true;
    }
  }
  return false;
}

bool dual_contains(const ConeSpec& cone, const Eigen::VectorXd& v,
                   double tau) {
  if (v.size() != cone.dim()) {
    throw std::invalid_argument("dual_contains: dimension mismatch");
  }
  switch (cone.kind()) {
    case ConeKind::Orthant:
    case ConeKind::SecondOrder:
      return cone_contains(cone, v, tau);
    case ConeKind::Generators: {
      const Eigen::MatrixXd& G = cone.generator_matrix();
      const double slack = -tau * (1.0 + v.norm());
      for (Eigen::Index j = 0; j < G.cols(); ++j) {
        const double n = G.col(j).norm();
        if (n == 0.0) continue;
        if (v.dot(G.col(j)) / n < slack) return false;
      }
      return true;
    }
    case ConeKind::Halfspaces: {
      const NnlsResult fit =
          nnls(cone.halfspace_matrix().transpose(), v);
      return fit.residual_norm <= tau * (1.0 + v.norm());
    }
  }
  return false;
}

ProjectionResult project_onto_cone(const ConeSpec& cone,
                                   const Eigen::VectorXd& v) {
  if (v.size() != cone.dim()) {
    throw std::invalid_argument("project_onto_cone: dimension mismatch");
  }
  ProjectionResult out;
  switch (cone.kind()) {
    case ConeKind::Orthant:
      out.point = v.cwiseMax(0.0);
      return out;
    case ConeKind::SecondOrder: {
      const Eigen::Index d = v.size();
      const Eigen::VectorXd x = v.head(d - 1);
      const double t = v[d - 1];
      const double a = x.norm();
      if (a <= t) {
        out.point = v;
      } else if (a <= -t) {
        out.point = Eigen::VectorXd::Zero(d);
      } else {
        const double c = 0.5 * (a + t);
        out.point.resize(d);
        out.point.head(d - 1) = (c / a) * x;
        out.point[d - 1] = c;
      }
      return out;
    }
    case ConeKind::Generators: {
      const NnlsResult fit = nnls(cone.generator_matrix(), v);
      out.point = cone.generator_matrix() * fit.coefficients;
      out.iterations = fit.iterations;
      out.converged = fit.converged;
      out.residual = fit.converged ? 0.0 : fit.residual_norm;
      return out;
    }
    case ConeKind::Halfspaces:
      return dykstra_project(cone.halfspace_matrix(), v);
  }
  return out;
}

ProjectionResult project_onto_dual_cone(const ConeSpec& cone,
                                        const Eigen::VectorXd& v) {
  if (v.size() != cone.dim()) {
    throw std::invalid_argument("project_onto_dual_cone: dimension mismatch");
  }
  switch (cone.kind()) {
    case ConeKind::Orthant:
    case ConeKind::SecondOrder:
      return project_onto_cone(cone, v);
    case ConeKind::Generators:
      return dykstra_project(cone.generator_matrix().transpose(), v);
    case ConeKind::Halfspaces: {
      const Eigen::MatrixXd gens = cone.halfspace_matrix().transpose();
      const NnlsResult fit = nnls(gens, v);
      ProjectionResult out;
      out.point = gens * fit.coefficients;
      out.iterations = fit.iterations;
      out.converged = fit.converged;
      out.residual = fit.converged ? 0.0 : fit.residual_norm;
      return out;
    }
  }
  return ProjectionResult{};
}

ConeValidationReport validate_cone(const ConeSpec& cone, double tau) {
  ConeValidationReport rep;
  const int dim = cone.dim();

  if (cone.kind() == ConeKind::Generators) {
    const Eigen::MatrixXd& G = cone.generator_matrix();
    std::vector<int> nonzero_cols;
    for (Eigen::Index j = 0; j < G.cols(); ++j) {
      if (G.col(j).norm() > tau) {
        nonzero_cols.push_back(static_cast<int>(j));
      } else {
        rep.failures.push_back("generator " + std::to_string(j) +
                               " is numerically zero");
      }
    }
    rep.nonzero = !nonzero_cols.empty();
    if (!rep.nonzero) {
      rep.failures.push_back("cone is trivial: all generators vanish");
      return rep;
    }
    Eigen::MatrixXd Gn(dim, static_cast<Eigen::Index>(nonzero_cols.size()));
    for (size_t j = 0; j < nonzero_cols.size(); ++j) {
      Gn.col(static_cast<Eigen::Index>(j)) = G.col(nonzero_cols[j]);
    }
    const double min_combo = simplex_min_norm(Gn);
    rep.pointed = min_combo > tau * std::max(1.0, Gn.colwise().norm().maxCoeff());
    if (!rep.pointed) {
      rep.failures.push_back(
          "cone contains a line: a convex combination of generators vanishes");
    }
    const auto& facets = cone.facet_normals();
    if (facets.empty()) {
      rep.failures.push_back(
          "cone is not full-dimensional: interior is empty");
      return rep;
    }
    std::vector<Eigen::VectorXd> candidates;
    Eigen::VectorXd gsum = Eigen::VectorXd::Zero(dim);
    for (Eigen::Index j = 0; j < Gn.cols(); ++j) gsum += Gn.col(j).normalized();
    candidates.push_back(gsum);
    Eigen::VectorXd fsum = Eigen::VectorXd::Zero(dim);
    for (const auto& f : facets) fsum += f;
    const NnlsResult pull = nnls(Gn, fsum);
    candidates.push_back(Gn * pull.coefficients);
    for (std::uint64_t i = 0; i < 8; ++i) {
      candidates.push_back(sample_cone_point(cone, 0x5eedULL, i));
    }
    for (const auto& w : candidates) {
      if (w.norm() <= tau) continue;
      double margin = std::numeric_limits<double>::infinity();
      for (const auto& f : facets) margin = std::min(margin, f.dot(w));
      if (margin > rep.interior_margin) {
        rep.interior_margin = margin;
        rep.interior_witness = w;
      }
    }
    rep.interior_nonempty = rep.interior_margin > tau;
    if (!rep.interior_nonempty) {
      rep.failures.push_back("no interior witness found");
    }
    return rep;
  }

  if (cone.kind() == ConeKind::Halfspaces) {
    const Eigen::MatrixXd& A = cone.halfspace_matrix();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const double top = svd.singularValues()[0];
    const int rank = top > 0.0
                         ? static_cast<int>((svd.singularValues().array() >
                                             1e-10 * top)
                                                .count())
                         : 0;
    rep.pointed = rank == dim;
    if (!rep.pointed) {
      rep.failures.push_back(
          "cone contains a line: halfspace normals do not span the space");
    }
    Eigen::VectorXd wsum = Eigen::VectorXd::Zero(dim);
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      const double n = A.row(i).norm();
      if (n > 0.0) wsum += A.row(i).transpose() / n;
    }
    std::vector<Eigen::VectorXd> candidates{wsum};
    for (std::uint64_t i = 0; i < 8; ++i) {
      candidates.push_back(sample_cone_point(cone, 0x5eedULL, i));
    }
    for (const auto& w : candidates) {
      if (w.norm() <= tau) continue;
      double margin = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < A.rows(); ++i) {
        const double n = A.row(i).norm();
        if (n > 0.0) margin = std::min(margin, A.row(i).dot(w) / n);
      }
      if (margin > rep.interior_margin) {
        rep.interior_margin = margin;
        rep.interior_witness = w;
      }
    }
    rep.interior_nonempty = rep.interior_margin > tau;
    if (!rep.interior_nonempty) {
      rep.failures.push_back("no interior witness found");
    }
    rep.nonzero = rep.interior_nonempty ||
                  rank < dim;
    if (!rep.nonzero) {
      bool found = false;
      for (std::uint64_t i = 0; i < 16 && !found; ++i) {
        found = sample_cone_point(cone, 0xbeefULL, i).norm() > 1e-8;
      }
      rep.nonzero = found;
      if (!found) rep.failures.push_back("cone is trivial: only the origin");
    }
    return rep;
  }

  rep.nonzero = true;
  rep.pointed = true;
  if (cone.kind() == ConeKind::Orthant) {
    rep.interior_witness = Eigen::VectorXd::Ones(dim);
    rep.interior_margin = 1.0;
  } else {
    rep.interior_witness = Eigen::VectorXd::Zero(dim);
    rep.interior_witness[dim - 1] = 1.0;
    rep.interior_margin = 1.0;
  }
  rep.interior_nonempty = true;
  return rep;
}

}  // namespace conemet
