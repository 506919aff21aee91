#include "conemet/transfer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "conemet/metrize.hpp"
#include "conemet/sampling.hpp"

namespace conemet {

namespace {

bool is_diagonal(const Eigen::MatrixXd& M) {
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (i != j && M(i, j) != 0.0) return false;
    }
  }
  return true;
}

void check_range(const ConeSpec& cone, const Eigen::VectorXd& x,
                 const Eigen::VectorXd& y, double tol) {
  if (!cone_contains(cone, y, tol * (1.0 + y.norm()))) {
    throw ConeMapRangeError(
        "the map leaves the cone at a sampled point; it does not send the "
        "cone into itself",
        x, y);
  }
}

std::vector<Eigen::VectorXd> sample_directions(const ConeSpec& cone,
                                               int sample_count,
                                               std::uint64_t seed) {
  std::vector<Eigen::VectorXd> pts = canonical_rays(cone);
  for (int i = 0; i < sample_count; ++i) {
    pts.push_back(sample_cone_point(cone, seed, static_cast<std::uint64_t>(i)));
  }
  return pts;
}

}  // namespace

BoundedConeMap BoundedConeMap::linear(Eigen::MatrixXd M) {
  if (M.rows() != M.cols() || M.rows() == 0) {
    throw std::invalid_argument("BoundedConeMap: matrix must be square");
  }
  BoundedConeMap m(Kind::LinearMatrix);
  m.matrix_ = std::move(M);
  return m;
}

BoundedConeMap BoundedConeMap::scalar_on_rplus(
    std::function<double(double)> f) {
  if (!f) throw std::invalid_argument("BoundedConeMap: empty function");
  BoundedConeMap m(Kind::ScalarOnRplus);
  m.f_ = std::move(f);
  return m;
}

BoundedConeMap BoundedConeMap::sampled_rays(
    std::vector<Eigen::VectorXd> rays, std::vector<Eigen::VectorXd> images) {
  if (rays.empty() || rays.size() != images.size()) {
    throw std::invalid_argument(
        "BoundedConeMap: need the same nonzero number of rays and images");
  }
  for (size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != rays[0].size() ||
        images[i].size() != rays[0].size()) {
      throw std::invalid_argument("BoundedConeMap: inconsistent dimensions");
    }
    if (rays[i].norm() <= 1e-14) {
      throw std::invalid_argument("BoundedConeMap: zero ray");
    }
  }
  BoundedConeMap m(Kind::SampledRays);
  m.rays_ = std::move(rays);
  m.images_ = std::move(images);
  return m;
}

const Eigen::MatrixXd& BoundedConeMap::matrix() const {
  if (kind_ != Kind::LinearMatrix) {
    throw std::logic_error("BoundedConeMap: not a linear map");
  }
  return matrix_;
}

Eigen::VectorXd BoundedConeMap::apply(const Eigen::VectorXd& x) const {
  switch (kind_) {
    case Kind::LinearMatrix:
      if (x.size() != matrix_.cols()) {
        throw std::invalid_argument("BoundedConeMap: dimension mismatch");
      }
      return matrix_ * x;
    case Kind::ScalarOnRplus: {
      if (x.size() != 1) {
        throw std::invalid_argument(
            "BoundedConeMap: scalar map needs one-dimensional input");
      }
      Eigen::VectorXd y(1);
      y[0] = f_(x[0]);
      return y;
    }
    case Kind::SampledRays: {
      const double nx = x.norm();
      if (nx <= 1e-14) return Eigen::VectorXd::Zero(rays_[0].size());
      for (size_t i = 0; i < rays_.size(); ++i) {
        const double alpha = nx / rays_[i].norm();
        if ((x - alpha * rays_[i]).norm() <= 1e-9 * (1.0 + nx)) {
          return alpha * images_[i];
        }
      }
      throw std::invalid_argument(
          "BoundedConeMap: the point is not on a stored ray; the sampled map "
          "is defined only along its rays");
    }
  }
  return Eigen::VectorXd();
}

double phi_operator_norm(const BoundedConeMap& phi,
                         const OrderedVectorSpace& space, int sample_count,
                         std::uint64_t seed) {
  if (sample_count < 1) {
    throw std::invalid_argument("phi_operator_norm: sample_count must be >= 1");
  }

  if (phi.kind() == BoundedConeMap::Kind::ScalarOnRplus) {
    if (space.dim != 1 || space.cone.kind() != ConeKind::Orthant) {
      throw std::invalid_argument(
          "phi_operator_norm: scalar maps live on the one-dimensional "
          "orthant");
    }
    auto rng_t = [&](int i) {
      const Eigen::VectorXd s =
          sample_cone_point(space.cone, seed, static_cast<std::uint64_t>(i));
      return std::abs(s[0]);
    };
    double best = 0.0;
    auto consider = [&](double t) {
      if (t <= 1e-12) return;
      Eigen::VectorXd x(1);
      x[0] = t;
      const Eigen::VectorXd y = phi.apply(x);
      check_range(space.cone, x, y, space.tolerance);
      best = std::max(best, space.norm_of(y) / space.norm_of(x));
    };
    consider(1.0);
    for (int i = 0; i < sample_count; ++i) {
      const double u = rng_t(i);
      consider(u);
      consider(1.0 / (u + 1e-3));
    }
    return best;
  }

  if (phi.kind() == BoundedConeMap::Kind::SampledRays) {
    double best = 0.0;
    for (size_t i = 0; i < phi.rays().size(); ++i) {
      check_range(space.cone, phi.rays()[i], phi.images()[i], space.tolerance);
      const double nr = space.norm_of(phi.rays()[i]);
      if (nr > 1e-12) {
        best = std::max(best, space.norm_of(phi.images()[i]) / nr);
      }
    }
    return best;
  }

  const Eigen::MatrixXd& M = phi.matrix();
  if (M.cols() != space.dim) {
    throw std::invalid_argument("phi_operator_norm: dimension mismatch");
  }

  for (const auto& x : sample_directions(space.cone, std::min(sample_count, 64),
                                         seed ^ 0xfeedULL)) {
    if (x.norm() <= 1e-12) continue;
    check_range(space.cone, x, M * x, space.tolerance);
  }

  if (space.cone.kind() == ConeKind::Orthant && is_diagonal(M)) {
    return M.diagonal().cwiseAbs().maxCoeff();
  }
  if (space.cone.kind() == ConeKind::Orthant && space.norm.is_euclidean() &&
      (M.array() >= 0.0).all()) {
    // Entrywise nonnegative: M^T M is nonnegative, so its top eigenvector
    // can be taken in the orthant and the restricted supremum is sigma_max.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    return svd.singularValues()[0];
  }

  double best = 0.0;
  for (const auto& x : sample_directions(space.cone, sample_count, seed)) {
    const double nx = space.norm_of(x);
    if (nx <= 1e-12) continue;
    const Eigen::VectorXd y = M * x;
    check_range(space.cone, x, y, space.tolerance);
    best = std::max(best, space.norm_of(y) / nx);
  }
  return best;
}

double psi_from_phi(const BoundedConeMap& phi, const OrderedVectorSpace& space,
                    double t, int sample_count, std::uint64_t seed) {
  if (t < 0.0) {
    throw std::invalid_argument("psi_from_phi: t must be nonnegative");
  }
  switch (phi.kind()) {
    case BoundedConeMap::Kind::LinearMatrix:
    case BoundedConeMap::Kind::SampledRays:
      return t * phi_operator_norm(phi, space, sample_count, seed);
    case BoundedConeMap::Kind::ScalarOnRplus: {
      if (space.dim != 1 || space.cone.kind() != ConeKind::Orthant) {
        throw std::invalid_argument(
            "psi_from_phi: scalar maps live on the one-dimensional orthant");
      }
      Eigen::VectorXd x(1);
      x[0] = t;
      const Eigen::VectorXd y = phi.apply(x);
      check_range(space.cone, x, y, space.tolerance);
      return space.norm_of(y);
    }
  }
  return 0.0;
}

TransferReport check_dominance_transfer(const ConeMetric& D,
                                        const ConeMetric& Dstar,
                                        const SelfMap& T,
                                        const std::vector<Point>& points,
                                        double tau) {
  if (D.codomain().dim != Dstar.codomain().dim) {
    throw std::invalid_argument(
        "check_dominance_transfer: the cone metrics take values in "
        "different dimensions");
  }
  const EquivalentMetric d(D);
  const EquivalentMetric dstar(Dstar);
  const ConeSpec& order = D.codomain().cone;

  TransferReport rep;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ++rep.samples_checked;
      const Point Tx = T(points[i]);
      const Point Ty = T(points[j]);
      const Eigen::VectorXd lhs = D.eval(Tx, Ty);
      const Eigen::VectorXd rhs = Dstar.eval(points[i], points[j]);
      if (!cone_contains(order, rhs - lhs, tau)) continue;
      ++rep.cone_holds;
      const double sl = d(Tx, Ty);
      const double sr = dstar(points[i], points[j]);
      if (sl <= sr + tau) {
        ++rep.scalar_holds_given_cone;
      } else {
        TransferViolation v;
        v.x_index = i;
        v.y_index = j;
        v.cone_lhs = D.codomain().norm_of(lhs);
        v.cone_rhs = Dstar.codomain().norm_of(rhs);
        v.scalar_lhs = sl;
        v.scalar_rhs = sr;
        v.slack = sl - sr;
        v.detail = "d(Tx,Ty) > d*(x,y)";
        rep.violations.push_back(std::move(v));
      }
    }
  }
  return rep;
}

TransferReport check_phi_transfer(const ConeMetric& D, const SelfMap& T,
                                  const BoundedConeMap& phi, PhiBranch branch,
                                  const std::vector<Point>& points, double tau,
                                  int sample_count, std::uint64_t seed) {
  const OrderedVectorSpace& space = D.codomain();
  const EquivalentMetric d(D);
  const int n = static_cast<int>(points.size());

  double linear_norm = 0.0;
  if (phi.kind() == BoundedConeMap::Kind::LinearMatrix ||
      phi.kind() == BoundedConeMap::Kind::SampledRays) {
    linear_norm = phi_operator_norm(phi, space, sample_count, seed);
  }
  auto psi = [&](double t) {
    if (phi.kind() == BoundedConeMap::Kind::ScalarOnRplus) {
      return psi_from_phi(phi, space, t, sample_count, seed);
    }
    return t * linear_norm;
  };

  if (branch == PhiBranch::PhiLinearIncreasing) {
    if (phi.kind() == BoundedConeMap::Kind::ScalarOnRplus) {
      throw std::invalid_argument(
          "check_phi_transfer: the linear-increasing branch needs a linear "
          "map");
    }
    for (const auto& x :
         sample_directions(space.cone, std::min(sample_count, 64), seed)) {
      if (x.norm() <= 1e-12) continue;
      const Eigen::VectorXd y = phi.apply(x);
      if (!cone_contains(space.cone, y,
                         space.tolerance * (1.0 + y.norm()))) {
        throw std::invalid_argument(
            "check_phi_transfer: the declared linear-increasing branch "
            "fails, the map does not preserve the cone order");
      }
    }
  }

  /// The decreasing hypothesis is used between d(x,y) and ||D(x,y)||, the
  /// two abscissae the conclusion chains through; it is spot-checked on a
  /// grid over exactly that interval for each premise-holding pair.
  auto check_decreasing_on = [&](double lo, double hi) {
    if (hi <= lo + 1e-15) return;
    double prev = psi(lo);
    for (int k = 1; k <= 7; ++k) {
      const double s = lo + (hi - lo) * k / 7.0;
      const double ps = psi(s);
      if (ps > prev + tau * (1.0 + std::abs(prev))) {
        throw std::invalid_argument(
            "check_phi_transfer: the declared decreasing branch fails, psi "
            "increases between d(x,y) and ||D(x,y)|| on a sampled pair");
      }
      prev = ps;
    }
  };

  TransferReport rep;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ++rep.samples_checked;
      const Point Tx = T(points[i]);
      const Point Ty = T(points[j]);
      const Eigen::VectorXd Dxy = D.eval(points[i], points[j]);
      const Eigen::VectorXd lhs = D.eval(Tx, Ty);
      const Eigen::VectorXd rhs = phi.apply(Dxy);
      if (!cone_contains(space.cone, rhs - lhs, tau)) continue;
      ++rep.cone_holds;
      const double sl = d(Tx, Ty);
      const double dxy = d(points[i], points[j]);
      if (branch == PhiBranch::PsiDecreasing) {
        check_decreasing_on(dxy, space.norm_of(Dxy));
      }
      const double via_norm = psi(space.norm_of(Dxy));
      const double via_d = psi(dxy);
      bool ok = true;
      TransferViolation v;
      v.x_index = i;
      v.y_index = j;
      v.cone_lhs = space.norm_of(lhs);
      v.cone_rhs = space.norm_of(rhs);
      v.scalar_lhs = sl;
      if (sl > via_norm + tau) {
        ok = false;
        v.scalar_rhs = via_norm;
        v.slack = sl - via_norm;
        v.detail = "d(Tx,Ty) > psi(||D(x,y)||)";
      } else if (sl > via_d + tau) {
        ok = false;
        v.scalar_rhs = via_d;
        v.slack = sl - via_d;
        v.detail = "d(Tx,Ty) > psi(d(x,y)) under the declared branch";
      }
      if (ok) {
        ++rep.scalar_holds_given_cone;
      } else {
        rep.violations.push_back(std::move(v));
      }
    }
  }
  return rep;
}

const char* ContractiveCondition::name() const {
  switch (kind_) {
    case Kind::Banach: return "banach";
    case Kind::Kannan: return "kannan";
    case Kind::Chatterjea: return "chatterjea";
    case Kind::TwoTerm: return "two-term";
    case Kind::QuasiMax5: return "quasi-max5";
    case Kind::QuasiMax5Half: return "quasi-max5-half";
    case Kind::ZamfirescuMax3: return "zamfirescu-max3";
    case Kind::FiveCoefficient: return "five-coefficient";
    case Kind::HalfBetaMax5: return "half-beta-max5";
    case Kind::HardyRogersSym: return "hardy-rogers-sym";
    case Kind::IteratedPower: return "iterated-power";
    case Kind::Dominance: return "dominance";
  }
  return "unknown";
}

namespace {

void require_range(bool ok, const std::string& what) {
  if (!ok) {
    throw std::invalid_argument("ContractiveCondition: " + what);
  }
}

}  // namespace

ContractiveCondition ContractiveCondition::banach(double alpha) {
  require_range(alpha >= 0.0 && alpha < 1.0, "banach needs alpha in [0,1)");
  ContractiveCondition c(Kind::Banach);
  c.coeffs_ = {alpha};
  return c;
}

ContractiveCondition ContractiveCondition::kannan(double lambda) {
  require_range(lambda >= 0.0 && lambda < 0.5,
                "kannan needs lambda in [0,1/2)");
  ContractiveCondition c(Kind::Kannan);
  c.coeffs_ = {lambda};
  return c;
}

ContractiveCondition ContractiveCondition::chatterjea(double lambda) {
  require_range(lambda >= 0.0 && lambda < 0.5,
                "chatterjea needs lambda in [0,1/2)");
  ContractiveCondition c(Kind::Chatterjea);
  c.coeffs_ = {lambda};
  return c;
}

ContractiveCondition ContractiveCondition::two_term(double alpha,
                                                    double beta) {
  require_range(alpha >= 0.0 && alpha < 1.0 && beta >= 0.0 && beta < 1.0,
                "two-term needs alpha, beta in [0,1)");
  ContractiveCondition c(Kind::TwoTerm);
  c.coeffs_ = {alpha, beta};
  return c;
}

ContractiveCondition ContractiveCondition::quasi_max5(double alpha) {
  require_range(alpha > 0.0 && alpha < 1.0, "quasi-max5 needs alpha in (0,1)");
  ContractiveCondition c(Kind::QuasiMax5);
  c.coeffs_ = {alpha};
  return c;
}

ContractiveCondition ContractiveCondition::quasi_max5_half(double beta) {
  require_range(beta > 0.0 && beta < 1.0,
                "quasi-max5-half needs beta in (0,1)");
  ContractiveCondition c(Kind::QuasiMax5Half);
  c.coeffs_ = {beta};
  return c;
}

ContractiveCondition ContractiveCondition::zamfirescu_max3(double beta) {
  require_range(beta > 0.0 && beta < 1.0,
                "zamfirescu-max3 needs beta in (0,1)");
  ContractiveCondition c(Kind::ZamfirescuMax3);
  c.coeffs_ = {beta};
  return c;
}

ContractiveCondition ContractiveCondition::five_coefficient(
    const std::array<double, 5>& a) {
  double sum = 0.0;
  for (double v : a) {
    require_range(v >= 0.0, "five-coefficient needs nonnegative coefficients");
    sum += v;
  }
  require_range(sum < 1.0, "five-coefficient needs a1+...+a5 < 1");
  ContractiveCondition c(Kind::FiveCoefficient);
  c.coeffs_.assign(a.begin(), a.end());
  return c;
}

ContractiveCondition ContractiveCondition::half_beta_max5(double beta) {
  require_range(beta > 0.0 && beta < 1.0,
                "half-beta-max5 needs beta in (0,1)");
  ContractiveCondition c(Kind::HalfBetaMax5);
  c.coeffs_ = {beta};
  return c;
}

ContractiveCondition ContractiveCondition::hardy_rogers_sym(
    const std::array<double, 4>& a) {
  for (double v : a) {
    require_range(v >= 0.0, "hardy-rogers-sym needs nonnegative coefficients");
  }
  require_range(a[0] + a[1] + a[2] + 2.0 * a[3] < 1.0,
                "hardy-rogers-sym needs a1+a2+a3+2*a4 < 1");
  ContractiveCondition c(Kind::HardyRogersSym);
  c.coeffs_.assign(a.begin(), a.end());
  return c;
}

ContractiveCondition ContractiveCondition::iterated_power(int m, int n,
                                                          double k,
                                                          bool existential) {
  require_range(m >= 1 && n >= 1, "iterated-power needs m, n >= 1");
  require_range(k >= 0.0 && k < 1.0, "iterated-power needs k in [0,1)");
  ContractiveCondition c(Kind::IteratedPower);
  c.coeffs_ = {k};
  c.m_ = m;
  c.n_ = n;
  c.existential_ = existential;
  return c;
}

ContractiveCondition ContractiveCondition::dominance(
    std::shared_ptr<const ConeMetric> dstar) {
  ContractiveCondition c(Kind::Dominance);
  c.dstar_ = std::move(dstar);
  return c;
}

namespace {

struct ConeTerms {
  Eigen::VectorXd lhs;  // D(Tx, Ty)
  Eigen::VectorXd dxy, dxTx, dyTy, dxTy, dyTx;
};

ConeTerms cone_terms(const ConeMetric& D, const SelfMap& T, const Point& x,
                     const Point& y) {
  const Point Tx = T(x);
  const Point Ty = T(y);
  return {D.eval(Tx, Ty),  D.eval(x, y),  D.eval(x, Tx),
          D.eval(y, Ty),   D.eval(x, Ty), D.eval(y, Tx)};
}

struct ScalarTerms {
  double lhs;
  double dxy, dxTx, dyTy, dxTy, dyTx;
};

ScalarTerms scalar_terms(const std::function<double(const Point&,
                                                    const Point&)>& d,
                         const SelfMap& T, const Point& x, const Point& y) {
  const Point Tx = T(x);
  const Point Ty = T(y);
  return {d(Tx, Ty), d(x, y), d(x, Tx), d(y, Ty), d(x, Ty), d(y, Tx)};
}

/// Distinct-valued witness points {x, y, T^p x (p<=m), T^q y (q<=n)}.
std::vector<Point> iterated_witnesses(const SelfMap& T, const Point& x,
                                      const Point& y, int m, int n) {
  std::vector<Point> all;
  auto add = [&](const Point& p) {
    for (const auto& q : all) {
      if (q == p) return;
    }
    all.push_back(p);
  };
  add(x);
  add(y);
  Point cx = x;
  for (int p = 1; p <= m; ++p) {
    cx = T(cx);
    add(cx);
  }
  Point cy = y;
  for (int q = 1; q <= n; ++q) {
    cy = T(cy);
    add(cy);
  }
  return all;
}

Point iterate_map(const SelfMap& T, Point p, int times) {
  for (int i = 0; i < times; ++i) p = T(p);
  return p;
}

}  // namespace

bool eval_condition_cone(const ContractiveCondition& cond, const ConeMetric& D,
                         const SelfMap& T, const Point& x, const Point& y,
                         double tau) {
  const ConeSpec& cone = D.codomain().cone;
  auto holds = [&](const Eigen::VectorXd& lhs, const Eigen::VectorXd& rhs) {
    return cone_contains(cone, rhs - lhs, tau);
  };

  using Kind = ContractiveCondition::Kind;
  if (cond.kind() == Kind::IteratedPower) {
    const double k = cond.coeff(0);
    const Point lx = iterate_map(T, x, cond.power_m());
    const Point ly = iterate_map(T, y, cond.power_n());
    const Eigen::VectorXd lhs = D.eval(lx, ly);
    const auto witnesses =
        iterated_witnesses(T, x, y, cond.power_m(), cond.power_n());
    bool any = false;
    for (size_t a = 0; a < witnesses.size(); ++a) {
      for (size_t b = a + 1; b < witnesses.size(); ++b) {
        const Eigen::VectorXd rhs = k * D.eval(witnesses[a], witnesses[b]);
        if (holds(lhs, rhs)) {
          any = true;
        } else if (!cond.existential()) {
          return false;
        }
      }
    }
    return cond.existential() ? any : true;
  }
  if (cond.kind() == Kind::Dominance) {
    const ConeMetric& dstar = cond.dstar() ? *cond.dstar() : D;
    return holds(D.eval(T(x), T(y)), dstar.eval(x, y));
  }

  const ConeTerms t = cone_terms(D, T, x, y);
  switch (cond.kind()) {
    case Kind::Banach:
      return holds(t.lhs, cond.coeff(0) * t.dxy);
    case Kind::Kannan:
      return holds(t.lhs, cond.coeff(0) * (t.dxTx + t.dyTy));
    case Kind::Chatterjea:
      return holds(t.lhs, cond.coeff(0) * (t.dyTx + t.dxTy));
    case Kind::TwoTerm:
      return holds(t.lhs, cond.coeff(0) * t.dxy + cond.coeff(1) * t.dyTx);
    case Kind::QuasiMax5: {
      const double a = cond.coeff(0);
      return holds(t.lhs, a * t.dxy) || holds(t.lhs, a * t.dxTx) ||
             holds(t.lhs, a * t.dyTy) ||
             holds(t.lhs, a * 0.5 * (t.dxTy + t.dyTx));
    }
    case Kind::QuasiMax5Half: {
      const double b = cond.coeff(0);
      return holds(t.lhs, b * t.dxy) || holds(t.lhs, b * t.dxTx) ||
             holds(t.lhs, b * t.dyTy) || holds(t.lhs, b * 0.5 * t.dxTy) ||
             holds(t.lhs, b * 0.5 * t.dyTx);
    }
    case Kind::ZamfirescuMax3: {
      const double b = cond.coeff(0);
      return holds(t.lhs, b * t.dxy) ||
             holds(t.lhs, b * 0.5 * (t.dxTx + t.dyTy)) ||
             holds(t.lhs, b * 0.5 * (t.dxTy + t.dyTx));
    }
    case Kind::FiveCoefficient:
      return holds(t.lhs, cond.coeff(0) * t.dxy + cond.coeff(1) * t.dxTx +
                              cond.coeff(2) * t.dyTy + cond.coeff(3) * t.dxTy +
                              cond.coeff(4) * t.dyTx);
    case Kind::HalfBetaMax5: {
      const double h = 0.5 * cond.coeff(0);
      return holds(t.lhs, h * t.dxy) || holds(t.lhs, h * t.dxTx) ||
             holds(t.lhs, h * t.dyTy) || holds(t.lhs, h * t.dxTy) ||
             holds(t.lhs, h * t.dyTx);
    }
    case Kind::HardyRogersSym:
      return holds(t.lhs, cond.coeff(0) * t.dxy + cond.coeff(1) * t.dxTx +
                              cond.coeff(2) * t.dyTy +
                              cond.coeff(3) * (t.dxTy + t.dyTx));
    default:
      break;
  }
  throw std::logic_error("eval_condition_cone: unhandled condition");
}

bool eval_condition_scalar(const ContractiveCondition& cond,
                           const std::function<double(const Point&,
                                                      const Point&)>& d,
                           const SelfMap& T, const Point& x, const Point& y,
                           double tau) {
  using Kind = ContractiveCondition::Kind;
  if (cond.kind() == Kind::IteratedPower) {
    const double k = cond.coeff(0);
    const Point lx = iterate_map(T, x, cond.power_m());
    const Point ly = iterate_map(T, y, cond.power_n());
    const double lhs = d(lx, ly);
    const auto witnesses =
        iterated_witnesses(T, x, y, cond.power_m(), cond.power_n());
    bool any_pair = false;
    double best = 0.0;
    bool all_ok = true;
    for (size_t a = 0; a < witnesses.size(); ++a) {
      for (size_t b = a + 1; b < witnesses.size(); ++b) {
        const double w = d(witnesses[a], witnesses[b]);
        any_pair = true;
        best = std::max(best, w);
        if (lhs > k * w + tau) all_ok = false;
      }
    }
    if (!any_pair) return true;
    return cond.existential() ? lhs <= k * best + tau : all_ok;
  }
  if (cond.kind() == Kind::Dominance) {
    if (!cond.dstar()) {
      return d(T(x), T(y)) <= d(x, y) + tau;
    }
    const EquivalentMetric dstar(*cond.dstar());
    return d(T(x), T(y)) <= dstar(x, y) + tau;
  }

  const ScalarTerms t = scalar_terms(d, T, x, y);
  switch (cond.kind()) {
    case Kind::Banach:
      return t.lhs <= cond.coeff(0) * t.dxy + tau;
    case Kind::Kannan:
      return t.lhs <= cond.coeff(0) * (t.dxTx + t.dyTy) + tau;
    case Kind::Chatterjea:
      return t.lhs <= cond.coeff(0) * (t.dyTx + t.dxTy) + tau;
    case Kind::TwoTerm:
      return t.lhs <= cond.coeff(0) * t.dxy + cond.coeff(1) * t.dyTx + tau;
    case Kind::QuasiMax5:
      return t.lhs <= cond.coeff(0) * std::max({t.dxy, t.dxTx, t.dyTy,
                                                0.5 * (t.dxTy + t.dyTx)}) +
                          tau;
    case Kind::QuasiMax5Half:
      return t.lhs <= cond.coeff(0) * std::max({t.dxy, t.dxTx, t.dyTy,
                                                0.5 * t.dxTy, 0.5 * t.dyTx}) +
                          tau;
    case Kind::ZamfirescuMax3:
      return t.lhs <=
             cond.coeff(0) * std::max({t.dxy, 0.5 * (t.dxTx + t.dyTy),
                                       0.5 * (t.dxTy + t.dyTx)}) +
                 tau;
    case Kind::FiveCoefficient:
      return t.lhs <= cond.coeff(0) * t.dxy + cond.coeff(1) * t.dxTx +
                          cond.coeff(2) * t.dyTy + cond.coeff(3) * t.dxTy +
                          cond.coeff(4) * t.dyTx + tau;
    case Kind::HalfBetaMax5:
      return t.lhs <= 0.5 * cond.coeff(0) *
                              std::max({t.dxy, t.dxTx, t.dyTy, t.dxTy,
                                        t.dyTx}) +
                          tau;
    case Kind::HardyRogersSym:
      return t.lhs <= cond.coeff(0) * t.dxy + cond.coeff(1) * t.dxTx +
                          cond.coeff(2) * t.dyTy +
                          cond.coeff(3) * (t.dxTy + t.dyTx) + tau;
    default:
      break;
  }
  throw std::logic_error("eval_condition_scalar: unhandled condition");
}

TransferReport check_corollary(const ContractiveCondition& cond,
                               const ConeMetric& D,
                               const OrderedVectorSpace& space,
                               const SelfMap& T,
                               const std::vector<Point>& points, double tau) {
  if (cond.kind() == ContractiveCondition::Kind::Dominance) {
    return check_dominance_transfer(D, cond.dstar() ? *cond.dstar() : D, T,
                                    points, tau);
  }
  const EquivalentMetric eq(D, space);
  const std::function<double(const Point&, const Point&)> d =
      [&eq](const Point& a, const Point& b) { return eq(a, b); };

  TransferReport rep;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ++rep.samples_checked;
      if (!eval_condition_cone(cond, D, T, points[i], points[j], tau)) {
        continue;
      }
      ++rep.cone_holds;
      if (eval_condition_scalar(cond, d, T, points[i], points[j], tau)) {
        ++rep.scalar_holds_given_cone;
      } else {
        TransferViolation v;
        v.x_index = i;
        v.y_index = j;
        const Point Tx = T(points[i]);
        const Point Ty = T(points[j]);
        v.scalar_lhs = d(Tx, Ty);
        v.cone_lhs = space.norm_of(D.eval(Tx, Ty));
        v.detail = std::string("scalar conclusion of '") + cond.name() +
                   "' fails where the cone premise holds";
        rep.violations.push_back(std::move(v));
      }
    }
  }
  return rep;
}

}  // namespace conemet
