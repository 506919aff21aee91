#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "conemet/cone_metrics.hpp"
#include "conemet/points.hpp"
#include "conemet/self_maps.hpp"
#include "conemet/spaces.hpp"

namespace conemet {

/// Raised when a map declared to send the cone into itself produces a value
/// outside the cone on a test sample.
class ConeMapRangeError : public std::runtime_error {
 public:
  ConeMapRangeError(std::string what, Eigen::VectorXd input,
                    Eigen::VectorXd output)
      : std::runtime_error(std::move(what)),
        input(std::move(input)),
        output(std::move(output)) {}
  Eigen::VectorXd input;
  Eigen::VectorXd output;
};

/// Bounded map phi : P -> P with ||phi|| = sup ||phi(x)|| / ||x|| finite.
/// LinearMatrix applies a fixed matrix; ScalarOnRplus is a real function on
/// the half line (one-dimensional orthant); SampledRays stores images on a
/// finite ray table and extends positively homogeneously along those rays.
class BoundedConeMap {
 public:
  enum class Kind { LinearMatrix, ScalarOnRplus, SampledRays };

  static BoundedConeMap linear(Eigen::MatrixXd M);
  static BoundedConeMap scalar_on_rplus(std::function<double(double)> f);
  static BoundedConeMap sampled_rays(std::vector<Eigen::VectorXd> rays,
                                     std::vector<Eigen::VectorXd> images);

  Kind kind() const { return kind_; }
  const Eigen::MatrixXd& matrix() const;
  const std::vector<Eigen::VectorXd>& rays() const { return rays_; }
  const std::vector<Eigen::VectorXd>& images() const { return images_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

 private:
  explicit BoundedConeMap(Kind kind) : kind_(kind) {}

  Kind kind_;
  Eigen::MatrixXd matrix_;
  std::function<double(double)> f_;
  std::vector<Eigen::VectorXd> rays_;
  std::vector<Eigen::VectorXd> images_;
};

/// Sampled lower estimate of ||phi|| over the cone: the max of
/// ||phi(x)|| / ||x|| over canonical rays plus `sample_count` seeded cone
/// points. Exact for diagonal matrices on the orthant, for entrywise
/// nonnegative matrices on the Euclidean orthant (the restricted supremum
/// is the top singular value there), and for maps given on R+.
/// Sample i depends only on (seed, i), so growing sample_count never
/// decreases the estimate. Throws ConeMapRangeError when a sample leaves
/// the cone.
double phi_operator_norm(const BoundedConeMap& phi,
                         const OrderedVectorSpace& space, int sample_count,
                         std::uint64_t seed);

/// psi(t) = sup over unit-norm cone directions x of ||phi(t * x)||, sampled
/// like phi_operator_norm. Linear maps use psi(t) = t * ||phi|| exactly; on
/// R+ the only unit ray is 1, so psi(t) = f(t).
double psi_from_phi(const BoundedConeMap& phi, const OrderedVectorSpace& space,
                    double t, int sample_count, std::uint64_t seed);

struct TransferViolation {
  int x_index = -1;
  int y_index = -1;
  double cone_lhs = 0.0;
  double cone_rhs = 0.0;
  double scalar_lhs = 0.0;
  double scalar_rhs = 0.0;
  double slack = 0.0;
  std::string detail;
};

struct TransferReport {
  int samples_checked = 0;
  int cone_holds = 0;
  int scalar_holds_given_cone = 0;
  std::vector<TransferViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Dominance transfer: on every ordered pair of distinct points where
/// D(Tx,Ty) <= Dstar(x,y) in the cone order, the metrized distances must
/// satisfy d(Tx,Ty) <= dstar(x,y) + tau. Pairs failing the premise are
/// skipped, not counted. Both metrics are metrized in their own codomains,
/// which must share the ambient dimension and cone order.
TransferReport check_dominance_transfer(const ConeMetric& D,
                                        const ConeMetric& Dstar,
                                        const SelfMap& T,
                                        const std::vector<Point>& points,
                                        double tau);

enum class PhiBranch { PsiDecreasing, PhiLinearIncreasing };

/// Bounded-map transfer: on every ordered pair with the cone premise
/// D(Tx,Ty) <= phi(D(x,y)), asserts the unconditional conclusion
/// d(Tx,Ty) <= psi(||D(x,y)||) + tau and, under the declared branch, the
/// stronger d(Tx,Ty) <= psi(d(x,y)) + tau. The branch hypothesis itself is
/// spot-checked (decreasingness on a grid of scales; linearity plus cone
/// invariance structurally) and a failed spot check throws
/// std::invalid_argument before any pairs are scored.
TransferReport check_phi_transfer(const ConeMetric& D, const SelfMap& T,
                                  const BoundedConeMap& phi, PhiBranch branch,
                                  const std::vector<Point>& points, double tau,
                                  int sample_count = 256,
                                  std::uint64_t seed = 0);

/// One of the summary contractive conditions, with coefficient ranges
/// enforced at construction.
class ContractiveCondition {
 public:
  enum class Kind {
    Banach,
    Kannan,
    Chatterjea,
    TwoTerm,
    QuasiMax5,
    QuasiMax5Half,
    ZamfirescuMax3,
    FiveCoefficient,
    HalfBetaMax5,
    HardyRogersSym,
    IteratedPower,
    Dominance,
  };

  static ContractiveCondition banach(double alpha);
  static ContractiveCondition kannan(double lambda);
  static ContractiveCondition chatterjea(double lambda);
  static ContractiveCondition two_term(double alpha, double beta);
  static ContractiveCondition quasi_max5(double alpha);
  static ContractiveCondition quasi_max5_half(double beta);
  static ContractiveCondition zamfirescu_max3(double beta);
  static ContractiveCondition five_coefficient(const std::array<double, 5>& a);
  static ContractiveCondition half_beta_max5(double beta);
  static ContractiveCondition hardy_rogers_sym(const std::array<double, 4>& a);
  /// The iterated-power condition quantifies over admissible witness pairs
  /// (z, t). The default reads "for all admissible pairs" following the
  /// sentence order; `existential` switches to "for some admissible pair"
  /// on the premise and the max over pairs in the conclusion.
  static ContractiveCondition iterated_power(int m, int n, double k,
                                             bool existential = false);
  static ContractiveCondition dominance(
      std::shared_ptr<const ConeMetric> dstar = nullptr);

  Kind kind() const { return kind_; }
  double coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
  const std::vector<double>& coeffs() const { return coeffs_; }
  int power_m() const { return m_; }
  int power_n() const { return n_; }
  bool existential() const { return existential_; }
  const std::shared_ptr<const ConeMetric>& dstar() const { return dstar_; }
  const char* name() const;

 private:
  explicit ContractiveCondition(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<double> coeffs_;
  int m_ = 1, n_ = 1;
  bool existential_ = false;
  std::shared_ptr<const ConeMetric> dstar_;
};

/// Truth of the cone-order inequality of the condition at (x, y).
bool eval_condition_cone(const ContractiveCondition& cond, const ConeMetric& D,
                         const SelfMap& T, const Point& x, const Point& y,
                         double tau);

/// Truth of the scalar conclusion of the condition at (x, y), with
/// "there exists u" sets replaced by their max, as the conclusions state.
bool eval_condition_scalar(const ContractiveCondition& cond,
                           const std::function<double(const Point&,
                                                      const Point&)>& d,
                           const SelfMap& T, const Point& x, const Point& y,
                           double tau);

/// Over all ordered pairs of distinct points: whenever the cone-side
/// condition holds, the scalar-side conclusion on the metrized distance
/// must hold within tau. The dominance variant delegates to
/// check_dominance_transfer (with Dstar defaulting to D itself).
TransferReport check_corollary(const ContractiveCondition& cond,
                               const ConeMetric& D,
                               const OrderedVectorSpace& space,
                               const SelfMap& T,
                               const std::vector<Point>& points, double tau);

}  // namespace conemet
