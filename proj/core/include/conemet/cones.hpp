#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace conemet {

enum class ConeKind { Orthant, SecondOrder, Generators, Halfspaces };

const char* to_string(ConeKind kind);

/// Closed convex cone in R^dim, one of:
///   Orthant      { v : v_i >= 0 }
///   SecondOrder  { (x, t) in R^(dim-1) x R : t >= ||x||_2 }
///   Generators   { G lambda : lambda >= 0 }, generators are columns of G
///   Halfspaces   { v : A v >= 0 }, one row per inequality
class ConeSpec {
 public:
  static ConeSpec orthant(int dim);
  static ConeSpec second_order(int dim);
  static ConeSpec generators(Eigen::MatrixXd G);
  static ConeSpec halfspaces(Eigen::MatrixXd A);

  ConeKind kind() const { return kind_; }
  int dim() const { return dim_; }

  const Eigen::MatrixXd& generator_matrix() const;
  const Eigen::MatrixXd& halfspace_matrix() const;

  /// Outward-complete facet description of a full-dimensional generator
  /// cone: unit normals n with n . v >= 0 for every v in the cone. Empty
  /// when the cone is not full-dimensional. Computed at construction.
  const std::vector<Eigen::VectorXd>& facet_normals() const;

 private:
  ConeSpec(ConeKind kind, int dim) : kind_(kind), dim_(dim) {}

  ConeKind kind_;
  int dim_;
  Eigen::MatrixXd mat_;
  std::vector<Eigen::VectorXd> facets_;
};

struct ProjectionResult {
  Eigen::VectorXd point;
  double residual = 0.0;
  int iterations = 0;
  bool converged = true;
};

struct ConeValidationReport {
  bool pointed = false;
  bool interior_nonempty = false;
  bool nonzero = false;
  Eigen::VectorXd interior_witness;
  double interior_margin = 0.0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Membership with absolute slack tau on the defining inequalities
/// (generator cones use the NNLS fit residual against tau * (1 + ||v||)).
bool cone_contains(const ConeSpec& cone, const Eigen::VectorXd& v, double tau);

/// Strict membership: every defining inequality holds with slack >= margin,
/// measured against unit-normalized inequality normals. Generator cones use
/// their facet description; a cone without interior always answers false.
bool interior_contains(const ConeSpec& cone, const Eigen::VectorXd& v,
                       double margin);

/// Membership in the dual cone { y : <y, x> >= 0 for all x in the cone }.
bool dual_contains(const ConeSpec& cone, const Eigen::VectorXd& v, double tau);

/// Euclidean projection onto the cone. Orthant and second-order cones use
/// closed forms, generator cones solve an NNLS problem, halfspace cones run
/// Dykstra's alternating projections (capped at 10^4 sweeps). `residual`
/// bounds the distance from `point` to the true projection as estimated by
/// the solver; a failed solve reports converged = false, never a silently
/// wrong point.
ProjectionResult project_onto_cone(const ConeSpec& cone,
                                   const Eigen::VectorXd& v);

/// Euclidean projection onto the dual cone. Orthant and second-order cones
/// are self-dual; the dual of a generator cone is the halfspace cone of its
/// generators, and vice versa.
ProjectionResult project_onto_dual_cone(const ConeSpec& cone,
                                        const Eigen::VectorXd& v);

/// Structural checks: nontrivial (not {0}), pointed (no line), and interior
/// nonempty with a witness. Collects failures instead of throwing.
ConeValidationReport validate_cone(const ConeSpec& cone, double tau = 1e-9);

}  // namespace conemet
