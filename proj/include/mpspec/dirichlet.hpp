#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>

#include "mpspec/moments.hpp"
#include "mpspec/projection.hpp"

namespace mpspec {

/// Homogeneous-Dirichlet composite basis zeta_k = p_k + a_k p_{k+1} + b_k p_{k+2},
/// k = 0..N-2, built on a bounded parent family and re-orthonormalized in the
/// parent's weighted inner product (modified Gram-Schmidt with one
/// reorthogonalization pass).
class CompositeBasis {
 public:
  CompositeBasis(const BasisFamily& parent, int N);

  const BasisFamily& parent() const { return parent_; }
  int size() const { return static_cast<int>(ortho_.rows()); }  // N-1 members
  int parent_degree() const { return parent_.max_degree(); }    // N

  /// (N-1) x 3 rows (1, a_k, b_k).
  const Eigen::MatrixXd& combo() const { return combo_; }
  /// Orthonormalized members expressed in the parent basis, (N-1) x (N+1).
  const Eigen::MatrixXd& parent_coeffs() const { return ortho_; }
  /// Raw (pre-orthonormalization) members in the parent basis.
  const Eigen::MatrixXd& raw_coeffs() const { return raw_; }
  double gram_residual() const { return gram_residual_; }

  void eval_all(double x, std::span<double> out) const;
  /// Member values at a set of points, (N-1) x m.
  Eigen::MatrixXd values_at(std::span<const double> xs) const;
  /// Values with derivatives, each (N-1) x m.
  void derivs_at(std::span<const double> xs, Eigen::MatrixXd& val, Eigen::MatrixXd& d1,
                 Eigen::MatrixXd& d2) const;

  /// Moment table <zeta~_k, x^q> derived from the parent's.
  MomentMatrix moment_matrix(int Q, int quad_points = 80) const;
  ConstraintOperator constraint_operator(int Q, int quad_points = 80) const;

  /// Coefficients of f in the orthonormalized members.
  Eigen::VectorXd project(const std::function<double(double)>& f, int quad_points = 80) const;
  Eigen::VectorXd reconstruct(const Eigen::VectorXd& coeffs, std::span<const double> xs) const;

 private:
  BasisFamily parent_;
  Eigen::MatrixXd combo_, raw_, ortho_;
  double gram_residual_ = 0.0;
};

}  // namespace mpspec
