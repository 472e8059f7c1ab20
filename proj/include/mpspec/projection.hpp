#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>

#include "mpspec/moments.hpp"

namespace mpspec {

/// Standard truncated projection: f_hat_k = <f, phi_k>_omega / ||phi_k||^2
/// (the unweighted <f, P_k> form for the weighted families).
SpectralCoeffs project(const std::function<double(double)>& f, const BasisFamily& family, int N,
                       int quad_points = 80);

std::vector<double> reconstruct(const SpectralCoeffs& coeffs, std::span<const double> xs);

struct ConditioningReport {
  double cond_M = 0.0;
  double spectral_radius_Minv = 0.0;  // 1/lambda_min(M)
};

/// Lagrange-multiplier machinery of the moment-constrained projection:
/// M = sum_k Phi_k Phi_k^T / ||phi_k||^2 and the rows C_k^T = Phi_k^T M^{-1} / ||phi_k||^2.
/// M is factorized (SPD), never inverted explicitly; corrections are applied
/// with one iterative-refinement pass so the constrained moments hold to
/// rounding even when cond(M) is large.
class ConstraintOperator {
 public:
  ConstraintOperator(const BasisFamily& family, const MomentMatrix& mm, int N, int Q);
  /// Raw-table variant for composite bases: mu is (Q+1)x(n) and norms_sq has n entries.
  ConstraintOperator(const Eigen::MatrixXd& mu, const Eigen::VectorXd& norms_sq);

  int N() const { return static_cast<int>(mu_.cols()) - 1; }
  int Q() const { return static_cast<int>(mu_.rows()) - 1; }
  const Eigen::MatrixXd& M() const { return M_; }
  const Eigen::MatrixXd& rows() const { return C_; }          // (N+1) x (Q+1)
  const Eigen::MatrixXd& moment_rows() const { return mu_; }  // (Q+1) x (N+1)
  const Eigen::VectorXd& norms_sq() const { return norms_sq_; }
  double cond_M() const { return cond_; }
  double spectral_radius_Minv() const { return rho_inv_; }

  /// coeffs + C^T (targets - mu coeffs), applied twice (refinement).
  Eigen::VectorXd correct(const Eigen::VectorXd& coeffs, const Eigen::VectorXd& targets) const;
  /// I - C^T mu: annihilates the constrained moments of anything it multiplies.
  Eigen::MatrixXd zero_moment_projector() const;

 private:
  void build();
  Eigen::MatrixXd mu_;  // (Q+1) x (N+1)
  Eigen::VectorXd norms_sq_;
  Eigen::MatrixXd M_, C_;
  double cond_ = 0.0, rho_inv_ = 0.0;
};

/// Conditioning diagnostics that do not throw on a singular M (reported as +inf).
ConditioningReport conditioning_report(const BasisFamily& family, int N, int Q, int quad_points = 80);

/// Conservative projection of Definition-type: standard coefficients plus the
/// affine moment correction towards <f, Phi>.
SpectralCoeffs conservative_project(const std::function<double(double)>& f, const BasisFamily& family,
                                    int N, const ConstraintOperator& co, int quad_points = 80);

SpectralCoeffs correct_given_targets(const SpectralCoeffs& base, const Eigen::VectorXd& targets,
                                     const ConstraintOperator& co);

}  // namespace mpspec
