#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "mpspec/dirichlet.hpp"
#include "mpspec/projection.hpp"

namespace mpspec {

/// Dense Galerkin matrix acting on coefficient vectors.
struct GalerkinOperator {
  Eigen::MatrixXd A;
  bool constrained = false;
  std::vector<int> q_list;

  int size() const { return static_cast<int>(A.rows()); }
  Eigen::VectorXd apply(const Eigen::VectorXd& c) const { return A * c; }
};

/// L_FP f = partial_v((v - mu) f + T partial_v f) on the Hermite functions
/// psi_k, assembled from the closed-form pentadiagonal image of each psi_k
/// (spillover beyond degree N truncated).
GalerkinOperator fp_hermite_operator(int N, double mu, double T);

/// L_Op g = (lambda/2) d_vv((1 - v^2) g) + d_v((v - m) g) on a composite
/// Dirichlet basis, assembled by quadrature in strong form.
GalerkinOperator opinion_operator(const CompositeBasis& cb, double m, double lambda,
                                  int quad_points = 80);

/// L_CC h = (lambda/2) d_vv(v^2 h) + (gamma/2) d_v(v ln(v/v_L) h) on the
/// Laguerre functions xi_k, assembled by quadrature.
GalerkinOperator callcenter_operator(const BasisFamily& basis, int N, double lambda, double gamma,
                                     double v_L, int quad_points = 80);

/// A^c = (I - C^T mu_sub) A for the listed moment indices: every image has
/// exactly zero constrained moments.
GalerkinOperator constrain(const GalerkinOperator& op, const ConstraintOperator& co,
                           std::span<const int> q_list);

struct ModelParams {
  static void validate_fp(double T);                                   // T > 0
  static void validate_opinion(double m, double lambda);               // |m|<1, 0<lambda<1+|m|
  static void validate_callcenter(double lambda, double gamma, double v_L);  // 0<gamma<1, lambda>0, v_L>0
};

/// Normalized model equilibria.
class SteadyState {
 public:
  static SteadyState maxwellian(double rho, double mu, double T);
  static SteadyState opinion(double m, double lambda, int quad_points = 80);
  static SteadyState lognormal(double sigma, double mu_ln);

  double operator()(double x) const;
  std::vector<double> eval(std::span<const double> xs) const;
  double normalization() const { return norm_; }

 private:
  enum class Kind { maxwellian, opinion, lognormal };
  SteadyState(Kind k, double p1, double p2, double p3, double norm)
      : kind_(k), p1_(p1), p2_(p2), p3_(p3), norm_(norm) {}
  Kind kind_;
  double p1_, p2_, p3_, norm_;
};

}  // namespace mpspec
