#pragma once

#include <Eigen/Dense>
#include <functional>

#include "mpspec/basis.hpp"
#include "mpspec/quadrature.hpp"

namespace mpspec {

/// Coefficient vector of a truncated expansion in a classical family.
struct SpectralCoeffs {
  Eigen::VectorXd c;
  BasisFamily basis;

  int max_degree() const { return basis.max_degree(); }
};

/// The table mu[q][k] = <phi_k, x^q> (unweighted inner product; phi_k carries
/// omega^{1/2} for the weighted families), q = 0..Q, k = 0..N.
class MomentMatrix {
 public:
  enum class Method { quadrature, recursion, closed_form };

  MomentMatrix(const BasisFamily& family, int Q, int N, Method method = Method::quadrature,
               int quad_points = 80);
  /// Wraps an externally assembled table (composite bases).
  MomentMatrix(Eigen::MatrixXd mu, const BasisFamily& family);

  /// Preferred construction: exact entries for every family. Bounded families
  /// integrate with the omega = 1 Gauss rule (polynomial integrands, exact to
  /// rounding); the weighted families use closed-form generating-function
  /// sums, since their plain-mode quadrature degrades for large k and the
  /// k-recursion cancels catastrophically.
  static MomentMatrix standard(const BasisFamily& family, int Q, int N, int quad_points = 80);

  int Q() const { return static_cast<int>(mu_.rows()) - 1; }
  int N() const { return static_cast<int>(mu_.cols()) - 1; }
  double operator()(int q, int k) const { return mu_(q, k); }
  const Eigen::MatrixXd& matrix() const { return mu_; }
  /// Phi-hat_k = (mu_{0,k}, ..., mu_{Q,k})^T.
  Eigen::VectorXd column(int k) const { return mu_.col(k); }
  const BasisFamily& family() const { return family_; }

 private:
  BasisFamily family_;
  Eigen::MatrixXd mu_;
};

/// m_{q,N} = sum_k c_k mu_{q,k}. Coefficient vectors shorter than N+1 act on
/// the leading block.
Eigen::VectorXd moments_of(const Eigen::VectorXd& coeffs, const MomentMatrix& mm);
Eigen::VectorXd moments_of(const SpectralCoeffs& coeffs, const MomentMatrix& mm);

/// m_q = <f, x^q> by plain-measure quadrature (see moment_rule()).
Eigen::VectorXd moments_of_function(const std::function<double(double)>& f, const BasisFamily& family,
                                    int Q, int quad_points = 80);
Eigen::VectorXd moments_of_function(const std::function<double(double)>& f, const QuadratureRule& rule,
                                    int Q);

}  // namespace mpspec
