#include "mpspec/projection.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mpspec/errors.hpp"

namespace mpspec {

SpectralCoeffs project(const std::function<double(double)>& f, const BasisFamily& family, int N,
                       int quad_points) {
  const BasisFamily basis = family.with_max_degree(N);
  const QuadratureRule rule(basis, quad_points);
  const auto& xs = rule.nodes();
  // <f, phi_k>_omega for polynomial families; <f, P_k> = sum wplain f P_k for
  // the weighted ones. Both reduce to one weight choice.
  const auto& w = basis.symmetric_weighting() ? rule.plain_weights() : rule.weights();
  const auto& nsq = basis.norm_sq_table();

  Eigen::VectorXd c = Eigen::VectorXd::Zero(N + 1);
  std::vector<double> phi(N + 1);
  for (int i = 0; i < rule.size(); ++i) {
    const double fx = f(xs[i]);
    if (!std::isfinite(fx)) throw NumericalError("project: non-finite function value at a node");
    basis.eval_all(xs[i], phi);
    const double wf = w[i] * fx;
    for (int k = 0; k <= N; ++k) c[k] += wf * phi[k];
  }
  for (int k = 0; k <= N; ++k) c[k] /= nsq[k];
  return {std::move(c), basis};
}

std::vector<double> reconstruct(const SpectralCoeffs& coeffs, std::span<const double> xs) {
  const int N = coeffs.basis.max_degree();
  if (coeffs.c.size() != N + 1) throw std::invalid_argument("reconstruct: coefficient size mismatch");
  std::vector<double> out(xs.size());
  std::vector<double> phi(N + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    coeffs.basis.eval_all(xs[i], phi);
    double s = 0.0;
    for (int k = 0; k <= N; ++k) s += coeffs.c[k] * phi[k];
    out[i] = s;
  }
  return out;
}

ConstraintOperator::ConstraintOperator(const BasisFamily& family, const MomentMatrix& mm, int N, int Q) {
  if (Q > mm.Q() || N > mm.N())
    throw std::invalid_argument("ConstraintOperator: moment table smaller than requested (Q, N)");
  mu_ = mm.matrix().topLeftCorner(Q + 1, N + 1);
  const auto& nsq = family.norm_sq_table();
  if (static_cast<int>(nsq.size()) < N + 1)
    throw std::invalid_argument("ConstraintOperator: family norm table smaller than N+1");
  norms_sq_ = Eigen::Map<const Eigen::VectorXd>(nsq.data(), N + 1);
  build();
}

ConstraintOperator::ConstraintOperator(const Eigen::MatrixXd& mu, const Eigen::VectorXd& norms_sq)
    : mu_(mu), norms_sq_(norms_sq) {
  if (mu_.cols() != norms_sq_.size())
    throw std::invalid_argument("ConstraintOperator: mu / norm table size mismatch");
  build();
}

void ConstraintOperator::build() {
  const int Q = this->Q(), N = this->N();
  const Eigen::MatrixXd muD = mu_ * norms_sq_.cwiseInverse().asDiagonal();  // (Q+1)x(N+1)
  M_ = muD * mu_.transpose();
  M_ = 0.5 * (M_ + M_.transpose().eval());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M_);
  if (es.info() != Eigen::Success) throw NumericalError("ConstraintOperator: eigensolver failed");
  const double lmin = es.eigenvalues().minCoeff();
  const double lmax = es.eigenvalues().maxCoeff();
  if (!(lmin > lmax * std::numeric_limits<double>::epsilon() * 32.0) || !(lmin > 0.0))
    throw ConstraintDegeneracyError(Q, N);
  cond_ = lmax / lmin;
  rho_inv_ = 1.0 / lmin;

  Eigen::LLT<Eigen::MatrixXd> llt(M_);
  if (llt.info() != Eigen::Success) throw ConstraintDegeneracyError(Q, N);
  C_ = llt.solve(muD).transpose();  // rows Chat_k^T = Phi_k^T M^{-1} / ||phi_k||^2
}

Eigen::VectorXd ConstraintOperator::correct(const Eigen::VectorXd& coeffs,
                                            const Eigen::VectorXd& targets) const {
  if (coeffs.size() != mu_.cols()) throw std::invalid_argument("correct: coefficient size mismatch");
  if (targets.size() != mu_.rows()) throw std::invalid_argument("correct: target size mismatch");
  Eigen::VectorXd out = coeffs;
  for (int pass = 0; pass < 2; ++pass) out += C_ * (targets - mu_ * out);
  return out;
}

Eigen::MatrixXd ConstraintOperator::zero_moment_projector() const {
  const int n = static_cast<int>(mu_.cols());
  return Eigen::MatrixXd::Identity(n, n) - C_ * mu_;
}

ConditioningReport conditioning_report(const BasisFamily& family, int N, int Q, int quad_points) {
  const MomentMatrix mm = MomentMatrix::standard(family, Q, N, quad_points);
  const auto& nsq = family.norm_sq_table();
  Eigen::VectorXd d(N + 1);
  for (int k = 0; k <= N; ++k) d[k] = 1.0 / nsq[k];
  Eigen::MatrixXd M = mm.matrix() * d.asDiagonal() * mm.matrix().transpose();
  M = 0.5 * (M + M.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  ConditioningReport rep;
  const double lmin = es.eigenvalues().minCoeff();
  const double lmax = es.eigenvalues().maxCoeff();
  if (lmin <= 0.0) {
    rep.cond_M = std::numeric_limits<double>::infinity();
    rep.spectral_radius_Minv = std::numeric_limits<double>::infinity();
  } else {
    rep.cond_M = lmax / lmin;
    rep.spectral_radius_Minv = 1.0 / lmin;
  }
  return rep;
}

SpectralCoeffs conservative_project(const std::function<double(double)>& f, const BasisFamily& family,
                                    int N, const ConstraintOperator& co, int quad_points) {
  SpectralCoeffs base = project(f, family, N, quad_points);
  const Eigen::VectorXd targets = moments_of_function(f, base.basis, co.Q(), quad_points);
  return correct_given_targets(base, targets, co);
}

SpectralCoeffs correct_given_targets(const SpectralCoeffs& base, const Eigen::VectorXd& targets,
                                     const ConstraintOperator& co) {
  return {co.correct(base.c, targets), base.basis};
}

}  // namespace mpspec
