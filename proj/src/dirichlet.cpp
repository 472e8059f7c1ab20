#include "mpspec/dirichlet.hpp"

#include <cmath>
#include <stdexcept>

#include "mpspec/errors.hpp"

namespace mpspec {

CompositeBasis::CompositeBasis(const BasisFamily& parent, int N) : parent_(parent.with_max_degree(N)) {
  if (parent.domain().kind != Domain::Kind::bounded || parent.domain().a != -1.0 ||
      parent.domain().b != 1.0)
    throw std::invalid_argument("CompositeBasis: parent must live on [-1,1]");
  if (N < 2) throw std::invalid_argument("CompositeBasis: N >= 2 required");
  if (parent_.symmetric_weighting())
    throw std::invalid_argument("CompositeBasis: weighted parents are not supported");

  const int nb = N - 1;
  const std::vector<double> at_p = parent_.eval_all(1.0);
  const std::vector<double> at_m = parent_.eval_all(-1.0);

  combo_.resize(nb, 3);
  raw_ = Eigen::MatrixXd::Zero(nb, N + 1);
  for (int k = 0; k < nb; ++k) {
    Eigen::Matrix2d S;
    S << at_p[k + 1], at_p[k + 2], at_m[k + 1], at_m[k + 2];
    const Eigen::Vector2d rhs(-at_p[k], -at_m[k]);
    const double det = S(0, 0) * S(1, 1) - S(0, 1) * S(1, 0);
    if (std::abs(det) < 1e-14 * S.cwiseAbs().maxCoeff())
      throw NumericalError("CompositeBasis: singular endpoint system at k=" + std::to_string(k));
    const Eigen::Vector2d ab = S.partialPivLu().solve(rhs);
    combo_(k, 0) = 1.0;
    combo_(k, 1) = ab[0];
    combo_(k, 2) = ab[1];
    raw_(k, k) = 1.0;
    raw_(k, k + 1) = ab[0];
    raw_(k, k + 2) = ab[1];
  }

  // modified Gram-Schmidt in the parent inner product (diagonal metric given
  // by the parent norm table), one reorthogonalization pass
  const auto& nsq = parent_.norm_sq_table();
  const Eigen::VectorXd metric = Eigen::Map<const Eigen::VectorXd>(nsq.data(), N + 1);
  ortho_ = raw_;
  for (int k = 0; k < nb; ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < k; ++j) {
        const double dot = (ortho_.row(k).array() * ortho_.row(j).array() * metric.transpose().array()).sum();
        ortho_.row(k) -= dot * ortho_.row(j);
      }
    }
    const double nrm2 = (ortho_.row(k).array().square() * metric.transpose().array()).sum();
    if (!(nrm2 > 0.0)) throw OrthogonalityLossError(0.0, N);
    ortho_.row(k) /= std::sqrt(nrm2);
  }

  Eigen::MatrixXd G = ortho_ * metric.asDiagonal() * ortho_.transpose();
  gram_residual_ = (G - Eigen::MatrixXd::Identity(nb, nb)).cwiseAbs().maxCoeff();
  if (gram_residual_ > 1e-6) throw OrthogonalityLossError(gram_residual_, N);
}

void CompositeBasis::eval_all(double x, std::span<double> out) const {
  const int nb = size();
  if (out.size() < static_cast<std::size_t>(nb)) throw std::invalid_argument("eval_all: output too small");
  std::vector<double> p = parent_.eval_all(x);
  const Eigen::Map<const Eigen::VectorXd> pv(p.data(), p.size());
  Eigen::Map<Eigen::VectorXd>(out.data(), nb) = ortho_ * pv;
}

Eigen::MatrixXd CompositeBasis::values_at(std::span<const double> xs) const {
  const int N = parent_degree();
  Eigen::MatrixXd P(N + 1, xs.size());
  std::vector<double> col(N + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    parent_.eval_all(xs[i], col);
    P.col(i) = Eigen::Map<const Eigen::VectorXd>(col.data(), N + 1);
  }
  return ortho_ * P;
}

void CompositeBasis::derivs_at(std::span<const double> xs, Eigen::MatrixXd& val, Eigen::MatrixXd& d1,
                               Eigen::MatrixXd& d2) const {
  const int N = parent_degree();
  Eigen::MatrixXd P(N + 1, xs.size()), P1(N + 1, xs.size()), P2(N + 1, xs.size());
  std::vector<double> v(N + 1), dv(N + 1), ddv(N + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    parent_.eval_derivs(xs[i], v, dv, ddv);
    P.col(i) = Eigen::Map<const Eigen::VectorXd>(v.data(), N + 1);
    P1.col(i) = Eigen::Map<const Eigen::VectorXd>(dv.data(), N + 1);
    P2.col(i) = Eigen::Map<const Eigen::VectorXd>(ddv.data(), N + 1);
  }
  val = ortho_ * P;
  d1 = ortho_ * P1;
  d2 = ortho_ * P2;
}

MomentMatrix CompositeBasis::moment_matrix(int Q, int quad_points) const {
  const MomentMatrix parent_mm(parent_, Q, parent_degree(), MomentMatrix::Method::quadrature, quad_points);
  return MomentMatrix(parent_mm.matrix() * ortho_.transpose(), parent_);
}

ConstraintOperator CompositeBasis::constraint_operator(int Q, int quad_points) const {
  const MomentMatrix mm = moment_matrix(Q, quad_points);
  return ConstraintOperator(mm.matrix(), Eigen::VectorXd::Ones(size()));
}

Eigen::VectorXd CompositeBasis::project(const std::function<double(double)>& f, int quad_points) const {
  const QuadratureRule rule(parent_, quad_points);
  const auto& xs = rule.nodes();
  const auto& w = rule.weights();
  const int N = parent_degree();
  Eigen::VectorXd fp = Eigen::VectorXd::Zero(N + 1);  // <f, p_j>_omega
  std::vector<double> p(N + 1);
  for (int i = 0; i < rule.size(); ++i) {
    const double fx = f(xs[i]);
    if (!std::isfinite(fx)) throw NumericalError("project: non-finite function value at a node");
    parent_.eval_all(xs[i], p);
    for (int j = 0; j <= N; ++j) fp[j] += w[i] * fx * p[j];
  }
  return ortho_ * fp;  // members are orthonormal in <.,.>_omega
}

Eigen::VectorXd CompositeBasis::reconstruct(const Eigen::VectorXd& coeffs, std::span<const double> xs) const {
  if (coeffs.size() != size()) throw std::invalid_argument("reconstruct: coefficient size mismatch");
  return values_at(xs).transpose() * coeffs;
}

}  // namespace mpspec
