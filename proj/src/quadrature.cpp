#include "mpspec/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "mpspec/errors.hpp"

namespace mpspec {

QuadratureRule::QuadratureRule(const BasisFamily& family, int n) : family_(family), n_(n) {
  if (n < 1) throw std::invalid_argument("QuadratureRule: n >= 1 required");
  const BasisFamily fam = family.with_max_degree(n);
  const RecurrenceCoeffs& rec = fam.recurrence_coeffs();

  // monic form: pi_k = (x - alpha_{k-1}) pi_{k-1} - beta_{k-1} pi_{k-2}
  Eigen::VectorXd alpha(n), beta(n);
  beta[0] = fam.weight_integral();
  for (int j = 0; j < n; ++j) {
    alpha[j] = -rec.b[j + 1] / rec.a[j + 1];
    if (j >= 1) {
      beta[j] = -rec.c[j + 1] / (rec.a[j + 1] * rec.a[j]);
      if (!(beta[j] > 0.0)) throw NumericalError("QuadratureRule: nonpositive recurrence beta");
    }
  }
  Eigen::VectorXd sub = beta.tail(n - 1).cwiseSqrt();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(alpha, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("QuadratureRule: eigensolver failed");
  Eigen::VectorXd x = es.eigenvalues();

  nodes_.assign(x.data(), x.data() + n);
  weights_.resize(n);
  plain_weights_.resize(n);

  // orthonormal recurrence, weight factor folded in for the weighted families
  const bool weighted = fam.symmetric_weighting();
  std::vector<double> sb(n);
  for (int j = 0; j < n; ++j) sb[j] = std::sqrt(beta[j]);
  for (int i = 0; i < n; ++i) {
    const double xi = nodes_[i];
    double pm1 = 0.0;
    double p0 = (weighted ? fam.sqrt_weight(xi) : 1.0) / sb[0];
    double s = p0 * p0;
    for (int k = 1; k < n; ++k) {
      const double pk = ((xi - alpha[k - 1]) * p0 - (k >= 2 ? sb[k - 1] * pm1 : 0.0)) / sb[k];
      pm1 = p0;
      p0 = pk;
      s += pk * pk;
    }
    if (weighted) {
      plain_weights_[i] = 1.0 / s;
      weights_[i] = plain_weights_[i] * fam.weight(xi);
    } else {
      weights_[i] = 1.0 / s;
      plain_weights_[i] = weights_[i] / fam.weight(xi);
    }
  }

  for (int i = 0; i < n; ++i) {
    if (!fam.domain().interior(nodes_[i])) throw NumericalError("QuadratureRule: node outside domain interior");
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) throw NumericalError("QuadratureRule: nodes not increasing");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw NumericalError("QuadratureRule: nonpositive weight");
    sum += w;
  }
  if (std::abs(sum - fam.weight_integral()) > 1e-8 * std::abs(fam.weight_integral()))
    throw NumericalError("QuadratureRule: weights do not sum to the weight integral");
}

double QuadratureRule::integrate(const std::function<double(double)>& f, IntegrandMode mode) const {
  const auto& w = (mode == IntegrandMode::against_weight) ? weights_ : plain_weights_;
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    const double fx = f(nodes_[i]);
    if (!std::isfinite(fx)) throw NumericalError("integrate: non-finite integrand value at a node");
    s += w[i] * fx;
  }
  return s;
}

double QuadratureRule::integrate_values(std::span<const double> f_at_nodes, IntegrandMode mode) const {
  if (f_at_nodes.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("integrate_values: size mismatch");
  const auto& w = (mode == IntegrandMode::against_weight) ? weights_ : plain_weights_;
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    if (!std::isfinite(f_at_nodes[i])) throw NumericalError("integrate_values: non-finite value");
    s += w[i] * f_at_nodes[i];
  }
  return s;
}

QuadratureRule moment_rule(const BasisFamily& family, int n) {
  if (family.domain().kind == Domain::Kind::bounded)
    return QuadratureRule(BasisFamily::legendre(0), n);
  return QuadratureRule(family, n);
}

}  // namespace mpspec
