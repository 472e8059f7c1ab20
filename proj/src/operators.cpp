#include "mpspec/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mpspec/errors.hpp"

namespace mpspec {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

GalerkinOperator fp_hermite_operator(int N, double mu, double T) {
  if (N < 2) throw std::invalid_argument("fp_hermite_operator: N >= 2 required");
  ModelParams::validate_fp(T);
  GalerkinOperator op;
  op.A = Eigen::MatrixXd::Zero(N + 1, N + 1);
  // L_FP(psi_k) = k(k-1)(1+T) psi_{k-2} - k mu psi_{k-1}
  //             + (-kT - (T-1)/2) psi_k + (mu/2) psi_{k+1} + ((T-1)/4) psi_{k+2}
  for (int k = 0; k <= N; ++k) {
    if (k >= 2) op.A(k - 2, k) = k * (k - 1.0) * (1.0 + T);
    if (k >= 1) op.A(k - 1, k) = -k * mu;
    op.A(k, k) = -k * T - 0.5 * (T - 1.0);
    if (k + 1 <= N) op.A(k + 1, k) = 0.5 * mu;
    if (k + 2 <= N) op.A(k + 2, k) = 0.25 * (T - 1.0);
  }
  return op;
}

GalerkinOperator opinion_operator(const CompositeBasis& cb, double m, double lambda, int quad_points) {
  ModelParams::validate_opinion(m, lambda);
  const QuadratureRule rule(cb.parent(), quad_points);
  const auto& xs = rule.nodes();
  const auto& w = rule.weights();
  const int n = rule.size();

  Eigen::MatrixXd Z, Zp, Zpp;
  cb.derivs_at(xs, Z, Zp, Zpp);

  // L_Op zeta = (lambda/2)[(1 - v^2) zeta'' - 4 v zeta' - 2 zeta] + (v - m) zeta' + zeta
  Eigen::MatrixXd LZ(cb.size(), n);
  for (int i = 0; i < n; ++i) {
    const double v = xs[i];
    LZ.col(i) = 0.5 * lambda * ((1.0 - v * v) * Zpp.col(i) - 4.0 * v * Zp.col(i) - 2.0 * Z.col(i)) +
                (v - m) * Zp.col(i) + Z.col(i);
  }
  GalerkinOperator op;
  // entry (j,k) = <L zeta_k, zeta_j>_omega (members orthonormal)
  op.A = Z * Eigen::Map<const Eigen::VectorXd>(w.data(), n).asDiagonal() * LZ.transpose();
  return op;
}

GalerkinOperator callcenter_operator(const BasisFamily& basis, int N, double lambda, double gamma,
                                     double v_L, int quad_points) {
  ModelParams::validate_callcenter(lambda, gamma, v_L);
  if (basis.family() != Family::laguerre_fn)
    throw std::invalid_argument("callcenter_operator: Laguerre function basis required");
  const BasisFamily b = basis.with_max_degree(N);
  const QuadratureRule rule(b, quad_points);
  const auto& xs = rule.nodes();
  const auto& w = rule.plain_weights();
  const int n = rule.size();

  Eigen::MatrixXd X(N + 1, n), X1(N + 1, n), X2(N + 1, n);
  std::vector<double> v(N + 1), dv(N + 1), ddv(N + 1);
  for (int i = 0; i < n; ++i) {
    b.eval_derivs(xs[i], v, dv, ddv);
    X.col(i) = Eigen::Map<const Eigen::VectorXd>(v.data(), N + 1);
    X1.col(i) = Eigen::Map<const Eigen::VectorXd>(dv.data(), N + 1);
    X2.col(i) = Eigen::Map<const Eigen::VectorXd>(ddv.data(), N + 1);
  }

  // L_CC h = (lambda/2)[v^2 h'' + 4 v h' + 2 h] + (gamma/2)[(ln(v/v_L)+1) h + v ln(v/v_L) h']
  Eigen::MatrixXd LX(N + 1, n);
  for (int i = 0; i < n; ++i) {
    const double x = xs[i];
    const double lnv = std::log(x / v_L);
    LX.col(i) = 0.5 * lambda * (x * x * X2.col(i) + 4.0 * x * X1.col(i) + 2.0 * X.col(i)) +
                0.5 * gamma * ((lnv + 1.0) * X.col(i) + x * lnv * X1.col(i));
  }
  GalerkinOperator op;
  // unweighted inner products; ||xi_j|| = 1
  op.A = X * Eigen::Map<const Eigen::VectorXd>(w.data(), n).asDiagonal() * LX.transpose();
  return op;
}

GalerkinOperator constrain(const GalerkinOperator& op, const ConstraintOperator& co,
                           std::span<const int> q_list) {
  if (co.N() + 1 != op.size()) throw std::invalid_argument("constrain: basis size mismatch");
  if (q_list.empty()) throw std::invalid_argument("constrain: empty q_list");
  for (int q : q_list)
    if (q < 0 || q > co.Q()) throw std::invalid_argument("constrain: q outside the moment table");

  GalerkinOperator out;
  out.constrained = true;
  out.q_list.assign(q_list.begin(), q_list.end());

  const bool full = static_cast<int>(q_list.size()) == co.Q() + 1 &&
                    std::is_sorted(q_list.begin(), q_list.end()) && q_list.front() == 0 &&
                    q_list.back() == co.Q();
  if (full) {
    out.A = co.zero_moment_projector() * op.A;
    return out;
  }
  // Lagrange system restricted to the selected moment rows
  Eigen::MatrixXd mu_sub(q_list.size(), co.N() + 1);
  for (std::size_t r = 0; r < q_list.size(); ++r) mu_sub.row(r) = co.moment_rows().row(q_list[r]);
  const ConstraintOperator sub(mu_sub, co.norms_sq());
  out.A = sub.zero_moment_projector() * op.A;
  return out;
}

void ModelParams::validate_fp(double T) {
  if (!(T > 0.0)) throw ConfigError("fp: temperature T must be positive");
}

void ModelParams::validate_opinion(double m, double lambda) {
  if (!(std::abs(m) < 1.0)) throw ConfigError("opinion: |m| < 1 required");
  if (!(lambda > 0.0) || !(lambda < 1.0 + std::abs(m)))
    throw ConfigError("opinion: 0 < lambda < 1 + |m| required");
}

void ModelParams::validate_callcenter(double lambda, double gamma, double v_L) {
  if (!(gamma > 0.0) || !(gamma < 1.0)) throw ConfigError("callcenter: 0 < gamma < 1 required");
  if (!(lambda > 0.0)) throw ConfigError("callcenter: lambda > 0 required");
  if (!(v_L > 0.0)) throw ConfigError("callcenter: v_L > 0 required");
}

SteadyState SteadyState::maxwellian(double rho, double mu, double T) {
  ModelParams::validate_fp(T);
  return SteadyState(Kind::maxwellian, rho, mu, T, rho / std::sqrt(kTwoPi * T));
}

SteadyState SteadyState::opinion(double m, double lambda, int quad_points) {
  ModelParams::validate_opinion(m, lambda);
  const double ep = (1.0 + m) / lambda - 1.0;
  const double em = (1.0 - m) / lambda - 1.0;
  const QuadratureRule rule(BasisFamily::legendre(0), quad_points);
  double mass = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double v = rule.nodes()[i];
    mass += rule.weights()[i] * std::pow(1.0 + v, ep) * std::pow(1.0 - v, em);
  }
  return SteadyState(Kind::opinion, ep, em, 0.0, 1.0 / mass);
}

SteadyState SteadyState::lognormal(double sigma, double mu_ln) {
  if (!(sigma > 0.0)) throw ConfigError("lognormal: sigma > 0 required");
  return SteadyState(Kind::lognormal, sigma, mu_ln, 0.0, 1.0 / std::sqrt(kTwoPi * sigma));
}

double SteadyState::operator()(double x) const {
  switch (kind_) {
    case Kind::maxwellian:
      return norm_ * std::exp(-(x - p2_) * (x - p2_) / (2.0 * p3_));
    case Kind::opinion:
      if (!(x >= -1.0 && x <= 1.0)) throw std::domain_error("opinion steady state: x outside [-1,1]");
      return norm_ * std::pow(1.0 + x, p1_) * std::pow(1.0 - x, p2_);
    case Kind::lognormal: {
      if (!(x > 0.0)) throw std::domain_error("lognormal steady state: x > 0 required");
      const double d = std::log(x) - p2_;
      return norm_ / x * std::exp(-d * d / (2.0 * p1_));
    }
  }
  return 0.0;
}

std::vector<double> SteadyState::eval(std::span<const double> xs) const {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = (*this)(xs[i]);
  return out;
}

}  // namespace mpspec
