#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "mpspec/basis.hpp"
#include "mpspec/quadrature.hpp"

namespace mpspec::testing {

inline constexpr double kPi = 3.14159265358979323846;

inline double osc_bounded(double x) {
  return std::sin(2 * kPi * x) + x * x * std::cos(2 * kPi * x);
}

inline double gauss_pair(double x) {
  return 3.0 / std::sqrt(2 * kPi) * std::exp(-0.5 * (x + 3) * (x + 3)) -
         1.0 / std::sqrt(kPi) * std::exp(-(x - 2) * (x - 2));
}

inline double poly_exp(double x) { return (x * x * x - 2 * x + std::sin(x)) * std::exp(-x); }

inline std::function<double(double)> smooth_for(const BasisFamily& family) {
  switch (family.domain().kind) {
    case Domain::Kind::bounded: return osc_bounded;
    case Domain::Kind::real_line: return gauss_pair;
    case Domain::Kind::half_line: return poly_exp;
  }
  return osc_bounded;
}

/// Gram matrix of the basis members under the family rule (weighted families
/// use the unweighted product of the weighted members).
inline Eigen::MatrixXd gram(const BasisFamily& family, int n_quad) {
  const QuadratureRule rule(family, n_quad);
  const int N = family.max_degree();
  Eigen::MatrixXd B(N + 1, rule.size());
  std::vector<double> col(N + 1);
  for (int i = 0; i < rule.size(); ++i) {
    family.eval_all(rule.nodes()[i], col);
    for (int k = 0; k <= N; ++k) B(k, i) = col[k];
  }
  const auto& w = family.symmetric_weighting() ? rule.plain_weights() : rule.weights();
  Eigen::VectorXd wv = Eigen::Map<const Eigen::VectorXd>(w.data(), rule.size());
  return B * wv.asDiagonal() * B.transpose();
}

inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240517);
  return gen;
}

inline Eigen::VectorXd random_vector(int n, double scale = 1.0) {
  std::normal_distribution<double> dist(0.0, scale);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = dist(rng());
  return v;
}

}  // namespace mpspec::testing
