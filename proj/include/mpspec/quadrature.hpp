#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mpspec/basis.hpp"

namespace mpspec {

enum class IntegrandMode { against_weight, plain };

/// n-point Gauss rule for the family's weight, built from the recurrence table
/// converted to symmetric (Jacobi-matrix) form. Nodes are the eigenvalues of
/// the tridiagonal matrix; weights come from the Christoffel identity
/// w_i = 1 / sum_k p_k(x_i)^2 over the orthonormal members, which stays
/// accurate where eigenvector first components underflow.
class QuadratureRule {
 public:
  QuadratureRule(const BasisFamily& family, int n);

  int size() const { return n_; }
  const BasisFamily& family() const { return family_; }
  const std::vector<double>& nodes() const { return nodes_; }
  /// Weights against the family weight: sum w_i f(x_i) ~ int f omega dx.
  const std::vector<double>& weights() const { return weights_; }
  /// Plain-measure weights w_i / omega(x_i): sum ~ int f dx.
  const std::vector<double>& plain_weights() const { return plain_weights_; }

  double integrate(const std::function<double(double)>& f, IntegrandMode mode) const;
  double integrate_values(std::span<const double> f_at_nodes, IntegrandMode mode) const;

 private:
  BasisFamily family_;
  int n_ = 0;
  std::vector<double> nodes_, weights_, plain_weights_;
};

/// Rule used for the unweighted inner products <., x^q>: the omega = 1
/// (Legendre) rule on bounded domains, where monomial-times-polynomial
/// integrands are integrated exactly, and the family's own rule in plain mode
/// on unbounded domains. Always used through plain_weights().
QuadratureRule moment_rule(const BasisFamily& family, int n);

}  // namespace mpspec
