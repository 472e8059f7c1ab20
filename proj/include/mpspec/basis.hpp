#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mpspec {

enum class Family { legendre, chebyshev1, chebyshev2, jacobi, hermite_fn, laguerre_fn, custom };

struct Domain {
  enum class Kind { bounded, half_line, real_line };

  Kind kind = Kind::bounded;
  double a = -1.0;  // endpoints, bounded only
  double b = 1.0;

  static Domain bounded(double a, double b);
  static Domain half_line() { return {Kind::half_line, 0.0, 0.0}; }
  static Domain real_line() { return {Kind::real_line, 0.0, 0.0}; }

  bool contains(double x) const;
  bool interior(double x) const;
};

/// Coefficients of the three-term recurrence
///   phi_k(x) = (a_k x + b_k) phi_{k-1}(x) + c_k phi_{k-2}(x),  k = 1..N,
/// with phi_0 = 1 and phi_{-1} = 0. Index 0 of each vector is unused.
struct RecurrenceCoeffs {
  std::vector<double> a, b, c;
  int max_k() const { return static_cast<int>(a.size()) - 1; }
};

/// One orthogonal family in its classical textbook normalization, together
/// with its weight, domain, recurrence table and norm table. For the Hermite
/// and Laguerre function families (symmetric_weighting == true) the members
/// are phi_k * omega^{1/2}, orthogonal in the unweighted inner product.
class BasisFamily {
 public:
  static BasisFamily legendre(int max_degree);
  static BasisFamily chebyshev1(int max_degree);
  static BasisFamily chebyshev2(int max_degree);
  static BasisFamily jacobi(int max_degree, double alpha, double beta);
  static BasisFamily hermite_fn(int max_degree, double alpha = 0.0);
  static BasisFamily laguerre_fn(int max_degree, double alpha = 0.0);
  static BasisFamily custom(Domain domain, RecurrenceCoeffs rec, std::vector<double> norms_sq,
                            std::function<double(double)> weight, double weight_integral,
                            bool symmetric_weighting);

  Family family() const { return family_; }
  const std::string& name() const { return name_; }
  int max_degree() const { return max_degree_; }
  int size() const { return max_degree_ + 1; }
  const Domain& domain() const { return domain_; }
  bool symmetric_weighting() const { return symmetric_weighting_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  /// Same family truncated/extended to another max degree.
  BasisFamily with_max_degree(int max_degree) const;

  const RecurrenceCoeffs& recurrence_coeffs() const { return rec_; }

  /// Entry k is ||phi_k||^2 in L^2_omega (closed forms per family).
  const std::vector<double>& norm_sq_table() const { return norms_sq_; }

  double weight(double x) const;
  double sqrt_weight(double x) const;
  /// int_Omega omega(x) dx.
  double weight_integral() const { return weight_integral_; }

  /// (phi_0(x), ..., phi_N(x)) by forward recurrence; multiplied by
  /// omega^{1/2}(x) when symmetric_weighting.
  void eval_all(double x, std::span<double> out) const;
  std::vector<double> eval_all(double x) const;

  /// Values with first and second derivatives of the members (including the
  /// omega^{1/2} factor for the weighted families).
  void eval_derivs(double x, std::span<double> val, std::span<double> d1, std::span<double> d2) const;

 private:
  BasisFamily() = default;
  void require_in_domain(double x) const;

  Family family_ = Family::custom;
  std::string name_;
  Domain domain_;
  int max_degree_ = 0;
  double alpha_ = 0.0, beta_ = 0.0;
  bool symmetric_weighting_ = false;
  RecurrenceCoeffs rec_;
  std::vector<double> norms_sq_;
  std::function<double(double)> custom_weight_;
  double weight_integral_ = 0.0;
};

std::string family_name(Family f);

}  // namespace mpspec
