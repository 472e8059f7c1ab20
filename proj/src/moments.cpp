#include "mpspec/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "mpspec/errors.hpp"

namespace mpspec {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

/// Seed row mu_{q,0} = <phi_0, x^q> (phi_0 = omega^{1/2} for weighted families).
double seed_moment(const BasisFamily& family, int q) {
  switch (family.family()) {
    case Family::legendre:
    case Family::chebyshev1:
    case Family::chebyshev2:
    case Family::jacobi:
      // x^{q+1}/(q+1) evaluated across [-1,1]
      return (q % 2 == 0) ? 2.0 / (q + 1.0) : 0.0;
    case Family::hermite_fn: {
      // int x^q e^{-x^2/2} dx = sqrt(2 pi) (q-1)!! for even q
      if (q % 2 == 1) return 0.0;
      double v = std::sqrt(kTwoPi);
      for (int j = 1; j < q; j += 2) v *= j;
      return v;
    }
    case Family::laguerre_fn: {
      // int x^q e^{-x/2} dx = q! 2^{q+1}
      double v = 2.0;
      for (int j = 1; j <= q; ++j) v *= 2.0 * j;
      return v;
    }
    case Family::custom:
      throw std::invalid_argument("recursion moments: no closed-form seed for a custom family");
  }
  return 0.0;
}

/// mu_{q,k} = (-1)^k q! 2^{q+1} sum_j C(q,j) C(q+k-j, q)
/// from int x^q L_k e^{-sx} dx generated by q!(1-z)^q / (s+z(1-s))^{q+1} at s = 1/2.
double laguerre_fn_moment(int q, int k) {
  double s = 0.0;
  for (int j = 0; j <= std::min(q, k); ++j) {
    double cqj = 1.0;
    for (int i = 1; i <= j; ++i) cqj *= static_cast<double>(q - i + 1) / i;
    double c2 = 1.0;
    for (int i = 1; i <= q; ++i) c2 *= static_cast<double>(k - j + i) / i;
    s += cqj * c2;
  }
  double scale = 2.0;
  for (int i = 1; i <= q; ++i) scale *= 2.0 * i;
  return ((k % 2) ? -1.0 : 1.0) * scale * s;
}

/// mu_{q,k} = sqrt(2 pi) sum_{m even} C(q,m) (m-1)!! 2^{q-m} k!/j!,
/// j = (k-q+m)/2, from the Hermite generating function against e^{-x^2/2}.
double hermite_fn_moment(int q, int k) {
  constexpr double kSqrt2Pi = 2.50662827463100050242;
  double total = 0.0;
  for (int m = 0; m <= q; m += 2) {
    const int j2 = k - q + m;
    if (j2 < 0 || j2 % 2 != 0) continue;
    const int j = j2 / 2;
    double term = 1.0;
    for (int i = 1; i <= m; ++i) term *= static_cast<double>(q - i + 1) / i;  // C(q,m)
    for (int i = 1; i < m; i += 2) term *= i;                                 // (m-1)!!
    for (int i = 0; i < q - m; ++i) term *= 2.0;
    for (int i = j + 1; i <= k; ++i) term *= i;                               // k!/j!
    total += term;
  }
  return kSqrt2Pi * total;
}

}  // namespace

MomentMatrix::MomentMatrix(Eigen::MatrixXd mu, const BasisFamily& family)
    : family_(family), mu_(std::move(mu)) {}

MomentMatrix MomentMatrix::standard(const BasisFamily& family, int Q, int N, int quad_points) {
  const Method m = family.symmetric_weighting() ? Method::closed_form : Method::quadrature;
  return MomentMatrix(family, Q, N, m, quad_points);
}

MomentMatrix::MomentMatrix(const BasisFamily& family, int Q, int N, Method method, int quad_points)
    : family_(family.with_max_degree(N)) {
  if (Q < 0 || N < 0) throw std::invalid_argument("MomentMatrix: Q, N >= 0 required");
  mu_.resize(Q + 1, N + 1);

  if (method == Method::closed_form) {
    switch (family_.family()) {
      case Family::laguerre_fn:
        for (int q = 0; q <= Q; ++q)
          for (int k = 0; k <= N; ++k) mu_(q, k) = laguerre_fn_moment(q, k);
        return;
      case Family::hermite_fn:
        for (int q = 0; q <= Q; ++q)
          for (int k = 0; k <= N; ++k) mu_(q, k) = hermite_fn_moment(q, k);
        return;
      default:
        throw std::invalid_argument("closed-form moments cover the weighted families only");
    }
  }

  if (method == Method::quadrature) {
    const QuadratureRule rule = moment_rule(family_, quad_points);
    const auto& xs = rule.nodes();
    const auto& w = rule.plain_weights();
    std::vector<double> phi(N + 1);
    mu_.setZero();
    Eigen::VectorXd xq(Q + 1);
    for (int i = 0; i < rule.size(); ++i) {
      family_.eval_all(xs[i], phi);
      double p = 1.0;
      for (int q = 0; q <= Q; ++q) {
        xq[q] = p * w[i];
        p *= xs[i];
      }
      for (int k = 0; k <= N; ++k)
        for (int q = 0; q <= Q; ++q) mu_(q, k) += xq[q] * phi[k];
    }
    return;
  }

  // recursion: mu_{q,k} = a_k mu_{q+1,k-1} + b_k mu_{q,k-1} + c_k mu_{q,k-2},
  // seeded at k = 0 with powers up to Q+N.
  const RecurrenceCoeffs& rec = family_.recurrence_coeffs();
  Eigen::MatrixXd work(Q + N + 1, N + 1);
  for (int q = 0; q <= Q + N; ++q) work(q, 0) = seed_moment(family_, q);
  for (int k = 1; k <= N; ++k) {
    const int qmax = Q + N - k;
    for (int q = 0; q <= qmax; ++q) {
      double v = rec.a[k] * work(q + 1, k - 1) + rec.b[k] * work(q, k - 1);
      if (k >= 2) v += rec.c[k] * work(q, k - 2);
      work(q, k) = v;
    }
  }
  mu_ = work.topRows(Q + 1);
}

Eigen::VectorXd moments_of(const Eigen::VectorXd& coeffs, const MomentMatrix& mm) {
  if (coeffs.size() > mm.matrix().cols())
    throw std::invalid_argument("moments_of: coefficient vector longer than the moment table");
  return mm.matrix().leftCols(coeffs.size()) * coeffs;
}

Eigen::VectorXd moments_of(const SpectralCoeffs& coeffs, const MomentMatrix& mm) {
  return moments_of(coeffs.c, mm);
}

Eigen::VectorXd moments_of_function(const std::function<double(double)>& f, const QuadratureRule& rule,
                                    int Q) {
  const auto& xs = rule.nodes();
  const auto& w = rule.plain_weights();
  Eigen::VectorXd m = Eigen::VectorXd::Zero(Q + 1);
  for (int i = 0; i < rule.size(); ++i) {
    const double fx = f(xs[i]);
    if (!std::isfinite(fx)) throw NumericalError("moments_of_function: non-finite value at a node");
    double p = w[i] * fx;
    for (int q = 0; q <= Q; ++q) {
      m[q] += p;
      p *= xs[i];
    }
  }
  return m;
}

Eigen::VectorXd moments_of_function(const std::function<double(double)>& f, const BasisFamily& family,
                                    int Q, int quad_points) {
  return moments_of_function(f, moment_rule(family, quad_points), Q);
}

}  // namespace mpspec
