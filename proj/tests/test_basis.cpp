#include <doctest.h>

#include <cmath>

#include "mpspec/basis.hpp"
#include "mpspec/errors.hpp"
#include "test_helpers.hpp"

using namespace mpspec;
using namespace mpspec::testing;

TEST_CASE("recurrence coefficients in classical normalization") {
  const auto leg = BasisFamily::legendre(4).recurrence_coeffs();
  CHECK(leg.a[2] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(leg.b[2] == 0.0);
  CHECK(leg.c[2] == doctest::Approx(-0.5).epsilon(1e-15));

  const auto herm = BasisFamily::hermite_fn(4).recurrence_coeffs();
  CHECK(herm.a[2] == 2.0);
  CHECK(herm.b[2] == 0.0);
  CHECK(herm.c[2] == -2.0);

  const auto c1 = BasisFamily::chebyshev1(4).recurrence_coeffs();
  CHECK(c1.a[3] == 2.0);
  CHECK(c1.b[3] == 0.0);
  CHECK(c1.c[3] == -1.0);
  CHECK(c1.a[1] == 1.0);  // T_1 = x
}

TEST_CASE("eval_all by forward recurrence") {
  const auto leg = BasisFamily::legendre(2).eval_all(0.0);
  CHECK(leg[0] == 1.0);
  CHECK(leg[1] == 0.0);
  CHECK(leg[2] == doctest::Approx(-0.5).epsilon(1e-15));

  const auto psi = BasisFamily::hermite_fn(1).eval_all(0.0);
  CHECK(psi[0] == 1.0);
  CHECK(psi[1] == 0.0);

  // oracle: explicit Jacobi endpoint values P_k(1) = C(k+alpha, k)
  const BasisFamily jac = BasisFamily::jacobi(6, 1.0, -0.5);
  const auto at1 = jac.eval_all(1.0);
  double binom = 1.0;
  for (int k = 0; k <= 6; ++k) {
    if (k > 0) binom *= (k + 1.0) / k;  // C(k+1, k) for alpha = 1
    CHECK(at1[k] == doctest::Approx(binom).epsilon(1e-13));
  }

  CHECK_THROWS_AS((void)BasisFamily::legendre(2).eval_all(1.5), std::domain_error);
  CHECK_THROWS_AS((void)BasisFamily::laguerre_fn(2).eval_all(-0.1), std::domain_error);
}

TEST_CASE("norm tables against the quadrature oracle") {
  const BasisFamily leg = BasisFamily::legendre(12);
  for (int k = 0; k <= 12; ++k)
    CHECK(leg.norm_sq_table()[k] == doctest::Approx(2.0 / (2 * k + 1)).epsilon(1e-15));

  for (const BasisFamily& f :
       {BasisFamily::chebyshev1(12), BasisFamily::chebyshev2(12), BasisFamily::jacobi(12, 1.0, -0.5),
        BasisFamily::hermite_fn(12), BasisFamily::laguerre_fn(12)}) {
    const Eigen::MatrixXd G = gram(f, 80);
    for (int k = 0; k <= 12; ++k)
      CHECK(G(k, k) == doctest::Approx(f.norm_sq_table()[k]).epsilon(1e-12));
  }
  CHECK(BasisFamily::chebyshev1(2).norm_sq_table()[0] == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(BasisFamily::chebyshev1(2).norm_sq_table()[1] == doctest::Approx(kPi / 2).epsilon(1e-15));
}

TEST_CASE("weight evaluation and endpoint singularities") {
  CHECK(BasisFamily::chebyshev2(1).weight(0.0) == doctest::Approx(1.0));
  CHECK(BasisFamily::jacobi(1, 1.0, -0.5).weight(0.0) == doctest::Approx(1.0));
  CHECK(BasisFamily::hermite_fn(1).weight(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(BasisFamily::legendre(1).weight(1.0) == 1.0);

  CHECK_THROWS_AS((void)BasisFamily::chebyshev1(1).weight(1.0), std::domain_error);
  CHECK_THROWS_AS((void)BasisFamily::chebyshev1(1).weight(-1.0), std::domain_error);
  CHECK_THROWS_AS((void)BasisFamily::jacobi(1, 1.0, -0.5).weight(-1.0), std::domain_error);
  CHECK_NOTHROW((void)BasisFamily::jacobi(1, 1.0, -0.5).weight(1.0));
  CHECK_THROWS_AS((void)BasisFamily::hermite_fn(1).weight(std::nan("")), std::domain_error);
}

TEST_CASE("constructor parameter validation") {
  CHECK_THROWS_AS(BasisFamily::jacobi(2, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BasisFamily::jacobi(2, 0.0, -1.5), std::invalid_argument);
  CHECK_THROWS_AS(BasisFamily::hermite_fn(2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(BasisFamily::laguerre_fn(2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(BasisFamily::legendre(-1), std::invalid_argument);
  CHECK_THROWS_AS(BasisFamily::custom(Domain::bounded(-1, 1), {}, {}, nullptr, 0.0, false),
                  std::invalid_argument);
}

TEST_CASE("orthogonality of all families under the 80-point rule") {
  for (const BasisFamily& f :
       {BasisFamily::legendre(40), BasisFamily::chebyshev1(40), BasisFamily::chebyshev2(40),
        BasisFamily::jacobi(40, 1.0, -0.5), BasisFamily::hermite_fn(40), BasisFamily::laguerre_fn(40)}) {
    const Eigen::MatrixXd G = gram(f, 80);
    double worst = 0.0;
    for (int h = 0; h <= 40; ++h)
      for (int k = 0; k <= 40; ++k) {
        if (h == k) continue;
        worst = std::max(worst, std::abs(G(h, k)) / std::sqrt(G(h, h) * G(k, k)));
      }
    CAPTURE(f.name());
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("weighted members match the weighted inner product of the polynomials") {
  // <P_h, P_k> (plain) == <phi_h, phi_k>_omega
  for (const BasisFamily& f : {BasisFamily::hermite_fn(12), BasisFamily::laguerre_fn(12)}) {
    const QuadratureRule rule(f, 80);
    const int N = f.max_degree();
    const auto& rec = f.recurrence_coeffs();
    Eigen::MatrixXd poly(N + 1, rule.size());  // polynomial part, recomputed here
    for (int i = 0; i < rule.size(); ++i) {
      const double x = rule.nodes()[i];
      poly(0, i) = 1.0;
      if (N >= 1) poly(1, i) = rec.a[1] * x + rec.b[1];
      for (int k = 2; k <= N; ++k)
        poly(k, i) = (rec.a[k] * x + rec.b[k]) * poly(k - 1, i) + rec.c[k] * poly(k - 2, i);
    }
    const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(rule.weights().data(), rule.size());
    const Eigen::MatrixXd G_omega = poly * w.asDiagonal() * poly.transpose();
    const Eigen::MatrixXd G_plain = gram(f, 80);
    const double scale = G_omega.cwiseAbs().maxCoeff();
    CHECK((G_omega - G_plain).cwiseAbs().maxCoeff() / scale < 1e-12);
  }
}

TEST_CASE("recurrence evaluation matches the monomial-coefficient oracle") {
  for (const BasisFamily& f :
       {BasisFamily::legendre(10), BasisFamily::chebyshev2(10), BasisFamily::jacobi(10, 1.0, -0.5),
        BasisFamily::hermite_fn(10), BasisFamily::laguerre_fn(10)}) {
    const int N = f.max_degree();
    const auto& rec = f.recurrence_coeffs();
    // monomial coefficients by convolving with (a_k x + b_k)
    std::vector<std::vector<double>> mono(N + 1);
    mono[0] = {1.0};
    if (N >= 1) mono[1] = {rec.b[1], rec.a[1]};
    for (int k = 2; k <= N; ++k) {
      std::vector<double> c(k + 1, 0.0);
      for (int j = 0; j < k; ++j) {
        c[j + 1] += rec.a[k] * mono[k - 1][j];
        c[j] += rec.b[k] * mono[k - 1][j];
      }
      for (int j = 0; j < k - 1; ++j) c[j] += rec.c[k] * mono[k - 2][j];
      mono[k] = std::move(c);
    }
    for (double x : {-0.9, -0.3, 0.2, 0.7}) {
      const double xx = (f.domain().kind == Domain::Kind::half_line) ? x + 1.0 : x;
      const auto vals = f.eval_all(xx);
      const double w12 = f.symmetric_weighting() ? f.sqrt_weight(xx) : 1.0;
      for (int k = 0; k <= N; ++k) {
        double horner = 0.0;
        for (int j = k; j >= 0; --j) horner = horner * xx + mono[k][j];
        CHECK(vals[k] == doctest::Approx(horner * w12).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("derivative evaluation against finite differences") {
  const double h = 1e-5;
  for (const BasisFamily& f : {BasisFamily::legendre(8), BasisFamily::laguerre_fn(8)}) {
    const double x = (f.domain().kind == Domain::Kind::half_line) ? 1.7 : 0.37;
    std::vector<double> v(9), d1(9), d2(9);
    f.eval_derivs(x, v, d1, d2);
    const auto vp = f.eval_all(x + h);
    const auto vm = f.eval_all(x - h);
    const auto v0 = f.eval_all(x);
    for (int k = 0; k <= 8; ++k) {
      CHECK(v[k] == doctest::Approx(v0[k]).epsilon(1e-14));
      CHECK(d1[k] == doctest::Approx((vp[k] - vm[k]) / (2 * h)).epsilon(1e-8));
      CHECK(d2[k] == doctest::Approx((vp[k] - 2 * v0[k] + vm[k]) / (h * h)).epsilon(1e-4));
    }
  }
}
