#include <doctest.h>

#include <cmath>

#include "mpspec/errors.hpp"
#include "mpspec/moments.hpp"
#include "mpspec/projection.hpp"
#include "test_helpers.hpp"

using namespace mpspec;
using namespace mpspec::testing;

TEST_CASE("moment matrix basics") {
  const MomentMatrix mm(BasisFamily::legendre(4), 3, 4);
  CHECK(mm(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(mm(1, 2)) < 1e-14);

  const MomentMatrix mh = MomentMatrix::standard(BasisFamily::hermite_fn(4), 0, 4);
  // oracle: int e^{-x^2/2} dx = sqrt(2 pi)
  CHECK(mh(0, 0) == doctest::Approx(std::sqrt(2 * kPi)).epsilon(1e-13));
}

TEST_CASE("legendre columns are orthogonal to lower powers") {
  const MomentMatrix mm(BasisFamily::legendre(12), 12, 12);
  for (int q = 0; q < 12; ++q)
    for (int k = q + 1; k <= 12; ++k) CHECK(std::abs(mm(q, k)) < 1e-12);
}

TEST_CASE("recursion and quadrature agree on bounded domains") {
  for (const BasisFamily& f :
       {BasisFamily::legendre(20), BasisFamily::chebyshev1(20), BasisFamily::chebyshev2(20),
        BasisFamily::jacobi(20, 1.0, -0.5)}) {
    const MomentMatrix a(f, 20, 20, MomentMatrix::Method::recursion);
    const MomentMatrix b(f, 20, 20, MomentMatrix::Method::quadrature);
    CAPTURE(f.name());
    CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("closed-form weighted moments match quadrature at small degree") {
  for (const BasisFamily& f : {BasisFamily::hermite_fn(8), BasisFamily::laguerre_fn(8)}) {
    const MomentMatrix cf(f, 3, 8, MomentMatrix::Method::closed_form);
    const MomentMatrix qd(f, 3, 8, MomentMatrix::Method::quadrature);
    const double scale = cf.matrix().cwiseAbs().maxCoeff();
    CAPTURE(f.name());
    CHECK((cf.matrix() - qd.matrix()).cwiseAbs().maxCoeff() < 1e-8 * scale);
  }
  // and against the k-recursion where it is still stable
  const MomentMatrix cf(BasisFamily::laguerre_fn(6), 2, 6, MomentMatrix::Method::closed_form);
  const MomentMatrix rc(BasisFamily::laguerre_fn(6), 2, 6, MomentMatrix::Method::recursion);
  CHECK((cf.matrix() - rc.matrix()).cwiseAbs().maxCoeff() < 1e-8);
  CHECK_THROWS_AS(MomentMatrix(BasisFamily::legendre(4), 2, 4, MomentMatrix::Method::closed_form),
                  std::invalid_argument);
}

TEST_CASE("moments_of") {
  const BasisFamily leg = BasisFamily::legendre(4);
  const MomentMatrix mm(leg, 3, 4);
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(5);
  e0[0] = 1.0;
  const Eigen::VectorXd m = moments_of(e0, mm);
  CHECK(m[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(m[1]) < 1e-14);
  CHECK(m[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(m[3]) < 1e-14);

  CHECK(moments_of(Eigen::VectorXd::Zero(5), mm).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS((void)moments_of(Eigen::VectorXd::Zero(9), mm), std::invalid_argument);

  // projection of the oscillating test function: matrix-vector moments match
  // direct quadrature moments of the reconstruction
  const SpectralCoeffs c = project(osc_bounded, BasisFamily::legendre(16), 16);
  const MomentMatrix mm16(c.basis, 3, 16);
  const Eigen::VectorXd via_mm = moments_of(c, mm16);
  const QuadratureRule rule(BasisFamily::legendre(0), 80);
  const auto rec = reconstruct(c, rule.nodes());
  for (int q = 0; q <= 3; ++q) {
    double direct = 0.0;
    for (int i = 0; i < rule.size(); ++i)
      direct += rule.weights()[i] * rec[i] * std::pow(rule.nodes()[i], q);
    CHECK(via_mm[q] == doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("moments_of_function") {
  const Eigen::VectorXd m =
      moments_of_function([](double) { return 1.0; }, BasisFamily::legendre(0), 2);
  CHECK(m[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(m[1]) < 1e-15);
  CHECK(m[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  // trapezoid oracle on [-15, 15] for the Gaussian-pair mass
  const int n = 600000;
  double trap = 0.0;
  const double h = 30.0 / n;
  for (int i = 0; i <= n; ++i) {
    const double x = -15.0 + i * h;
    trap += ((i == 0 || i == n) ? 0.5 : 1.0) * gauss_pair(x);
  }
  trap *= h;
  const Eigen::VectorXd mh = moments_of_function(gauss_pair, BasisFamily::hermite_fn(0), 0);
  CHECK(mh[0] == doctest::Approx(trap).epsilon(1e-8));

  const Eigen::VectorXd mpsi = moments_of_function(
      [](double x) { return std::exp(-0.5 * x * x); }, BasisFamily::hermite_fn(0), 1);
  CHECK(mpsi[0] == doctest::Approx(std::sqrt(2 * kPi)).epsilon(1e-12));
  CHECK(std::abs(mpsi[1]) < 1e-12);

  CHECK_THROWS_AS(
      (void)moments_of_function([](double) { return std::nan(""); }, BasisFamily::legendre(0), 0),
      NumericalError);
}

TEST_CASE("legendre preserves moments up to the truncation degree") {
  const int N = 10;
  const SpectralCoeffs c = project(osc_bounded, BasisFamily::legendre(N), N);
  const MomentMatrix mm(c.basis, N, N);
  const Eigen::VectorXd m_exact = moments_of_function(osc_bounded, c.basis, N);
  const Eigen::VectorXd m_trunc = moments_of(c, mm);
  for (int q = 0; q <= N; ++q)
    CHECK(std::abs(m_exact[q] - m_trunc[q]) <= 1e-12 * (1.0 + std::abs(m_exact[q])));
}
