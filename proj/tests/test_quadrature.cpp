#include <doctest.h>

#include <cmath>

#include "mpspec/errors.hpp"
#include "mpspec/quadrature.hpp"
#include "test_helpers.hpp"

using namespace mpspec;
using namespace mpspec::testing;

namespace {

/// Closed-form weight moments int x^d omega dx; Jacobi handled by the caller.
double weight_moment(Family fam, int d) {
  const bool odd = d % 2 != 0;
  switch (fam) {
    case Family::legendre: return odd ? 0.0 : 2.0 / (d + 1);
    case Family::chebyshev1: {
      if (odd) return 0.0;
      double v = kPi;
      for (int j = 2; j <= d; j += 2) v *= (j - 1.0) / j;
      return v;
    }
    case Family::chebyshev2: {
      if (odd) return 0.0;
      double v = kPi;  // pi (d-1)!!/(d+2)!!
      double num = 1.0, den = 2.0;
      for (int j = 1; j < d; j += 2) num *= j;
      for (int j = 4; j <= d + 2; j += 2) den *= j;
      return v * num / den;
    }
    case Family::hermite_fn: {
      if (odd) return 0.0;
      double v = std::sqrt(kPi);
      for (int j = 1; j < d; j += 2) v *= 0.5 * j;
      return v;
    }
    case Family::laguerre_fn: {
      double v = 1.0;
      for (int j = 1; j <= d; ++j) v *= j;
      return v;
    }
    default: return 0.0;
  }
}

/// Independent route for Jacobi weight moments: expand x^d in the Jacobi basis
/// through the inverted recurrence, then int x^d omega = c_0 * ||phi_0||^2.
double jacobi_weight_moment(const BasisFamily& f, int d) {
  const auto& rec = f.recurrence_coeffs();
  std::vector<double> c(1, 1.0);  // x^0 = phi_0
  for (int p = 0; p < d; ++p) {
    std::vector<double> out(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      // x phi_k = (phi_{k+1} - b_{k+1} phi_k)/a_{k+1} - (c_{k+1}/a_{k+1}) phi_{k-1}
      const double a = rec.a[k + 1], b = rec.b[k + 1], cc = rec.c[k + 1];
      out[k + 1] += c[k] / a;
      out[k] -= c[k] * b / a;
      if (k >= 1) out[k - 1] -= c[k] * cc / a;
    }
    c = std::move(out);
  }
  return c[0] * f.norm_sq_table()[0];
}

}  // namespace

TEST_CASE("small closed-form rules") {
  const QuadratureRule leg2(BasisFamily::legendre(0), 2);
  CHECK(leg2.nodes()[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(leg2.nodes()[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(leg2.weights()[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(leg2.weights()[1] == doctest::Approx(1.0).epsilon(1e-14));

  const QuadratureRule c13(BasisFamily::chebyshev1(0), 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(c13.nodes()[i] == doctest::Approx(std::cos((2 * (3 - i) - 1) * kPi / 6.0)).epsilon(1e-14));
    CHECK(c13.weights()[i] == doctest::Approx(kPi / 3.0).epsilon(1e-14));
  }

  const QuadratureRule gh(BasisFamily::hermite_fn(0), 80);
  const double v = gh.integrate([](double x) { return x * x; }, IntegrandMode::against_weight);
  CHECK(v == doctest::Approx(std::sqrt(kPi) / 2).epsilon(1e-13));
}

TEST_CASE("integrate in both modes") {
  const QuadratureRule leg(BasisFamily::legendre(0), 80);
  CHECK(leg.integrate([](double x) { return x * x; }, IntegrandMode::plain) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  const QuadratureRule c1(BasisFamily::chebyshev1(0), 80);
  CHECK(c1.integrate([](double) { return 1.0; }, IntegrandMode::against_weight) ==
        doctest::Approx(kPi).epsilon(1e-13));

  const QuadratureRule lag(BasisFamily::laguerre_fn(0), 80);
  CHECK(lag.integrate([](double x) { return x * x * x; }, IntegrandMode::against_weight) ==
        doctest::Approx(6.0).epsilon(1e-12));

  CHECK_THROWS_AS(
      (void)leg.integrate([](double) { return std::nan(""); }, IntegrandMode::plain),
      NumericalError);
}

TEST_CASE("exactness up to degree 2n-1") {
  for (int n : {5, 10, 20}) {
    for (const BasisFamily& f :
         {BasisFamily::legendre(0), BasisFamily::chebyshev1(0), BasisFamily::chebyshev2(0),
          BasisFamily::jacobi(0, 1.0, -0.5), BasisFamily::hermite_fn(0), BasisFamily::laguerre_fn(0)}) {
      const QuadratureRule rule(f, n);
      for (int d = 0; d <= 2 * n - 1; ++d) {
        double got = 0.0;
        for (int i = 0; i < n; ++i) got += rule.weights()[i] * std::pow(rule.nodes()[i], d);
        const double want = (f.family() == Family::jacobi)
                                ? jacobi_weight_moment(f.with_max_degree(d + 1), d)
                                : weight_moment(f.family(), d);
        CAPTURE(f.name());
        CAPTURE(n);
        CAPTURE(d);
        if (want == 0.0)
          CHECK(std::abs(got) < 1e-11 * weight_moment(f.family(), 0));
        else
          CHECK(std::abs(got - want) < 1e-11 * std::abs(want));
      }
    }
  }
}

TEST_CASE("rule invariants") {
  for (const BasisFamily& f :
       {BasisFamily::legendre(0), BasisFamily::chebyshev1(0), BasisFamily::chebyshev2(0),
        BasisFamily::jacobi(0, 1.0, -0.5), BasisFamily::hermite_fn(0), BasisFamily::laguerre_fn(0)}) {
    const QuadratureRule rule(f, 80);
    double sum = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
      CHECK(rule.weights()[i] > 0.0);
      CHECK(f.domain().interior(rule.nodes()[i]));
      if (i > 0) CHECK(rule.nodes()[i] > rule.nodes()[i - 1]);
      sum += rule.weights()[i];
    }
    CHECK(sum == doctest::Approx(f.weight_integral()).epsilon(1e-12));
  }
  CHECK_THROWS_AS(QuadratureRule(BasisFamily::legendre(0), 0), std::invalid_argument);
}
