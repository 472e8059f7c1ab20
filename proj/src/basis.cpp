#include "mpspec/basis.hpp"

#include <cmath>
#include <stdexcept>

#include "mpspec/errors.hpp"

namespace mpspec {

namespace {

double lbeta(double p, double q) { return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q); }

RecurrenceCoeffs legendre_rec(int N) {
  RecurrenceCoeffs r;
  r.a.assign(N + 1, 0.0);
  r.b.assign(N + 1, 0.0);
  r.c.assign(N + 1, 0.0);
  for (int k = 1; k <= N; ++k) {
    r.a[k] = (2.0 * k - 1.0) / k;
    r.c[k] = -(k - 1.0) / k;
  }
  return r;
}

RecurrenceCoeffs chebyshev_rec(int N, bool second_kind) {
  RecurrenceCoeffs r;
  r.a.assign(N + 1, 0.0);
  r.b.assign(N + 1, 0.0);
  r.c.assign(N + 1, 0.0);
  for (int k = 1; k <= N; ++k) {
    r.a[k] = (k == 1 && !second_kind) ? 1.0 : 2.0;
    r.c[k] = (k == 1) ? 0.0 : -1.0;
  }
  return r;
}

RecurrenceCoeffs jacobi_rec(int N, double al, double be) {
  RecurrenceCoeffs r;
  r.a.assign(N + 1, 0.0);
  r.b.assign(N + 1, 0.0);
  r.c.assign(N + 1, 0.0);
  if (N >= 1) {
    r.a[1] = 0.5 * (al + be + 2.0);
    r.b[1] = 0.5 * (al - be);
  }
  for (int k = 2; k <= N; ++k) {
    const double t = 2.0 * k + al + be;
    const double den = 2.0 * k * (k + al + be) * (t - 2.0);
    r.a[k] = (t - 1.0) * t * (t - 2.0) / den;
    r.b[k] = (t - 1.0) * (al * al - be * be) / den;
    r.c[k] = -2.0 * (k + al - 1.0) * (k + be - 1.0) * t / den;
  }
  return r;
}

RecurrenceCoeffs hermite_rec(int N) {
  // H_k = 2x H_{k-1} - 2(k-1) H_{k-2}
  RecurrenceCoeffs r;
  r.a.assign(N + 1, 0.0);
  r.b.assign(N + 1, 0.0);
  r.c.assign(N + 1, 0.0);
  for (int k = 1; k <= N; ++k) {
    r.a[k] = 2.0;
    r.c[k] = -2.0 * (k - 1.0);
  }
  return r;
}

RecurrenceCoeffs laguerre_rec(int N) {
  // L_k = ((2k-1-x)/k) L_{k-1} - ((k-1)/k) L_{k-2}
  RecurrenceCoeffs r;
  r.a.assign(N + 1, 0.0);
  r.b.assign(N + 1, 0.0);
  r.c.assign(N + 1, 0.0);
  for (int k = 1; k <= N; ++k) {
    r.a[k] = -1.0 / k;
    r.b[k] = (2.0 * k - 1.0) / k;
    r.c[k] = -(k - 1.0) / k;
  }
  return r;
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::legendre: return "legendre";
    case Family::chebyshev1: return "chebyshev1";
    case Family::chebyshev2: return "chebyshev2";
    case Family::jacobi: return "jacobi";
    case Family::hermite_fn: return "hermite";
    case Family::laguerre_fn: return "laguerre";
    case Family::custom: return "custom";
  }
  return "unknown";
}

Domain Domain::bounded(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("Domain: requires a < b");
  return {Kind::bounded, a, b};
}

bool Domain::contains(double x) const {
  switch (kind) {
    case Kind::bounded: return x >= a && x <= b;
    case Kind::half_line: return x >= 0.0;
    case Kind::real_line: return std::isfinite(x);
  }
  return false;
}

bool Domain::interior(double x) const {
  switch (kind) {
    case Kind::bounded: return x > a && x < b;
    case Kind::half_line: return x > 0.0;
    case Kind::real_line: return std::isfinite(x);
  }
  return false;
}

BasisFamily BasisFamily::legendre(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  BasisFamily f;
  f.family_ = Family::legendre;
  f.name_ = "legendre";
  f.domain_ = Domain::bounded(-1.0, 1.0);
  f.max_degree_ = max_degree;
  f.rec_ = legendre_rec(max_degree);
  f.norms_sq_.resize(max_degree + 1);
  for (int k = 0; k <= max_degree; ++k) f.norms_sq_[k] = 2.0 / (2.0 * k + 1.0);
  f.weight_integral_ = 2.0;
  return f;
}

BasisFamily BasisFamily::chebyshev1(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  BasisFamily f;
  f.family_ = Family::chebyshev1;
  f.name_ = "chebyshev1";
  f.domain_ = Domain::bounded(-1.0, 1.0);
  f.max_degree_ = max_degree;
  f.rec_ = chebyshev_rec(max_degree, false);
  f.norms_sq_.assign(max_degree + 1, kPi / 2.0);
  f.norms_sq_[0] = kPi;
  f.weight_integral_ = kPi;
  return f;
}

BasisFamily BasisFamily::chebyshev2(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  BasisFamily f;
  f.family_ = Family::chebyshev2;
  f.name_ = "chebyshev2";
  f.domain_ = Domain::bounded(-1.0, 1.0);
  f.max_degree_ = max_degree;
  f.rec_ = chebyshev_rec(max_degree, true);
  f.norms_sq_.assign(max_degree + 1, kPi / 2.0);
  f.weight_integral_ = kPi / 2.0;
  return f;
}

BasisFamily BasisFamily::jacobi(int max_degree, double alpha, double beta) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw std::invalid_argument("jacobi: alpha, beta > -1 required");
  BasisFamily f;
  f.family_ = Family::jacobi;
  f.name_ = "jacobi";
  f.domain_ = Domain::bounded(-1.0, 1.0);
  f.max_degree_ = max_degree;
  f.alpha_ = alpha;
  f.beta_ = beta;
  f.rec_ = jacobi_rec(max_degree, alpha, beta);
  f.norms_sq_.resize(max_degree + 1);
  for (int k = 0; k <= max_degree; ++k) {
    // 2^{a+b+1} Gamma(k+a+1) Gamma(k+b+1) / ((2k+a+b+1) Gamma(k+a+b+1) k!)
    const double lg = (alpha + beta + 1.0) * std::log(2.0) + std::lgamma(k + alpha + 1.0) +
                      std::lgamma(k + beta + 1.0) - std::lgamma(k + alpha + beta + 1.0) -
                      std::lgamma(k + 1.0);
    f.norms_sq_[k] = std::exp(lg) / (2.0 * k + alpha + beta + 1.0);
  }
  f.weight_integral_ = std::exp((alpha + beta + 1.0) * std::log(2.0) + lbeta(alpha + 1.0, beta + 1.0));
  return f;
}

BasisFamily BasisFamily::hermite_fn(int max_degree, double alpha) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  if (alpha != 0.0) throw std::invalid_argument("hermite_fn: only alpha = 0 is supported");
  BasisFamily f;
  f.family_ = Family::hermite_fn;
  f.name_ = "hermite";
  f.domain_ = Domain::real_line();
  f.max_degree_ = max_degree;
  f.symmetric_weighting_ = true;
  f.rec_ = hermite_rec(max_degree);
  f.norms_sq_.resize(max_degree + 1);
  double v = std::sqrt(kPi);
  for (int k = 0; k <= max_degree; ++k) {
    f.norms_sq_[k] = v;  // 2^k k! sqrt(pi)
    v *= 2.0 * (k + 1.0);
  }
  f.weight_integral_ = std::sqrt(kPi);
  return f;
}

BasisFamily BasisFamily::laguerre_fn(int max_degree, double alpha) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  if (alpha != 0.0) throw std::invalid_argument("laguerre_fn: only alpha = 0 is supported");
  BasisFamily f;
  f.family_ = Family::laguerre_fn;
  f.name_ = "laguerre";
  f.domain_ = Domain::half_line();
  f.max_degree_ = max_degree;
  f.symmetric_weighting_ = true;
  f.rec_ = laguerre_rec(max_degree);
  f.norms_sq_.assign(max_degree + 1, 1.0);
  f.weight_integral_ = 1.0;
  return f;
}

BasisFamily BasisFamily::custom(Domain domain, RecurrenceCoeffs rec, std::vector<double> norms_sq,
                                std::function<double(double)> weight, double weight_integral,
                                bool symmetric_weighting) {
  if (rec.a.empty() || rec.a.size() != rec.b.size() || rec.a.size() != rec.c.size())
    throw std::invalid_argument("custom family requires user-supplied recurrence coefficients");
  for (std::size_t k = 1; k < rec.a.size(); ++k)
    if (rec.a[k] == 0.0) throw std::invalid_argument("custom family: a_k must be nonzero for k >= 1");
  if (norms_sq.size() != rec.a.size())
    throw std::invalid_argument("custom family: norm table size mismatch");
  for (double nsq : norms_sq)
    if (!(nsq > 0.0)) throw std::invalid_argument("custom family: norms must be positive");
  if (!weight) throw std::invalid_argument("custom family requires a weight function");
  if (symmetric_weighting && domain.kind == Domain::Kind::bounded)
    throw std::invalid_argument("symmetric weighting requires an unbounded domain");
  BasisFamily f;
  f.family_ = Family::custom;
  f.name_ = "custom";
  f.domain_ = domain;
  f.max_degree_ = static_cast<int>(rec.a.size()) - 1;
  f.symmetric_weighting_ = symmetric_weighting;
  f.rec_ = std::move(rec);
  f.norms_sq_ = std::move(norms_sq);
  f.custom_weight_ = std::move(weight);
  f.weight_integral_ = weight_integral;
  return f;
}

BasisFamily BasisFamily::with_max_degree(int max_degree) const {
  switch (family_) {
    case Family::legendre: return legendre(max_degree);
    case Family::chebyshev1: return chebyshev1(max_degree);
    case Family::chebyshev2: return chebyshev2(max_degree);
    case Family::jacobi: return jacobi(max_degree, alpha_, beta_);
    case Family::hermite_fn: return hermite_fn(max_degree);
    case Family::laguerre_fn: return laguerre_fn(max_degree);
    case Family::custom: break;
  }
  if (max_degree > max_degree_)
    throw std::invalid_argument("custom family cannot be extended beyond its coefficient table");
  BasisFamily f = *this;
  f.max_degree_ = max_degree;
  f.rec_.a.resize(max_degree + 1);
  f.rec_.b.resize(max_degree + 1);
  f.rec_.c.resize(max_degree + 1);
  f.norms_sq_.resize(max_degree + 1);
  return f;
}

void BasisFamily::require_in_domain(double x) const {
  if (!domain_.contains(x)) throw std::domain_error(name_ + ": x outside domain");
}

double BasisFamily::weight(double x) const {
  require_in_domain(x);
  switch (family_) {
    case Family::legendre: return 1.0;
    case Family::chebyshev1:
      if (!domain_.interior(x)) throw std::domain_error("chebyshev1: weight singular at the endpoints");
      return 1.0 / std::sqrt(1.0 - x * x);
    case Family::chebyshev2: return std::sqrt(1.0 - x * x);
    case Family::jacobi:
      if ((x == 1.0 && alpha_ < 0.0) || (x == -1.0 && beta_ < 0.0))
        throw std::domain_error("jacobi: weight singular at this endpoint");
      return std::pow(1.0 - x, alpha_) * std::pow(1.0 + x, beta_);
    case Family::hermite_fn: return std::exp(-x * x);
    case Family::laguerre_fn: return std::exp(-x);
    case Family::custom: return custom_weight_(x);
  }
  return 0.0;
}

double BasisFamily::sqrt_weight(double x) const {
  switch (family_) {
    case Family::hermite_fn: return std::exp(-0.5 * x * x);
    case Family::laguerre_fn: return std::exp(-0.5 * x);
    default: return std::sqrt(weight(x));
  }
}

void BasisFamily::eval_all(double x, std::span<double> out) const {
  require_in_domain(x);
  const int N = max_degree_;
  if (out.size() < static_cast<std::size_t>(N + 1)) throw std::invalid_argument("eval_all: output too small");
  const double w12 = symmetric_weighting_ ? sqrt_weight(x) : 1.0;
  out[0] = w12;
  if (N >= 1) out[1] = (rec_.a[1] * x + rec_.b[1]) * w12;
  for (int k = 2; k <= N; ++k)
    out[k] = (rec_.a[k] * x + rec_.b[k]) * out[k - 1] + rec_.c[k] * out[k - 2];
}

std::vector<double> BasisFamily::eval_all(double x) const {
  std::vector<double> out(max_degree_ + 1);
  eval_all(x, out);
  return out;
}

void BasisFamily::eval_derivs(double x, std::span<double> val, std::span<double> d1,
                              std::span<double> d2) const {
  require_in_domain(x);
  const int N = max_degree_;
  // polynomial part and its derivatives via the differentiated recurrence
  std::vector<double> p(N + 1), q(N + 1, 0.0), r(N + 1, 0.0);
  p[0] = 1.0;
  if (N >= 1) {
    p[1] = rec_.a[1] * x + rec_.b[1];
    q[1] = rec_.a[1];
  }
  for (int k = 2; k <= N; ++k) {
    const double lin = rec_.a[k] * x + rec_.b[k];
    p[k] = lin * p[k - 1] + rec_.c[k] * p[k - 2];
    q[k] = rec_.a[k] * p[k - 1] + lin * q[k - 1] + rec_.c[k] * q[k - 2];
    r[k] = 2.0 * rec_.a[k] * q[k - 1] + lin * r[k - 1] + rec_.c[k] * r[k - 2];
  }
  if (!symmetric_weighting_) {
    for (int k = 0; k <= N; ++k) {
      val[k] = p[k];
      d1[k] = q[k];
      d2[k] = r[k];
    }
    return;
  }
  // members are p_k * omega^{1/2}; omega^{1/2} = e^{-x^2/2} or e^{-x/2}
  const double w = sqrt_weight(x);
  // g = (omega^{1/2})'/omega^{1/2}: -x for Hermite, -1/2 for Laguerre
  const double g = (family_ == Family::hermite_fn) ? -x : -0.5;
  const double gp = (family_ == Family::hermite_fn) ? -1.0 : 0.0;
  for (int k = 0; k <= N; ++k) {
    val[k] = p[k] * w;
    d1[k] = (q[k] + g * p[k]) * w;
    d2[k] = (r[k] + 2.0 * g * q[k] + (g * g + gp) * p[k]) * w;
  }
}

}  // namespace mpspec
