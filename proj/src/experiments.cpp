#include "mpspec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "mpspec/errors.hpp"

namespace mpspec {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double ls_slope(const std::vector<double>& lx, const std::vector<double>& ly) {
  const std::size_t n = lx.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double normalizer_opinion_init() {
  // c_0 such that <g0, 1> = 1; the integrand is a degree-38 polynomial
  static const double value = [] {
    const QuadratureRule rule(BasisFamily::legendre(0), 80);
    double m = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
      const double v = rule.nodes()[i];
      m += rule.weights()[i] *
           (std::pow(1.0 + v, 12) * std::pow(1.0 - v, 6) + std::pow(1.0 + v, 13) * std::pow(1.0 - v, 25));
    }
    return 1.0 / m;
  }();
  return value;
}

}  // namespace

TestFunction test_function_from_name(const std::string& name) {
  if (name == "bounded_osc") return TestFunction::bounded_osc;
  if (name == "hermite_bimodal") return TestFunction::hermite_bimodal;
  if (name == "laguerre_poly") return TestFunction::laguerre_poly;
  if (name == "lognormal") return TestFunction::lognormal;
  if (name == "fp_init_sym") return TestFunction::fp_init_sym;
  if (name == "fp_init_asym") return TestFunction::fp_init_asym;
  if (name == "opinion_init") return TestFunction::opinion_init;
  if (name == "callcenter_init") return TestFunction::callcenter_init;
  throw ConfigError("unknown test function: " + name);
}

std::string to_string(TestFunction id) {
  switch (id) {
    case TestFunction::bounded_osc: return "bounded_osc";
    case TestFunction::hermite_bimodal: return "hermite_bimodal";
    case TestFunction::laguerre_poly: return "laguerre_poly";
    case TestFunction::lognormal: return "lognormal";
    case TestFunction::fp_init_sym: return "fp_init_sym";
    case TestFunction::fp_init_asym: return "fp_init_asym";
    case TestFunction::opinion_init: return "opinion_init";
    case TestFunction::callcenter_init: return "callcenter_init";
  }
  return "unknown";
}

std::function<double(double)> test_function(TestFunction id) {
  switch (id) {
    case TestFunction::bounded_osc:
      return [](double x) { return std::sin(kTwoPi * x) + x * x * std::cos(kTwoPi * x); };
    case TestFunction::hermite_bimodal:
      return [](double x) {
        return 3.0 / std::sqrt(kTwoPi) * std::exp(-0.5 * (x + 3.0) * (x + 3.0)) -
               1.0 / std::sqrt(kPi) * std::exp(-(x - 2.0) * (x - 2.0));
      };
    case TestFunction::laguerre_poly:
      return [](double x) { return (x * x * x - 2.0 * x + std::sin(x)) * std::exp(-x); };
    case TestFunction::lognormal:
      return [](double x) {
        const double sigma = 0.2, mu = std::log(40.0) - 0.2;
        const double d = std::log(x) - mu;
        return std::exp(-d * d / (2.0 * sigma)) / (std::sqrt(kTwoPi * sigma) * x);
      };
    case TestFunction::fp_init_sym:
      return [](double v) {
        return (std::exp(-(v + 2.0) * (v + 2.0)) + std::exp(-(v - 2.0) * (v - 2.0))) / std::sqrt(kPi);
      };
    case TestFunction::fp_init_asym:
      return [](double v) {
        return (std::exp(-(v + 3.0) * (v + 3.0)) + std::exp(-v * v)) / std::sqrt(kPi);
      };
    case TestFunction::opinion_init:
      return [c0 = normalizer_opinion_init()](double v) {
        return c0 * (std::pow(1.0 + v, 12) * std::pow(1.0 - v, 6) +
                     std::pow(1.0 + v, 13) * std::pow(1.0 - v, 25));
      };
    case TestFunction::callcenter_init:
      // unit-mass scaling: int (v^3 - 2v + sin v) e^{-v} dv = 6 - 2 + 1/2
      return [](double v) {
        return (v * v * v - 2.0 * v + std::sin(v)) * std::exp(-v) / 4.5;
      };
  }
  throw ConfigError("unknown test function id");
}

namespace {

BasisFamily make_basis(const RunConfig& cfg, int degree) {
  if (cfg.basis == "legendre") return BasisFamily::legendre(degree);
  if (cfg.basis == "chebyshev1") return BasisFamily::chebyshev1(degree);
  if (cfg.basis == "chebyshev2") return BasisFamily::chebyshev2(degree);
  if (cfg.basis == "jacobi") return BasisFamily::jacobi(degree, cfg.jacobi_alpha, cfg.jacobi_beta);
  if (cfg.basis == "hermite") return BasisFamily::hermite_fn(degree);
  if (cfg.basis == "laguerre") return BasisFamily::laguerre_fn(degree);
  throw ConfigError("unknown basis: " + cfg.basis);
}

/// Plain-L2 distance between f and a reconstruction, both sampled on the
/// moment rule of the family.
double plain_l2_error(const std::function<double(double)>& f, const SpectralCoeffs& coeffs,
                      int quad_points) {
  const QuadratureRule rule = moment_rule(coeffs.basis, quad_points);
  const std::vector<double> rec = reconstruct(coeffs, rule.nodes());
  double s = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double r = f(rule.nodes()[i]) - rec[i];
    s += rule.plain_weights()[i] * r * r;
  }
  return std::sqrt(s);
}

void validate_common(const RunConfig& cfg) {
  if (cfg.modes.empty()) throw ConfigError("at least one mode count is required");
  for (int m : cfg.modes)
    if (m < 1) throw ConfigError("mode counts must be >= 1");
  if (cfg.constraints < 0) throw ConfigError("constraints must be >= 0");
  if (cfg.quad_points < 1) throw ConfigError("quad-points must be >= 1");
  if (!(cfg.dt > 0.0)) throw ConfigError("dt must be positive");
  if (cfg.t_final < 0.0) throw ConfigError("t-final must be >= 0");
  if (cfg.tf_accuracy < 0.0) throw ConfigError("tf-accuracy must be >= 0");
}

}  // namespace

std::vector<std::string> ErrorTable::header() const {
  std::vector<std::string> h{"N", "err_l2_std"};
  for (int q = 0; q <= Q; ++q) h.push_back("err_m" + std::to_string(q) + "_std");
  h.push_back("err_l2_con");
  for (int q = 0; q <= Q; ++q) h.push_back("err_m" + std::to_string(q) + "_con");
  return h;
}

ApproxReport run_approximation(const RunConfig& cfg) {
  validate_common(cfg);
  const TestFunction id = test_function_from_name(cfg.test);
  switch (id) {
    case TestFunction::bounded_osc:
    case TestFunction::hermite_bimodal:
    case TestFunction::laguerre_poly:
    case TestFunction::lognormal: break;
    default: throw ConfigError("test '" + cfg.test + "' is not an approximation test");
  }
  const auto f = test_function(id);
  const int Q = cfg.constraints;

  ApproxReport rep;
  rep.table.Q = Q;
  std::vector<double> log_modes, log_l2, log_mom, log_l2_con;
  for (int m : cfg.modes) {
    const int degree = m - 1;
    const BasisFamily basis = make_basis(cfg, degree);
    const MomentMatrix mm = MomentMatrix::standard(basis, Q, degree, cfg.quad_points);
    const ConstraintOperator co(basis, mm, degree, Q);
    const SpectralCoeffs c_std = project(f, basis, degree, cfg.quad_points);
    const Eigen::VectorXd targets = moments_of_function(f, basis, Q, cfg.quad_points);
    const SpectralCoeffs c_con = correct_given_targets(c_std, targets, co);

    const Eigen::VectorXd m_std = moments_of(c_std, mm);
    const Eigen::VectorXd m_con = moments_of(c_con, mm);

    std::vector<double> row_std{plain_l2_error(f, c_std, cfg.quad_points)};
    std::vector<double> row_con{plain_l2_error(f, c_con, cfg.quad_points)};
    for (int q = 0; q <= Q; ++q) {
      row_std.push_back(std::abs(targets[q] - m_std[q]));
      row_con.push_back(std::abs(targets[q] - m_con[q]));
    }
    rep.table.modes.push_back(m);
    rep.table.std_rows.push_back(row_std);
    rep.table.con_rows.push_back(row_con);
    rep.conditioning.push_back({m, co.cond_M(), co.spectral_radius_Minv()});

    log_modes.push_back(std::log(m));
    log_l2.push_back(std::log(std::max(row_std[0], 1e-300)));
    log_l2_con.push_back(std::log(std::max(row_con[0], 1e-300)));
    log_mom.push_back(std::log(std::max((targets - m_std).norm(), 1e-300)));
  }

  if (cfg.modes.size() >= 2) {
    rep.slope_solution = -ls_slope(log_modes, log_l2);
    rep.slope_moments = -ls_slope(log_modes, log_mom);
    if (id == TestFunction::lognormal) {
      rep.has_order_fit = true;
      rep.con_l2_order_fit = -ls_slope(log_modes, log_l2_con);
    }
  }
  return rep;
}

namespace {

struct ModelRun {
  GalerkinOperator A, Ac;
  Eigen::VectorXd c_std0, c_con0;
  Eigen::MatrixXd monitor_rows;                         // m0..m2
  Eigen::Vector3d mom_ref;                              // moments of the initial datum itself
  std::function<double(const Eigen::VectorXd&)> dist;   // distance to steady state
  std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)> pair_l2;  // vs reference (self basis)
  MomentMatrix mm{Eigen::MatrixXd::Zero(1, 1), BasisFamily::legendre(0)};
  ConditioningRow cond;
};

/// Distance functional: plain-L2 norm of (target_values - reconstruction) on
/// the given nodes.
std::function<double(const Eigen::VectorXd&)> distance_to_values(Eigen::MatrixXd basis_values,
                                                                 Eigen::VectorXd target,
                                                                 Eigen::VectorXd plain_w) {
  return [B = std::move(basis_values), s = std::move(target),
          w = std::move(plain_w)](const Eigen::VectorXd& c) {
    const Eigen::VectorXd r = s - B.transpose() * c;
    return std::sqrt(r.cwiseAbs2().dot(w));
  };
}

ModelRun setup_fp(const RunConfig& cfg, int modes) {
  const int degree = modes - 1;
  const BasisFamily basis = BasisFamily::hermite_fn(degree);
  const auto f0 = test_function(cfg.asymmetric ? TestFunction::fp_init_asym : TestFunction::fp_init_sym);

  const Eigen::VectorXd m0 = moments_of_function(f0, basis, 2, cfg.quad_points);
  const double rho0 = m0[0];
  const double mu0 = m0[1] / rho0;
  const double T0 = m0[2] / rho0 - mu0 * mu0;

  ModelRun run;
  run.A = fp_hermite_operator(degree, mu0, T0);
  const MomentMatrix mm = MomentMatrix::standard(basis, 3, degree, cfg.quad_points);
  const ConstraintOperator co(basis, mm, degree, 3);
  const std::vector<int> qs{0, 1, 2, 3};
  run.Ac = constrain(run.A, co, qs);
  run.cond = {modes, co.cond_M(), co.spectral_radius_Minv()};

  const SpectralCoeffs cs = project(f0, basis, degree, cfg.quad_points);
  const Eigen::VectorXd targets = moments_of_function(f0, basis, 3, cfg.quad_points);
  run.c_std0 = cs.c;
  run.c_con0 = co.correct(cs.c, targets);
  run.mm = mm;
  run.monitor_rows = mm.matrix().topRows(3);
  run.mom_ref = targets.head(3);

  const QuadratureRule rule(basis, cfg.quad_points);
  const int n = rule.size();
  Eigen::MatrixXd B(degree + 1, n);
  std::vector<double> col(degree + 1);
  for (int i = 0; i < n; ++i) {
    basis.eval_all(rule.nodes()[i], col);
    B.col(i) = Eigen::Map<const Eigen::VectorXd>(col.data(), degree + 1);
  }
  const SteadyState steady = SteadyState::maxwellian(rho0, mu0, T0);
  Eigen::VectorXd sv(n), pw(n);
  for (int i = 0; i < n; ++i) {
    sv[i] = steady(rule.nodes()[i]);
    pw[i] = rule.plain_weights()[i];
  }
  run.dist = distance_to_values(B, sv, pw);
  run.pair_l2 = [B, pw](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const Eigen::VectorXd r = B.transpose() * (a - b);
    return std::sqrt(r.cwiseAbs2().dot(pw));
  };
  return run;
}

ModelRun setup_opinion(const RunConfig& cfg, int modes) {
  const double m_op = 0.0, lambda_op = 0.1;
  const BasisFamily parent = BasisFamily::legendre(modes);
  const CompositeBasis cb(parent, modes);
  const auto g0 = test_function(TestFunction::opinion_init);

  ModelRun run;
  run.A = opinion_operator(cb, m_op, lambda_op, cfg.quad_points);
  const ConstraintOperator co = cb.constraint_operator(0, cfg.quad_points);
  const std::vector<int> qs{0};
  run.Ac = constrain(run.A, co, qs);
  run.cond = {modes, co.cond_M(), co.spectral_radius_Minv()};

  run.c_std0 = cb.project(g0, cfg.quad_points);
  const Eigen::VectorXd targets = moments_of_function(g0, parent, 0, cfg.quad_points);
  run.c_con0 = co.correct(run.c_std0, targets);
  run.mm = cb.moment_matrix(3, cfg.quad_points);
  run.monitor_rows = run.mm.matrix().topRows(3);
  run.mom_ref = moments_of_function(g0, parent, 2, cfg.quad_points);

  const QuadratureRule rule = moment_rule(parent, cfg.quad_points);
  const int n = rule.size();
  const Eigen::MatrixXd B = cb.values_at(rule.nodes());
  const SteadyState steady = SteadyState::opinion(m_op, lambda_op, cfg.quad_points);
  Eigen::VectorXd sv(n), pw(n);
  for (int i = 0; i < n; ++i) {
    sv[i] = steady(rule.nodes()[i]);
    pw[i] = rule.plain_weights()[i];
  }
  run.dist = distance_to_values(B, sv, pw);
  run.pair_l2 = [B, pw](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const Eigen::VectorXd r = B.transpose() * (a - b);
    return std::sqrt(r.cwiseAbs2().dot(pw));
  };
  return run;
}

ModelRun setup_callcenter(const RunConfig& cfg, int modes) {
  const double lambda = 0.5, gamma = 0.9, v_L = 40.0;
  const double sigma = lambda / gamma;
  const int degree = modes - 1;
  const BasisFamily basis = BasisFamily::laguerre_fn(degree);
  const SteadyState steady = SteadyState::lognormal(sigma, std::log(v_L) - sigma);
  const auto h0 = test_function(TestFunction::callcenter_init);
  const auto pert0 = [h0, steady](double v) { return h0(v) - steady(v); };

  ModelRun run;
  run.A = callcenter_operator(basis, degree, lambda, gamma, v_L, cfg.quad_points);
  const MomentMatrix mm = MomentMatrix::standard(basis, 3, degree, cfg.quad_points);
  const ConstraintOperator co(basis, mm, degree, 0);
  const std::vector<int> qs{0};
  run.Ac = constrain(run.A, co, qs);
  run.cond = {modes, co.cond_M(), co.spectral_radius_Minv()};

  const SpectralCoeffs cs = project(pert0, basis, degree, cfg.quad_points);
  const Eigen::VectorXd targets = moments_of_function(pert0, basis, 0, cfg.quad_points);
  run.c_std0 = cs.c;
  run.c_con0 = co.correct(cs.c, targets);
  run.mm = mm;
  run.monitor_rows = mm.matrix().topRows(3);
  run.mom_ref = moments_of_function(pert0, basis, 2, cfg.quad_points);

  const QuadratureRule rule(basis, cfg.quad_points);
  const int n = rule.size();
  Eigen::MatrixXd B(degree + 1, n);
  std::vector<double> col(degree + 1);
  for (int i = 0; i < n; ++i) {
    basis.eval_all(rule.nodes()[i], col);
    B.col(i) = Eigen::Map<const Eigen::VectorXd>(col.data(), degree + 1);
  }
  Eigen::VectorXd pw(n);
  for (int i = 0; i < n; ++i) pw[i] = rule.plain_weights()[i];
  // micro-macro: distance of h to h_inf is the norm of the perturbation
  run.dist = distance_to_values(B, Eigen::VectorXd::Zero(n), pw);
  run.pair_l2 = [B, pw](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const Eigen::VectorXd r = B.transpose() * (a - b);
    return std::sqrt(r.cwiseAbs2().dot(pw));
  };
  return run;
}

ModelRun setup_model(const RunConfig& cfg, int modes) {
  if (cfg.test == "fp") return setup_fp(cfg, modes);
  if (cfg.test == "opinion") return setup_opinion(cfg, modes);
  if (cfg.test == "callcenter") return setup_callcenter(cfg, modes);
  throw ConfigError("unknown model: " + cfg.test);
}

PairedTrajectory paired_from(const Trajectory& ts, const Trajectory& tc, int modes,
                             const Eigen::Vector3d& mom_ref) {
  PairedTrajectory out;
  out.modes = modes;
  const std::size_t n = ts.monitors.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.t.push_back(ts.monitors[i].t);
    out.dist_std.push_back(ts.monitors[i].steady_distance);
    out.dist_con.push_back(tc.monitors[i].steady_distance);
    std::array<double, 3> ds{}, dc{};
    for (int q = 0; q < 3; ++q) {
      ds[q] = std::abs(ts.monitors[i].moments[q] - mom_ref[q]);
      dc[q] = std::abs(tc.monitors[i].moments[q] - mom_ref[q]);
    }
    out.drift_std.push_back(ds);
    out.drift_con.push_back(dc);
  }
  return out;
}

}  // namespace

PdeReport run_pde(const RunConfig& cfg) {
  validate_common(cfg);
  if (cfg.test != "fp" && cfg.test != "opinion" && cfg.test != "callcenter")
    throw ConfigError("unknown model: " + cfg.test);
  if (cfg.asymmetric && cfg.test != "fp") throw ConfigError("--asymmetric applies to the fp model only");
  const int min_modes = (cfg.test == "opinion") ? 3 : ((cfg.test == "fp") ? 3 : 1);
  for (int m : cfg.modes)
    if (m < min_modes)
      throw ConfigError("model '" + cfg.test + "' needs at least " + std::to_string(min_modes) + " modes");

  PdeReport rep;
  rep.accuracy.Q = (cfg.test == "fp") ? 3 : 0;

  // long-time trajectories with monitors
  std::vector<ModelRun> runs;
  for (int m : cfg.modes) {
    ModelRun run = setup_model(cfg, m);
    MonitorConfig mon;
    mon.moment_rows = &run.monitor_rows;
    mon.steady_distance = run.dist;
    const Trajectory ts = integrate(run.A, run.c_std0, cfg.t_final, cfg.dt, 100, mon);
    const Trajectory tc = integrate(run.Ac, run.c_con0, cfg.t_final, cfg.dt, 100, mon);
    rep.trajectories.push_back(paired_from(ts, tc, m, run.mom_ref));
    rep.conditioning.push_back(run.cond);
    runs.push_back(std::move(run));
  }

  // accuracy at tf_accuracy against the largest-mode run of the same method
  const std::size_t ref = std::distance(cfg.modes.begin(),
                                        std::max_element(cfg.modes.begin(), cfg.modes.end()));
  std::vector<Eigen::VectorXd> at_tf_std, at_tf_con;
  for (const ModelRun& run : runs) {
    at_tf_std.push_back(integrate(run.A, run.c_std0, cfg.tf_accuracy, cfg.dt, 1 << 30).snapshots.back());
    at_tf_con.push_back(integrate(run.Ac, run.c_con0, cfg.tf_accuracy, cfg.dt, 1 << 30).snapshots.back());
  }
  const int Q = rep.accuracy.Q;
  const Eigen::VectorXd mref_std = moments_of(at_tf_std[ref], runs[ref].mm).head(Q + 1);
  const Eigen::VectorXd mref_con = moments_of(at_tf_con[ref], runs[ref].mm).head(Q + 1);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    // reconstruct both on the reference grid (same family, so the reference
    // pair functional applies to padded coefficients)
    const auto pad = [&](const Eigen::VectorXd& v) {
      Eigen::VectorXd p = Eigen::VectorXd::Zero(runs[ref].c_std0.size());
      p.head(v.size()) = v;
      return p;
    };
    std::vector<double> row_std{runs[ref].pair_l2(pad(at_tf_std[i]), at_tf_std[ref])};
    std::vector<double> row_con{runs[ref].pair_l2(pad(at_tf_con[i]), at_tf_con[ref])};
    const Eigen::VectorXd mi_std = moments_of(at_tf_std[i], runs[i].mm).head(Q + 1);
    const Eigen::VectorXd mi_con = moments_of(at_tf_con[i], runs[i].mm).head(Q + 1);
    for (int q = 0; q <= Q; ++q) {
      row_std.push_back(std::abs(mi_std[q] - mref_std[q]));
      row_con.push_back(std::abs(mi_con[q] - mref_con[q]));
    }
    rep.accuracy.modes.push_back(cfg.modes[i]);
    rep.accuracy.std_rows.push_back(row_std);
    rep.accuracy.con_rows.push_back(row_con);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// report emission

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  return out;
}

nlohmann::json table_json(const ErrorTable& table) {
  const auto header = table.header();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < table.modes.size(); ++i) {
    nlohmann::json row;
    row[header[0]] = table.modes[i];
    std::size_t h = 1;
    for (double v : table.std_rows[i]) row[header[h++]] = v;
    for (double v : table.con_rows[i]) row[header[h++]] = v;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void emit_error_table(const ErrorTable& table, const std::string& path, OutputFormat format,
                      const ApproxReport* extras) {
  std::ofstream out = open_out(path);
  if (format == OutputFormat::csv) {
    const auto header = table.header();
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (std::size_t i = 0; i < table.modes.size(); ++i) {
      out << table.modes[i];
      for (double v : table.std_rows[i]) out << "," << fmt(v);
      for (double v : table.con_rows[i]) out << "," << fmt(v);
      out << "\n";
    }
    return;
  }
  nlohmann::json j;
  j["rows"] = table_json(table);
  if (extras) {
    nlohmann::json cond = nlohmann::json::array();
    for (const auto& c : extras->conditioning)
      cond.push_back({{"N", c.modes}, {"cond_M", c.cond_M}, {"rho_Minv", c.spectral_radius_Minv}});
    j["conditioning"] = std::move(cond);
    j["slope_solution"] = extras->slope_solution;
    j["slope_moments"] = extras->slope_moments;
    if (extras->has_order_fit) j["con_l2_order_fit"] = extras->con_l2_order_fit;
  }
  out << j.dump(2) << "\n";
}

void emit_trajectory(const PairedTrajectory& traj, const std::string& path, OutputFormat format) {
  static const char* header[] = {"t",           "dist_steady_std", "dist_steady_con",
                                 "drift_m0_std", "drift_m0_con",    "drift_m1_std",
                                 "drift_m1_con", "drift_m2_std",    "drift_m2_con"};
  std::ofstream out = open_out(path);
  if (format == OutputFormat::csv) {
    for (std::size_t i = 0; i < 9; ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
      out << fmt(traj.t[i]) << "," << fmt(traj.dist_std[i]) << "," << fmt(traj.dist_con[i]);
      for (int q = 0; q < 3; ++q)
        out << "," << fmt(traj.drift_std[i][q]) << "," << fmt(traj.drift_con[i][q]);
      out << "\n";
    }
    return;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < traj.t.size(); ++i) {
    nlohmann::json row;
    row[header[0]] = traj.t[i];
    row[header[1]] = traj.dist_std[i];
    row[header[2]] = traj.dist_con[i];
    for (int q = 0; q < 3; ++q) {
      row[header[3 + 2 * q]] = traj.drift_std[i][q];
      row[header[4 + 2 * q]] = traj.drift_con[i][q];
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  j["N"] = traj.modes;
  j["rows"] = std::move(rows);
  out << j.dump(2) << "\n";
}

void emit_pde_report(const PdeReport& report, const std::string& out_dir, OutputFormat format) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw ConfigError("cannot create output directory: " + out_dir);
  const std::string ext = (format == OutputFormat::csv) ? ".csv" : ".json";
  emit_error_table(report.accuracy, (fs::path(out_dir) / ("accuracy" + ext)).string(), format);
  for (const auto& traj : report.trajectories)
    emit_trajectory(traj, (fs::path(out_dir) / ("trajectory_N" + std::to_string(traj.modes) + ext)).string(),
                    format);
}

}  // namespace mpspec
