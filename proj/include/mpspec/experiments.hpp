#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "mpspec/timestepper.hpp"

namespace mpspec {

enum class TestFunction {
  bounded_osc,
  hermite_bimodal,
  laguerre_poly,
  lognormal,
  fp_init_sym,
  fp_init_asym,
  opinion_init,
  callcenter_init,
};

TestFunction test_function_from_name(const std::string& name);
std::string to_string(TestFunction id);
std::function<double(double)> test_function(TestFunction id);

enum class OutputFormat { csv, json };

/// Shared configuration for the approx and pde harnesses. The mode counts
/// follow the paper's table convention: a run with N modes truncates at
/// degree N-1.
struct RunConfig {
  std::string test;   // approx: test function id; pde: model name
  std::string basis;  // approx only
  double jacobi_alpha = 1.0;
  double jacobi_beta = -0.5;
  std::vector<int> modes;
  int constraints = 3;  // Q
  int quad_points = 80;
  double dt = 1e-4;
  double t_final = 5.0;
  double tf_accuracy = 0.1;
  bool asymmetric = false;
  std::string out;
  OutputFormat format = OutputFormat::csv;
};

/// Per-N rows of L2 and moment errors, standard and constrained columns.
struct ErrorTable {
  int Q = 3;
  std::vector<int> modes;
  std::vector<std::vector<double>> std_rows;  // each: [err_l2, err_m0..err_mQ]
  std::vector<std::vector<double>> con_rows;

  std::vector<std::string> header() const;
};

struct ConditioningRow {
  int modes = 0;
  double cond_M = 0.0;
  double spectral_radius_Minv = 0.0;
};

struct ApproxReport {
  ErrorTable table;
  std::vector<ConditioningRow> conditioning;
  bool has_order_fit = false;
  double con_l2_order_fit = 0.0;  // lognormal case
  // Hypothesis check, reported only: log-log slopes of ||U - U_N||_2 and ||f - f_N||_2.
  double slope_moments = 0.0;
  double slope_solution = 0.0;
};

ApproxReport run_approximation(const RunConfig& cfg);

/// Merged standard/constrained monitor table of one long-time run.
struct PairedTrajectory {
  int modes = 0;
  std::vector<double> t;
  std::vector<double> dist_std, dist_con;
  std::vector<std::array<double, 3>> drift_std, drift_con;  // m0, m1, m2
};

struct PdeReport {
  ErrorTable accuracy;  // at tf_accuracy, vs the largest-mode run of the same method
  std::vector<PairedTrajectory> trajectories;
  std::vector<ConditioningRow> conditioning;
};

PdeReport run_pde(const RunConfig& cfg);

// ---- report emission (CSV with pinned headers, or JSON with the same field names)

void emit_error_table(const ErrorTable& table, const std::string& path, OutputFormat format,
                      const ApproxReport* extras = nullptr);
void emit_trajectory(const PairedTrajectory& traj, const std::string& path, OutputFormat format);

/// Writes accuracy.{csv,json} and trajectory_N<modes>.{csv,json} under out_dir.
void emit_pde_report(const PdeReport& report, const std::string& out_dir, OutputFormat format);

}  // namespace mpspec
