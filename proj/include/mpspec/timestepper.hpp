#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "mpspec/operators.hpp"

namespace mpspec {

struct MonitorRecord {
  double t = 0.0;
  Eigen::VectorXd moments;      // empty unless moment rows were supplied
  double steady_distance = 0.0;  // 0 unless a distance functional was supplied
};

struct MonitorConfig {
  const Eigen::MatrixXd* moment_rows = nullptr;  // (Q+1) x (N+1)
  std::function<double(const Eigen::VectorXd&)> steady_distance;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> snapshots;
  std::vector<MonitorRecord> monitors;
};

/// One classical RK4 stage; for linear A this is the degree-4 Taylor
/// polynomial of exp(dt A) applied to c.
Eigen::VectorXd rk4_step(const GalerkinOperator& op, const Eigen::VectorXd& c, double dt);

/// Fixed-step RK4 over [0, t_final], recording snapshots and monitors every
/// monitor_stride steps (t = 0 included; the final step is recorded even when
/// it is not a stride multiple).
Trajectory integrate(const GalerkinOperator& op, const Eigen::VectorXd& c0, double t_final, double dt,
                     int monitor_stride = 100, const MonitorConfig& monitors = {});

}  // namespace mpspec
