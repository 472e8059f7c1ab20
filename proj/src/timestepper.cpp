#include "mpspec/timestepper.hpp"

#include <cmath>
#include <stdexcept>

#include "mpspec/errors.hpp"

namespace mpspec {

namespace {

void rk4_inplace(const Eigen::MatrixXd& A, Eigen::VectorXd& c, double dt, Eigen::VectorXd& k1,
                 Eigen::VectorXd& k2, Eigen::VectorXd& k3, Eigen::VectorXd& k4) {
  k1.noalias() = A * c;
  k2.noalias() = A * (c + 0.5 * dt * k1);
  k3.noalias() = A * (c + 0.5 * dt * k2);
  k4.noalias() = A * (c + dt * k3);
  c += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Eigen::VectorXd rk4_step(const GalerkinOperator& op, const Eigen::VectorXd& c, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt > 0 required");
  if (c.size() != op.size()) throw std::invalid_argument("rk4_step: dimension mismatch");
  Eigen::VectorXd out = c, k1, k2, k3, k4;
  rk4_inplace(op.A, out, dt, k1, k2, k3, k4);
  if (!out.allFinite()) throw BlowUpError(0);
  return out;
}

Trajectory integrate(const GalerkinOperator& op, const Eigen::VectorXd& c0, double t_final, double dt,
                     int monitor_stride, const MonitorConfig& monitors) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt > 0 required");
  if (t_final < 0.0) throw std::invalid_argument("integrate: t_final >= 0 required");
  if (monitor_stride < 1) throw std::invalid_argument("integrate: monitor_stride >= 1 required");
  if (c0.size() != op.size()) throw std::invalid_argument("integrate: dimension mismatch");

  const long n_steps = std::lround(t_final / dt);
  Trajectory traj;
  Eigen::VectorXd c = c0, k1, k2, k3, k4;

  auto record = [&](long step) {
    traj.times.push_back(step * dt);
    traj.snapshots.push_back(c);
    MonitorRecord rec;
    rec.t = step * dt;
    if (monitors.moment_rows) rec.moments = (*monitors.moment_rows) * c;
    if (monitors.steady_distance) rec.steady_distance = monitors.steady_distance(c);
    traj.monitors.push_back(std::move(rec));
  };

  record(0);
  for (long step = 1; step <= n_steps; ++step) {
    rk4_inplace(op.A, c, dt, k1, k2, k3, k4);
    if (!c.allFinite()) throw BlowUpError(step);
    if (step % monitor_stride == 0 || step == n_steps) record(step);
  }
  return traj;
}

}  // namespace mpspec
