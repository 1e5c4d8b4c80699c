#include "ctrnn/dynamics.hpp"

#include <cmath>
#include <cstddef>

namespace ctrnn {

void validate(const NetworkParams& p) {
  if (p.n < 1) throw std::invalid_argument("network: n must be at least 1");
  if (static_cast<int>(p.tau.size()) != p.n)
    throw std::invalid_argument("network: tau must have length n");
  if (static_cast<int>(p.theta.size()) != p.n)
    throw std::invalid_argument("network: theta must have length n");
  if (static_cast<int>(p.inputs.size()) != p.n)
    throw std::invalid_argument("network: inputs must have length n");
  if (static_cast<int>(p.weights.size()) != p.n)
    throw std::invalid_argument("network: weights must be n x n");
  for (const auto& row : p.weights)
    if (static_cast<int>(row.size()) != p.n)
      throw std::invalid_argument("network: weights must be n x n");
  for (double t : p.tau)
    if (!(t > 0.0))
      throw std::invalid_argument("network: every tau entry must be positive");
}

double relu(double z) { return std::max(0.0, z); }

std::vector<double> vector_field(const NetworkParams& p, const State& s) {
  if (static_cast<int>(s.y.size()) != p.n)
    throw std::invalid_argument("vector_field: state dimension does not match network");
  std::vector<double> dy(p.n);
  for (int i = 0; i < p.n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < p.n; ++j)
      acc += p.weights[j][i] * relu(s.y[j] + p.theta[j]);
    dy[i] = (-s.y[i] + acc + p.inputs[i]) / p.tau[i];
  }
  return dy;
}

Regime regime(const NetworkParams& p, const State& s) {
  if (p.n != 2) throw std::invalid_argument("regime: defined for n == 2 only");
  if (s.y.size() != 2)
    throw std::invalid_argument("regime: state dimension does not match network");
  const bool a1 = s.y[0] + p.theta[0] >= 0.0;
  const bool a2 = s.y[1] + p.theta[1] >= 0.0;
  if (a1 && a2) return Regime::ActiveActive;
  if (!a1 && !a2) return Regime::InactiveInactive;
  return Regime::Mixed;
}

Trajectory integrate_rk4(const NetworkParams& p, const State& y0,
                         double t_end, double dt) {
  validate(p);
  if (static_cast<int>(y0.y.size()) != p.n)
    throw std::invalid_argument("integrate_rk4: state dimension does not match network");
  if (!(dt > 0.0)) throw std::invalid_argument("integrate_rk4: dt must be positive");
  if (!(dt <= t_end))
    throw std::invalid_argument("integrate_rk4: dt must not exceed t_end");

  const long n_steps = std::lround(t_end / dt);
  Trajectory traj;
  traj.step = dt;
  traj.times.reserve(n_steps + 1);
  traj.states.reserve(n_steps + 1);

  State s = y0;
  traj.times.push_back(s.t);
  traj.states.push_back(s);

  State stage;
  stage.y.resize(p.n);
  for (long step = 1; step <= n_steps; ++step) {
    const std::vector<double> k1 = vector_field(p, s);
    for (int i = 0; i < p.n; ++i) stage.y[i] = s.y[i] + 0.5 * dt * k1[i];
    const std::vector<double> k2 = vector_field(p, stage);
    for (int i = 0; i < p.n; ++i) stage.y[i] = s.y[i] + 0.5 * dt * k2[i];
    const std::vector<double> k3 = vector_field(p, stage);
    for (int i = 0; i < p.n; ++i) stage.y[i] = s.y[i] + dt * k3[i];
    const std::vector<double> k4 = vector_field(p, stage);

    for (int i = 0; i < p.n; ++i)
      s.y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    s.t = y0.t + static_cast<double>(step) * dt;  // anchored, no accumulation drift

    for (double v : s.y)
      if (!std::isfinite(v))
        throw DivergenceError(s.t, "integrate_rk4: non-finite state at t = " +
                                       std::to_string(s.t));
    traj.times.push_back(s.t);
    traj.states.push_back(s);
  }
  return traj;
}

State decoupled_closed_form(const NetworkParams& p, const State& y0, double t) {
  validate(p);
  if (p.n != 2)
    throw std::invalid_argument("decoupled_closed_form: defined for n == 2 only");
  if (regime(p, y0) != Regime::InactiveInactive)
    throw std::invalid_argument(
        "decoupled_closed_form: initial state is not in the inactive regime");
  for (int i = 0; i < 2; ++i)
    if (p.inputs[i] + p.theta[i] > 0.0)
      throw std::invalid_argument(
          "decoupled_closed_form: requires inputs[i] + theta[i] <= 0, "
          "otherwise the trajectory leaves the inactive regime");
  State out;
  out.t = t;
  out.y.resize(2);
  for (int i = 0; i < 2; ++i) {
    const double k = y0.y[i] - p.inputs[i];
    out.y[i] = p.inputs[i] + k * std::exp(-(t - y0.t) / p.tau[i]);
  }
  return out;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::ActiveActive: return "active-active";
    case Regime::InactiveInactive: return "inactive-inactive";
    case Regime::Mixed: return "mixed";
  }
  return "?";
}

}  // namespace ctrnn
