#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ctrnn {

// Full CTRNN definition. weights[j][i] couples source node j into node i,
// so row j of the matrix lists the outgoing weights of node j.
struct NetworkParams {
  int n = 0;
  std::vector<double> tau;
  std::vector<std::vector<double>> weights;
  std::vector<double> theta;
  std::vector<double> inputs;
};

struct State {
  std::vector<double> y;
  double t = 0.0;
};

// Fixed-step trajectory; times[k] = times[0] + k*step.
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  double step = 0.0;
};

// Quadrant classification by the signs of y_i + theta_i.
enum class Regime { ActiveActive, InactiveInactive, Mixed };

// Thrown when the integrator produces a non-finite state; carries the time
// of the first bad step.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(double t, const std::string& what)
      : std::runtime_error(what), t_failure(t) {}
  double t_failure;
};

// Throws std::invalid_argument naming the offending field.
void validate(const NetworkParams& p);

double relu(double z);

// dy_i/dt = (1/tau_i) * [-y_i + sum_j w_ji * relu(y_j + theta_j) + I_i]
std::vector<double> vector_field(const NetworkParams& p, const State& s);

// Two-node regime label. Requires n == 2.
Regime regime(const NetworkParams& p, const State& s);

// Classical fixed-step RK4 from y0.t to y0.t + t_end.
Trajectory integrate_rk4(const NetworkParams& p, const State& y0,
                         double t_end, double dt);

// Exact solution y_i(t) = I_i + (y0_i - I_i) * exp(-(t - y0.t)/tau_i),
// valid while the trajectory stays in the inactive regime. Requires the
// initial state inactive and I_i + theta_i <= 0 (so the limit point does
// not cross back into the active regime).
State decoupled_closed_form(const NetworkParams& p, const State& y0, double t);

const char* to_string(Regime r);

}  // namespace ctrnn
