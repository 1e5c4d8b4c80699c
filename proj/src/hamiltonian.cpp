#include "ctrnn/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ctrnn {

PlanarParams to_planar(const NetworkParams& p) {
  validate(p);
  if (p.n != 2) throw std::invalid_argument("to_planar: network must have n == 2");
  PlanarParams q;
  q.tau1 = p.tau[0];
  q.tau2 = p.tau[1];
  q.w11 = p.weights[0][0];
  q.w12 = p.weights[0][1];
  q.w21 = p.weights[1][0];
  q.w22 = p.weights[1][1];
  q.theta1 = p.theta[0];
  q.theta2 = p.theta[1];
  q.i1 = p.inputs[0];
  q.i2 = p.inputs[1];
  return q;
}

NetworkParams to_network(const PlanarParams& p) {
  NetworkParams q;
  q.n = 2;
  q.tau = {p.tau1, p.tau2};
  q.weights = {{p.w11, p.w12}, {p.w21, p.w22}};
  q.theta = {p.theta1, p.theta2};
  q.inputs = {p.i1, p.i2};
  return q;
}

HamiltonicityResult check_hamiltonicity(const PlanarParams& p, double tol) {
  if (!(p.tau1 > 0.0) || !(p.tau2 > 0.0))
    throw std::invalid_argument("check_hamiltonicity: time constants must be positive");
  HamiltonicityResult r;
  r.mismatch = (p.w11 - 1.0) / p.tau1 - (1.0 - p.w22) / p.tau2;
  if (std::abs(r.mismatch) > tol) {
    r.verdict = HamiltonicityCase::NotHamiltonian;
    return r;
  }
  const bool w11_one = std::abs(p.w11 - 1.0) <= tol;
  const bool w22_one = std::abs(p.w22 - 1.0) <= tol;
  if (w11_one && w22_one)
    r.verdict = HamiltonicityCase::Case1;
  else if (p.w11 > 1.0 && p.w22 < 1.0)
    r.verdict = HamiltonicityCase::Case2;
  else if (p.w11 < 1.0 && p.w22 > 1.0)
    r.verdict = HamiltonicityCase::Case3;
  else
    // One weight pinned at 1 with the other off it forces a tau
    // contradiction; such degenerate equalities fall outside all three cases.
    r.verdict = HamiltonicityCase::NotHamiltonian;
  return r;
}

double required_tau1(double tau2, double w11, double w22) {
  if (!(tau2 > 0.0)) throw std::invalid_argument("required_tau1: tau2 must be positive");
  if (w22 == 1.0)
    throw std::domain_error("required_tau1: w22 == 1 (division by zero)");
  const double tau1 = (tau2 - tau2 * w11) / (-1.0 + w22);
  if (!(tau1 > 0.0))
    throw std::domain_error(
        "required_tau1: parameters yield a non-positive time constant "
        "(w11 and w22 must sit on opposite sides of 1)");
  return tau1;
}

HamiltonianCoeffs coefficients(const PlanarParams& p, double tol) {
  const HamiltonicityResult r = check_hamiltonicity(p, tol);
  if (r.verdict == HamiltonicityCase::NotHamiltonian)
    throw NotHamiltonianError(
        "coefficients: system is not Hamiltonian (mismatch = " +
        std::to_string(r.mismatch) + ")");
  const double e2a = (p.w11 - 1.0) / p.tau1;
  const double e2b = -(p.w22 - 1.0) / p.tau2;
  // |e2a - e2b| == |mismatch|; re-check against the scale of e2 itself so a
  // caller passing a looser tol still gets consistent constants.
  if (std::abs(e2a - e2b) >
      tol * std::max({1.0, std::abs(e2a), std::abs(e2b)}))
    throw NotHamiltonianError(
        "coefficients: the two expressions for e2 disagree beyond tolerance");
  HamiltonianCoeffs c;
  c.c1 = (p.w12 * p.theta1 + p.w22 * p.theta2 + p.i2) / p.tau2;
  c.d1 = (p.w21 * p.theta2 + p.w11 * p.theta1 + p.i1) / p.tau1;
  c.c2 = p.w12 / (2.0 * p.tau2);
  c.d2 = p.w21 / (2.0 * p.tau1);
  c.e2 = e2a;
  return c;
}

double evaluate_h(const HamiltonianCoeffs& c, double y1, double y2) {
  return -c.c1 * y1 - c.c2 * y1 * y1 + c.d1 * y2 + c.d2 * y2 * y2 +
         c.e2 * y1 * y2;
}

ContourGrid contour_grid(const HamiltonianCoeffs& c,
                         std::pair<double, double> y1_range,
                         std::pair<double, double> y2_range, int resolution) {
  if (resolution < 2)
    throw std::invalid_argument("contour_grid: resolution must be at least 2");
  if (!(y1_range.second > y1_range.first) ||
      !(y2_range.second > y2_range.first))
    throw std::invalid_argument("contour_grid: degenerate range");
  ContourGrid g;
  g.resolution = resolution;
  g.y1.resize(resolution);
  g.y2.resize(resolution);
  for (int i = 0; i < resolution; ++i) {
    const double f = static_cast<double>(i) / (resolution - 1);
    g.y1[i] = y1_range.first + f * (y1_range.second - y1_range.first);
    g.y2[i] = y2_range.first + f * (y2_range.second - y2_range.first);
  }
  g.values.resize(static_cast<size_t>(resolution) * resolution);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j)
      g.values[static_cast<size_t>(i) * resolution + j] =
          evaluate_h(c, g.y1[i], g.y2[j]);
  return g;
}

const char* to_string(HamiltonicityCase c) {
  switch (c) {
    case HamiltonicityCase::Case1: return "Case1";
    case HamiltonicityCase::Case2: return "Case2";
    case HamiltonicityCase::Case3: return "Case3";
    case HamiltonicityCase::NotHamiltonian: return "NotHamiltonian";
  }
  return "?";
}

}  // namespace ctrnn
