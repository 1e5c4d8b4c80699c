#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ctrnn/dynamics.hpp"

namespace ctrnn {

// Two-node network, spelled out by name.
struct PlanarParams {
  double tau1 = 1.0, tau2 = 1.0;
  double w11 = 0.0, w12 = 0.0, w21 = 0.0, w22 = 0.0;
  double theta1 = 0.0, theta2 = 0.0;
  double i1 = 0.0, i2 = 0.0;
};

PlanarParams to_planar(const NetworkParams& p);  // requires n == 2
NetworkParams to_network(const PlanarParams& p);

// The planar active-regime flow is Hamiltonian iff
// (w11-1)/tau1 == (1-w22)/tau2. Case1: w11 = w22 = 1.
// Case2: the equality with w11 > 1, w22 < 1. Case3: w11 < 1, w22 > 1.
enum class HamiltonicityCase { Case1, Case2, Case3, NotHamiltonian };

struct HamiltonicityResult {
  HamiltonicityCase verdict = HamiltonicityCase::NotHamiltonian;
  double mismatch = 0.0;  // (w11-1)/tau1 - (1-w22)/tau2
};

// Constants of H(y1,y2) = -c1*y1 - c2*y1^2 + d1*y2 + d2*y2^2 + e2*y1*y2.
struct HamiltonianCoeffs {
  double c1 = 0.0, d1 = 0.0, c2 = 0.0, d2 = 0.0, e2 = 0.0;
};

class NotHamiltonianError : public std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr double kDefaultHamiltonicityTol = 1e-12;

HamiltonicityResult check_hamiltonicity(const PlanarParams& p,
                                        double tol = kDefaultHamiltonicityTol);

// tau1 that makes (tau2, w11, w22) Hamiltonian: tau2*(1 - w11)/(w22 - 1).
// Throws if w22 == 1 or the result is not positive.
double required_tau1(double tau2, double w11, double w22);

// Throws NotHamiltonianError when the verdict is NotHamiltonian or the two
// equivalent expressions for e2 disagree beyond tol.
HamiltonianCoeffs coefficients(const PlanarParams& p,
                               double tol = kDefaultHamiltonicityTol);

double evaluate_h(const HamiltonianCoeffs& c, double y1, double y2);

// Tensor-grid samples of H, row-major in y1.
struct ContourGrid {
  std::vector<double> y1;      // axis values, size = resolution
  std::vector<double> y2;
  std::vector<double> values;  // values[i*resolution + j] = H(y1[i], y2[j])
  int resolution = 0;
  double at(int i, int j) const { return values[i * resolution + j]; }
};

ContourGrid contour_grid(const HamiltonianCoeffs& c,
                         std::pair<double, double> y1_range,
                         std::pair<double, double> y2_range, int resolution);

const char* to_string(HamiltonicityCase c);

}  // namespace ctrnn
