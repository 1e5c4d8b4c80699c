#pragma once

#include <complex>
#include <vector>

#include "ctrnn/hamiltonian.hpp"
#include "ctrnn/oracle.hpp"
#include "ctrnn/specfun.hpp"

namespace ctrnn {

enum class Parity { Even, Odd };

// Two conventions for the exponent constants xi1, xi2 of the Gaussian
// factor exp(-y*(xi1*y + xi2)). Printed is the closed form the
// admissibility conditions are stated in; Corrected is the rescaled pair
//   xi1 = (sqrt(S) - e2) / (4 c2),  xi2 = (2 c1 xi1 - d1) / sqrt(S)
// whose eigenfunctions actually satisfy the eigenvalue equation (the
// finite-difference oracle discriminates sharply between the two).
enum class XiVariant { Printed, Corrected };

enum class Admissibility { AdmissibleStrict, AdmissibleBoundary, Inadmissible };

struct ExponentParams {
  Complex xi1;
  Complex xi2;
  XiVariant variant = XiVariant::Printed;
};

struct AdmissibilityVerdict {
  Admissibility verdict = Admissibility::Inadmissible;
  double re_xi1 = 0.0;
  double re_xi2 = 0.0;
};

// Arbitrary constants multiplying the two independent formal solutions.
struct FormalSolutionParams {
  Complex a1;
  Complex a2;
};

// Discrete eigenpair; evaluable through operator().
struct EigenPair {
  Parity parity = Parity::Even;
  int m = 0;
  Complex lambda;
  HamiltonianCoeffs coeffs;
  XiVariant variant = XiVariant::Corrected;
  Complex operator()(double y) const;
};

// Eigenfunction sampled on a grid.
struct SampledEigenfunction {
  Grid grid;
  std::vector<Complex> values;
};

inline constexpr double kDefaultBoundaryEps = 1e-12;

// S = 4 c2 d2 + e2^2, lifted to complex; all square roots downstream use
// the principal branch.
Complex s_discriminant(const HamiltonianCoeffs& c);

ExponentParams exponent_params(const HamiltonianCoeffs& c, XiVariant variant);

// Series parameter of the first formal solution; the second uses
// beta = alpha + 1/2. Requires S != 0.
Complex alpha_param(const HamiltonianCoeffs& c, Complex lambda);
Complex beta_param(const HamiltonianCoeffs& c, Complex lambda);

// lambda_m = -[(4m+1) S^{3/2} + T] / (2S) for Even, (4m+3) for Odd, with
// T the cubic coefficient combination shared with alpha_param.
Complex eigenvalue(const HamiltonianCoeffs& c, Parity parity, int m);

EigenPair make_eigenpair(const HamiltonianCoeffs& c, Parity parity, int m,
                         XiVariant variant);

// H_n(arg(y)) * exp(-y*(xi1*y + xi2)) with n = 2m (Even) or 2m+1 (Odd) and
// arg(y) = (-S y + c1 e2 + 2 c2 d1) / (sqrt(2 c2) S^{3/4}). Defined only
// for real S > 0 and c2 > 0.
Complex eigenfunction(const HamiltonianCoeffs& c, Parity parity, int m,
                      double y, XiVariant variant);

// General two-parameter solution
//   [a1 M(alpha,1/2,u) + a2 (S y - 2 d1 c2 - c1 e2) M(beta,3/2,u)]
//     * exp(-y*(xi1*y + xi2)),   u(y) = (-S y + c1 e2 + 2 c2 d1)^2 / S^{3/2}.
Complex formal_solution(const HamiltonianCoeffs& c, Complex lambda,
                        const FormalSolutionParams& fs, double y,
                        XiVariant variant, const SeriesControl& ctrl = {});

// Samples the eigenfunction on the grid and scales it to unit trapezoidal
// L2 norm. Sign convention: positive just right of the center for Even,
// positive slope at the center for Odd. Refuses inadmissible parameters
// (the tails do not decay, so no normalization exists).
SampledEigenfunction normalize(const HamiltonianCoeffs& c, Parity parity,
                               int m, const Grid& grid, XiVariant variant);

double trapezoid_norm(const SampledEigenfunction& f);

// Weight admissibility from the printed-variant exponents: AdmissibleStrict
// when Re(xi1) > 0, AdmissibleBoundary when Re(xi1) = 0 (within eps) and
// Re(xi2) > 0, Inadmissible otherwise.
AdmissibilityVerdict admissibility(const PlanarParams& p,
                                   double tol = kDefaultHamiltonicityTol,
                                   double eps = kDefaultBoundaryEps);

// Same classification evaluated directly from the network parameters
// (w's, tau's, biases, inputs) without the coefficient step. Used to
// cross-check the coefficient route; the two must agree.
AdmissibilityVerdict admissibility_weight_form(const PlanarParams& p,
                                               double eps = kDefaultBoundaryEps);

AdmissibilityVerdict classify_xi(Complex xi1, Complex xi2, double eps);

const char* to_string(Parity p);
const char* to_string(XiVariant v);
const char* to_string(Admissibility a);

}  // namespace ctrnn
