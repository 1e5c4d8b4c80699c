#pragma once

#include <stdexcept>
#include <vector>

#include "ctrnn/hamiltonian.hpp"
#include "ctrnn/specfun.hpp"

namespace ctrnn {

// Uniform grid on [y_min, y_max] with n_points >= 3 nodes.
struct Grid {
  double y_min = -10.0;
  double y_max = 10.0;
  int n_points = 2001;
  double h() const { return (y_max - y_min) / (n_points - 1); }
  double point(int i) const { return y_min + i * h(); }
};

void validate(const Grid& g);

class OracleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Second-order central-difference discretization of
//   c2 psi'' + (c1 - e2 y) psi' + (d1 y - d2 y^2 - e2) psi
// over the interior nodes, homogeneous Dirichlet at both ends. The matrix
// is tridiagonal; row k reads sub[k] psi_{k-1} + diag[k] psi_k +
// sup[k] psi_{k+1} with interior index k mapped to grid node k+1. sub[0]
// and sup[dim-1] hold the stencil couplings into the boundary nodes: the
// eigensolvers never reference them (Dirichlet), residual_norm does.
struct DiscretizedOperator {
  Grid grid;
  std::vector<double> sub, diag, sup;
  bool symmetric = false;  // true iff c1 == 0 and e2 == 0
  int dim() const { return static_cast<int>(diag.size()); }
  double interior_point(int k) const { return grid.point(k + 1); }
  // Matrix-vector product over interior samples (boundary taken as zero).
  std::vector<Complex> apply(const std::vector<Complex>& interior) const;
};

DiscretizedOperator discretize(const HamiltonianCoeffs& c, const Grid& grid);

// All eigenvalues of a symmetric tridiagonal matrix (implicit-shift QL,
// eigenvalues only), returned in the order the algorithm produces them.
std::vector<double> symmetric_tridiagonal_eigenvalues(std::vector<double> diag,
                                                      std::vector<double> off);

// The k algebraically largest eigenvalues, descending. Requires
// op.symmetric and 1 <= k <= op.dim().
std::vector<double> symmetric_spectrum(const DiscretizedOperator& op, int k);

struct EigenEstimate {
  Complex lambda;
  std::vector<Complex> vector;  // interior samples, unit 2-norm
  int iterations = 0;
};

// Shifted inverse iteration on the (generally non-symmetric) tridiagonal
// matrix; converges to the eigenpair nearest the shift. Switches to
// Rayleigh-quotient shifts when a fixed shift stalls. A shift that makes
// the system singular is nudged and retried. Throws OracleError on
// breakdown or when max_iter is exhausted.
EigenEstimate inverse_iteration(const DiscretizedOperator& op, Complex shift,
                                double tol = 1e-10, int max_iter = 200);

// ||L_h psi - lambda psi||_2 / ||psi||_2 over the interior nodes, with L_h
// the discretize stencil applied to the provided samples. psi_samples must
// cover the full grid (boundary values included).
double residual_norm(const HamiltonianCoeffs& c, Complex lambda,
                     const std::vector<Complex>& psi_samples, const Grid& grid);

}  // namespace ctrnn
