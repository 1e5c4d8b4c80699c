#include "ctrnn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace ctrnn {

void validate(const Grid& g) {
  if (!(g.y_min < g.y_max))
    throw std::invalid_argument("grid: y_min must be below y_max");
  if (g.n_points < 3)
    throw std::invalid_argument("grid: need at least 3 points");
}

std::vector<Complex> DiscretizedOperator::apply(
    const std::vector<Complex>& interior) const {
  const int n = dim();
  if (static_cast<int>(interior.size()) != n)
    throw std::invalid_argument("apply: vector length must equal dim()");
  std::vector<Complex> out(n);
  for (int k = 0; k < n; ++k) {
    Complex acc = diag[k] * interior[k];
    if (k > 0) acc += sub[k] * interior[k - 1];
    if (k + 1 < n) acc += sup[k] * interior[k + 1];
    out[k] = acc;
  }
  return out;
}

DiscretizedOperator discretize(const HamiltonianCoeffs& c, const Grid& grid) {
  validate(grid);
  DiscretizedOperator op;
  op.grid = grid;
  const int dim = grid.n_points - 2;
  const double h = grid.h();
  op.sub.resize(dim);
  op.diag.resize(dim);
  op.sup.resize(dim);
  for (int k = 0; k < dim; ++k) {
    const double y = grid.point(k + 1);
    const double drift = (c.c1 - c.e2 * y) / (2.0 * h);
    op.sub[k] = c.c2 / (h * h) - drift;
    op.sup[k] = c.c2 / (h * h) + drift;
    op.diag[k] = -2.0 * c.c2 / (h * h) + c.d1 * y - c.d2 * y * y - c.e2;
  }
  op.symmetric = (c.c1 == 0.0 && c.e2 == 0.0);
  return op;
}

std::vector<double> symmetric_tridiagonal_eigenvalues(std::vector<double> d,
                                                      std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return d;
  if (static_cast<int>(e.size()) != n - 1)
    throw std::invalid_argument(
        "symmetric_tridiagonal_eigenvalues: off-diagonal must have n-1 entries");
  e.push_back(0.0);
  const double eps = std::numeric_limits<double>::epsilon();

  // Implicit-shift QL, eigenvalues only.
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw OracleError("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {  // rotation annihilated early; restart this block
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  return d;
}

std::vector<double> symmetric_spectrum(const DiscretizedOperator& op, int k) {
  if (!op.symmetric)
    throw std::invalid_argument("symmetric_spectrum: operator is not symmetric");
  const int n = op.dim();
  if (k < 1 || k > n)
    throw std::invalid_argument("symmetric_spectrum: k must be in [1, dim]");
  std::vector<double> d = op.diag;
  std::vector<double> e(std::max(0, n - 1));
  for (int i = 0; i + 1 < n; ++i) e[i] = op.sup[i];
  std::vector<double> evs =
      symmetric_tridiagonal_eigenvalues(std::move(d), std::move(e));
  std::sort(evs.begin(), evs.end(), std::greater<>());
  evs.resize(k);
  return evs;
}

namespace {

double norm2(const std::vector<Complex>& v) {
  double acc = 0.0;
  for (const Complex& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

// Tridiagonal LU with partial pivoting (row swaps create one extra
// superdiagonal, du2).
struct TriLU {
  int n = 0;
  std::vector<Complex> dl, d, du, du2;
  std::vector<int> swapped;
  bool singular = false;
};

TriLU tri_lu(const DiscretizedOperator& op, Complex shift) {
  const int n = op.dim();
  TriLU lu;
  lu.n = n;
  lu.d.resize(n);
  lu.dl.assign(std::max(0, n - 1), 0.0);
  lu.du.assign(std::max(0, n - 1), 0.0);
  lu.du2.assign(std::max(0, n - 2), 0.0);
  lu.swapped.assign(std::max(0, n - 1), 0);
  for (int i = 0; i < n; ++i) lu.d[i] = Complex(op.diag[i]) - shift;
  for (int i = 0; i + 1 < n; ++i) {
    lu.dl[i] = Complex(op.sub[i + 1]);
    lu.du[i] = Complex(op.sup[i]);
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (std::abs(lu.d[i]) >= std::abs(lu.dl[i])) {
      if (lu.d[i] == 0.0) {
        lu.singular = true;
        return lu;
      }
      const Complex fact = lu.dl[i] / lu.d[i];
      lu.dl[i] = fact;
      lu.d[i + 1] -= fact * lu.du[i];
    } else {
      const Complex fact = lu.d[i] / lu.dl[i];
      lu.d[i] = lu.dl[i];
      lu.dl[i] = fact;
      const Complex tmp = lu.du[i];
      lu.du[i] = lu.d[i + 1];
      lu.d[i + 1] = tmp - fact * lu.d[i + 1];
      if (i + 2 < n) {
        lu.du2[i] = lu.du[i + 1];
        lu.du[i + 1] = -fact * lu.du[i + 1];
      }
      lu.swapped[i] = 1;
    }
  }
  if (lu.d[n - 1] == 0.0) lu.singular = true;
  return lu;
}

void tri_solve(const TriLU& lu, std::vector<Complex>& b) {
  const int n = lu.n;
  for (int i = 0; i + 1 < n; ++i) {
    if (!lu.swapped[i]) {
      b[i + 1] -= lu.dl[i] * b[i];
    } else {
      const Complex tmp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = tmp - lu.dl[i] * b[i];
    }
  }
  b[n - 1] /= lu.d[n - 1];
  if (n >= 2) b[n - 2] = (b[n - 2] - lu.du[n - 2] * b[n - 1]) / lu.d[n - 2];
  for (int i = n - 3; i >= 0; --i)
    b[i] = (b[i] - lu.du[i] * b[i + 1] - lu.du2[i] * b[i + 2]) / lu.d[i];
}

TriLU factor_with_nudge(const DiscretizedOperator& op, Complex& sigma) {
  TriLU lu = tri_lu(op, sigma);
  for (int attempt = 0; lu.singular && attempt < 3; ++attempt) {
    sigma += (1.0 + std::abs(sigma)) * 1e-12;
    lu = tri_lu(op, sigma);
  }
  return lu;
}

}  // namespace

EigenEstimate inverse_iteration(const DiscretizedOperator& op, Complex shift,
                                double tol, int max_iter) {
  const int n = op.dim();
  if (max_iter < 1)
    throw std::invalid_argument("inverse_iteration: max_iter must be positive");
  if (!(tol > 0.0))
    throw std::invalid_argument("inverse_iteration: tol must be positive");

  Complex sigma = shift;
  TriLU lu = factor_with_nudge(op, sigma);
  if (lu.singular)
    throw OracleError("inverse_iteration: shifted system stays singular");

  std::vector<Complex> v(n, 1.0);
  for (Complex& x : v) x /= std::sqrt(static_cast<double>(n));

  const int fixed_shift_iters = 4;
  for (int it = 1; it <= max_iter; ++it) {
    std::vector<Complex> w = v;
    tri_solve(lu, w);
    const double wn = norm2(w);
    if (!(wn > 0.0) || !std::isfinite(wn))
      throw OracleError("inverse_iteration: breakdown in shifted solve");
    for (Complex& x : w) x /= wn;

    const std::vector<Complex> aw = op.apply(w);
    Complex lambda = 0.0;  // Rayleigh quotient, ||w|| = 1
    for (int i = 0; i < n; ++i) lambda += std::conj(w[i]) * aw[i];
    double res = 0.0;
    for (int i = 0; i < n; ++i) res += std::norm(aw[i] - lambda * w[i]);
    res = std::sqrt(res);

    v = std::move(w);
    if (res <= tol) return {lambda, std::move(v), it};

    if (it >= fixed_shift_iters) {
      // fixed shift is stalling; re-center on the current estimate
      sigma = lambda;
      lu = factor_with_nudge(op, sigma);
      if (lu.singular)
        throw OracleError("inverse_iteration: shifted system stays singular");
    }
  }
  throw OracleError("inverse_iteration: no convergence within max_iter");
}

double residual_norm(const HamiltonianCoeffs& c, Complex lambda,
                     const std::vector<Complex>& psi_samples,
                     const Grid& grid) {
  validate(grid);
  if (static_cast<int>(psi_samples.size()) != grid.n_points)
    throw std::invalid_argument(
        "residual_norm: samples must cover the full grid, boundary included");
  const DiscretizedOperator op = discretize(c, grid);
  double rnorm2 = 0.0, pnorm2 = 0.0;
  for (int k = 0; k < op.dim(); ++k) {
    // interior index k sits at grid node k+1; boundary samples feed the
    // stencil through sub[0] / sup[dim-1]
    const Complex lk = op.sub[k] * psi_samples[k] +
                       op.diag[k] * psi_samples[k + 1] +
                       op.sup[k] * psi_samples[k + 2];
    rnorm2 += std::norm(lk - lambda * psi_samples[k + 1]);
    pnorm2 += std::norm(psi_samples[k + 1]);
  }
  if (!(pnorm2 > 0.0))
    throw std::domain_error("residual_norm: zero-norm samples");
  return std::sqrt(rnorm2 / pnorm2);
}

}  // namespace ctrnn
