#include "ctrnn/spectrum.hpp"

#include <cmath>

namespace ctrnn {

namespace {

// Recurring cubic combination T = 2 d2 c1^2 - 2 c1 d1 e2 - 2 c2 d1^2
// + 4 c2 d2 e2 + e2^3; shifts every eigenvalue by -T/(2S).
double t_shift(const HamiltonianCoeffs& c) {
  return 2.0 * c.d2 * c.c1 * c.c1 - 2.0 * c.c1 * c.d1 * c.e2 -
         2.0 * c.c2 * c.d1 * c.d1 + 4.0 * c.c2 * c.d2 * c.e2 +
         c.e2 * c.e2 * c.e2;
}

}  // namespace

Complex s_discriminant(const HamiltonianCoeffs& c) {
  return Complex(4.0 * c.c2 * c.d2 + c.e2 * c.e2, 0.0);
}

ExponentParams exponent_params(const HamiltonianCoeffs& c, XiVariant variant) {
  const Complex s = s_discriminant(c);
  const Complex root_s = std::sqrt(s);
  ExponentParams xp;
  xp.variant = variant;
  if (variant == XiVariant::Printed) {
    xp.xi1 = s - c.e2 * root_s;
    xp.xi2 = -c.c1 * c.e2 - 4.0 * c.c2 * c.d1 + 2.0 * root_s;
  } else {
    if (c.c2 == 0.0)
      throw std::domain_error(
          "exponent_params: corrected variant needs c2 != 0 "
          "(degenerate second-order term)");
    if (s == 0.0)
      throw std::domain_error("exponent_params: corrected variant needs S != 0");
    xp.xi1 = (root_s - c.e2) / (4.0 * c.c2);
    xp.xi2 = (2.0 * c.c1 * xp.xi1 - c.d1) / root_s;
  }
  return xp;
}

Complex alpha_param(const HamiltonianCoeffs& c, Complex lambda) {
  const Complex s = s_discriminant(c);
  if (s == 0.0) throw std::domain_error("alpha_param: S = 0");
  const Complex s32 = s * std::sqrt(s);
  return 0.25 + (2.0 * s * lambda + t_shift(c)) / (4.0 * s32);
}

Complex beta_param(const HamiltonianCoeffs& c, Complex lambda) {
  return alpha_param(c, lambda) + 0.5;
}

Complex eigenvalue(const HamiltonianCoeffs& c, Parity parity, int m) {
  if (m < 0) throw std::invalid_argument("eigenvalue: m must be non-negative");
  const Complex s = s_discriminant(c);
  if (s == 0.0) throw std::domain_error("eigenvalue: S = 0");
  const Complex s32 = s * std::sqrt(s);
  const double k = (parity == Parity::Even) ? 4.0 * m + 1.0 : 4.0 * m + 3.0;
  return -0.5 * (k * s32 + t_shift(c)) / s;
}

EigenPair make_eigenpair(const HamiltonianCoeffs& c, Parity parity, int m,
                         XiVariant variant) {
  EigenPair pair;
  pair.parity = parity;
  pair.m = m;
  pair.coeffs = c;
  pair.variant = variant;
  pair.lambda = eigenvalue(c, parity, m);
  return pair;
}

Complex EigenPair::operator()(double y) const {
  return eigenfunction(coeffs, parity, m, y, variant);
}

Complex eigenfunction(const HamiltonianCoeffs& c, Parity parity, int m,
                      double y, XiVariant variant) {
  if (m < 0) throw std::invalid_argument("eigenfunction: m must be non-negative");
  const double s = 4.0 * c.c2 * c.d2 + c.e2 * c.e2;
  if (!(s > 0.0))
    throw std::domain_error(
        "eigenfunction: the Hermite form needs real S > 0");
  if (!(c.c2 > 0.0))
    throw std::domain_error("eigenfunction: requires c2 > 0");
  const int n = (parity == Parity::Even) ? 2 * m : 2 * m + 1;
  const double arg = (-s * y + c.c1 * c.e2 + 2.0 * c.c2 * c.d1) /
                     (std::sqrt(2.0 * c.c2) * std::pow(s, 0.75));
  const ExponentParams xp = exponent_params(c, variant);
  return hermite(n, arg) * std::exp(-y * (xp.xi1 * y + xp.xi2));
}

Complex formal_solution(const HamiltonianCoeffs& c, Complex lambda,
                        const FormalSolutionParams& fs, double y,
                        XiVariant variant, const SeriesControl& ctrl) {
  const Complex s = s_discriminant(c);
  if (s == 0.0) throw std::domain_error("formal_solution: S = 0");
  const Complex s32 = s * std::sqrt(s);
  const Complex w = -s * y + c.c1 * c.e2 + 2.0 * c.c2 * c.d1;
  const Complex u = w * w / s32;
  Complex total = 0.0;
  if (fs.a1 != 0.0) {
    const Complex alpha = alpha_param(c, lambda);
    total += fs.a1 * kummer_m({alpha, Complex(0.5), u}, ctrl);
  }
  if (fs.a2 != 0.0) {
    const Complex beta = beta_param(c, lambda);
    total += fs.a2 * (s * y - 2.0 * c.d1 * c.c2 - c.c1 * c.e2) *
             kummer_m({beta, Complex(1.5), u}, ctrl);
  }
  if (total == 0.0) return total;
  const ExponentParams xp = exponent_params(c, variant);
  return total * std::exp(-y * (xp.xi1 * y + xp.xi2));
}

double trapezoid_norm(const SampledEigenfunction& f) {
  const int n = f.grid.n_points;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    acc += w * std::norm(f.values[i]);
  }
  return std::sqrt(f.grid.h() * acc);
}

SampledEigenfunction normalize(const HamiltonianCoeffs& c, Parity parity,
                               int m, const Grid& grid, XiVariant variant) {
  validate(grid);
  const ExponentParams printed = exponent_params(c, XiVariant::Printed);
  if (classify_xi(printed.xi1, printed.xi2, kDefaultBoundaryEps).verdict ==
      Admissibility::Inadmissible)
    throw std::domain_error(
        "normalize: inadmissible parameters, eigenfunction is not normalizable");

  SampledEigenfunction out;
  out.grid = grid;
  out.values.resize(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i)
    out.values[i] = eigenfunction(c, parity, m, grid.point(i), variant);

  const double nrm = trapezoid_norm(out);
  if (!(nrm > 0.0) || !std::isfinite(nrm))
    throw std::domain_error("normalize: zero or non-finite norm");

  // The Hermite argument decreases in y, so the sign at the center is set
  // by H_n(0^-): flip to make Even positive just right of the center and
  // Odd positive-sloped there.
  const double sign = (parity == Parity::Even)
                          ? (m % 2 == 0 ? 1.0 : -1.0)
                          : (m % 2 == 0 ? -1.0 : 1.0);
  const double scale = sign / nrm;
  for (Complex& v : out.values) v *= scale;
  return out;
}

AdmissibilityVerdict classify_xi(Complex xi1, Complex xi2, double eps) {
  AdmissibilityVerdict av;
  av.re_xi1 = xi1.real();
  av.re_xi2 = xi2.real();
  if (std::abs(av.re_xi1) <= eps)
    av.verdict = av.re_xi2 > 0.0 ? Admissibility::AdmissibleBoundary
                                 : Admissibility::Inadmissible;
  else if (av.re_xi1 > 0.0)
    av.verdict = Admissibility::AdmissibleStrict;
  else
    av.verdict = Admissibility::Inadmissible;
  return av;
}

AdmissibilityVerdict admissibility(const PlanarParams& p, double tol,
                                   double eps) {
  const HamiltonianCoeffs c = coefficients(p, tol);  // throws if not Hamiltonian
  const ExponentParams xp = exponent_params(c, XiVariant::Printed);
  return classify_xi(xp.xi1, xp.xi2, eps);
}

AdmissibilityVerdict admissibility_weight_form(const PlanarParams& p,
                                               double eps) {
  const double e = (p.w11 - 1.0) / p.tau1;
  const double coupling = p.w12 * p.w21 / (p.tau1 * p.tau2);
  const Complex root_s = std::sqrt(Complex(e * e + coupling, 0.0));
  const Complex xi1 = e * e - e * root_s + coupling;
  const Complex xi2 =
      -2.0 * p.w12 * (p.i1 + p.theta1 * p.w11 + p.theta2 * p.w21) /
          (p.tau1 * p.tau2) -
      (p.w11 - 1.0) * (p.i2 + p.theta1 * p.w12 + p.theta2 * p.w22) /
          (p.tau1 * p.tau2) +
      2.0 * std::sqrt(Complex(
                (p.tau1 * p.w12 * p.w21 / p.tau2 + (p.w11 - 1.0) * (p.w11 - 1.0)) /
                    (p.tau1 * p.tau1),
                0.0));
  return classify_xi(xi1, xi2, eps);
}

const char* to_string(Parity p) {
  return p == Parity::Even ? "even" : "odd";
}

const char* to_string(XiVariant v) {
  return v == XiVariant::Printed ? "printed" : "corrected";
}

const char* to_string(Admissibility a) {
  switch (a) {
    case Admissibility::AdmissibleStrict: return "AdmissibleStrict";
    case Admissibility::AdmissibleBoundary: return "AdmissibleBoundary";
    case Admissibility::Inadmissible: return "Inadmissible";
  }
  return "?";
}

}  // namespace ctrnn
