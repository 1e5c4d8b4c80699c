#pragma once

#include <complex>
#include <stdexcept>

namespace ctrnn {

using Complex = std::complex<double>;

struct SeriesControl {
  int max_terms = 500;
  double rel_tol = 1e-15;
};

struct KummerArgs {
  Complex a;
  Complex b;
  Complex z;
};

// Value plus how the series ended. `terminated` is set when a numerator
// factor hit zero exactly, i.e. the series is a polynomial; `terms` counts
// the nonzero terms summed, so a degree-m polynomial reports m+1.
struct KummerResult {
  Complex value;
  int terms = 0;
  bool terminated = false;
};

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
Complex pochhammer(Complex a, int n);

// Kummer's confluent hypergeometric M(a,b,z) = sum_n (a)_n z^n / (n! (b)_n),
// summed by forward recurrence on the terms. Terminates exactly when a is a
// non-positive integer. Throws std::domain_error when b is a non-positive
// integer without earlier termination (series pole), or when the sum fails
// to converge within max_terms. Intended for desk-scale |z| (<~50); no
// asymptotic expansion is attempted beyond that.
KummerResult kummer_m_detail(const KummerArgs& args,
                             const SeriesControl& ctrl = {});
Complex kummer_m(const KummerArgs& args, const SeriesControl& ctrl = {});

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite(int n, double x);

// H_n via the confluent hypergeometric identities
//   H_2k(x)   = (-1)^k (2k)!/k!   M(-k, 1/2, x^2)
//   H_2k+1(x) = (-1)^k (2k+1)!/k! 2x M(-k, 3/2, x^2).
// Rejects n > 150 where the factorial prefactor leaves double range.
double hermite_via_kummer(int n, double x, const SeriesControl& ctrl = {});

}  // namespace ctrnn
