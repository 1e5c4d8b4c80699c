#include "ctrnn/specfun.hpp"

#include <cmath>

namespace ctrnn {

namespace {

bool is_nonpositive_integer(Complex v) {
  return v.imag() == 0.0 && v.real() <= 0.0 &&
         v.real() == std::floor(v.real());
}

}  // namespace

Complex pochhammer(Complex a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be non-negative");
  Complex out = 1.0;
  for (int k = 0; k < n; ++k) out *= a + static_cast<double>(k);
  return out;
}

KummerResult kummer_m_detail(const KummerArgs& args, const SeriesControl& ctrl) {
  if (ctrl.max_terms < 1)
    throw std::invalid_argument("kummer_m: max_terms must be at least 1");
  if (!(ctrl.rel_tol > 0.0))
    throw std::invalid_argument("kummer_m: rel_tol must be positive");

  const Complex a = args.a, b = args.b, z = args.z;
  const bool same_ab = (a == b);  // ratio (a+n)/(b+n) cancels; M(a,a,z) = e^z
  if (!same_ab && is_nonpositive_integer(b)) {
    // (b)_n vanishes at n = -b; only a strictly earlier zero in (a)_n saves
    // the series.
    if (!(is_nonpositive_integer(a) && a.real() > b.real()))
      throw std::domain_error(
          "kummer_m: b is a non-positive integer (series pole)");
  }

  KummerResult res;
  Complex term = 1.0;
  Complex sum = 1.0;
  res.terms = 1;
  int small_run = 0;
  for (int n = 0; n < ctrl.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    const Complex factor =
        same_ab ? z / (dn + 1.0)
                : (a + dn) * z / ((b + dn) * (dn + 1.0));
    term *= factor;
    if (term == 0.0) {
      // exact termination: the numerator factor (a+n) hit zero (or z == 0)
      res.terminated = true;
      res.value = sum;
      return res;
    }
    sum += term;
    ++res.terms;
    // two consecutive small terms, so a single near-zero factor mid-series
    // cannot stop the sum early
    if (std::abs(term) <= ctrl.rel_tol * std::abs(sum)) {
      if (++small_run >= 2) {
        res.value = sum;
        return res;
      }
    } else {
      small_run = 0;
    }
  }
  throw std::domain_error("kummer_m: no convergence within max_terms");
}

Complex kummer_m(const KummerArgs& args, const SeriesControl& ctrl) {
  return kummer_m_detail(args, ctrl).value;
}

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: n must be non-negative");
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double p2 = 2.0 * x * p1 - 2.0 * k * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double hermite_via_kummer(int n, double x, const SeriesControl& ctrl) {
  if (n < 0)
    throw std::invalid_argument("hermite_via_kummer: n must be non-negative");
  if (n > 150)
    throw std::domain_error(
        "hermite_via_kummer: factorial prefactor overflows for n > 150");
  const int k = n / 2;
  double prefactor = 1.0;  // (2k)!/k! resp. (2k+1)!/k!, as a running product
  for (int j = k + 1; j <= n; ++j) prefactor *= static_cast<double>(j);
  if (k % 2 != 0) prefactor = -prefactor;
  const Complex b(n % 2 == 0 ? 0.5 : 1.5, 0.0);
  const Complex m = kummer_m({Complex(-static_cast<double>(k)), b,
                              Complex(x * x)},
                             ctrl);
  double value = prefactor * m.real();
  if (n % 2 != 0) value *= 2.0 * x;
  return value;
}

}  // namespace ctrnn
