#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ctrnn/specfun.hpp"

using ctrnn::Complex;
using ctrnn::KummerArgs;
using ctrnn::SeriesControl;

namespace {

// Brute-force reference: explicit per-term evaluation through pochhammer,
// independent of the forward recurrence inside kummer_m.
Complex kummer_brute_force(Complex a, Complex b, Complex z, int terms) {
  Complex sum = 0.0;
  double n_fact = 1.0;
  Complex z_pow = 1.0;
  for (int n = 0; n < terms; ++n) {
    if (n > 0) {
      n_fact *= n;
      z_pow *= z;
    }
    sum += ctrnn::pochhammer(a, n) * z_pow / (n_fact * ctrnn::pochhammer(b, n));
  }
  return sum;
}

}  // namespace

TEST_CASE("pochhammer basics") {
  CHECK(ctrnn::pochhammer(Complex(7.3, -2.0), 0) == Complex(1.0));
  CHECK(ctrnn::pochhammer(Complex(3.0), 2) == Complex(12.0));
  CHECK(ctrnn::pochhammer(Complex(-2.0), 3) == Complex(0.0));
  const Complex v = ctrnn::pochhammer(Complex(0.0, 1.0), 2);  // i*(1+i)
  CHECK(v.real() == doctest::Approx(-1.0));
  CHECK(v.imag() == doctest::Approx(1.0));
  CHECK_THROWS_AS(ctrnn::pochhammer(Complex(1.0), -1), std::invalid_argument);
}

TEST_CASE("kummer_m point values") {
  CHECK(ctrnn::kummer_m({Complex(0.3, 0.1), Complex(1.7), Complex(0.0)}) ==
        Complex(1.0));
  const Complex m1 = ctrnn::kummer_m({Complex(-1.0), Complex(0.5), Complex(2.0)});
  CHECK(m1.real() == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(m1.imag() == 0.0);
  const Complex e = ctrnn::kummer_m({Complex(1.0), Complex(1.0), Complex(1.0)});
  CHECK(e.real() == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
}

TEST_CASE("kummer_m termination is exact for non-positive integer a") {
  for (int m = 0; m <= 10; ++m) {
    for (double b : {0.5, 1.5, 2.25}) {
      for (double z : {0.7, -2.3, 3.0}) {
        const ctrnn::KummerResult r = ctrnn::kummer_m_detail(
            {Complex(-static_cast<double>(m)), Complex(b), Complex(z)});
        CHECK(r.terminated);
        CHECK(r.terms == m + 1);  // polynomial of degree exactly m
      }
    }
  }
}

TEST_CASE("kummer_m identities") {
  for (double a : {0.5, 1.0, 2.0}) {
    for (int i = 0; i <= 40; ++i) {
      const double z = -5.0 + 0.25 * i;
      const Complex m = ctrnn::kummer_m({Complex(a), Complex(a), Complex(z)});
      CHECK(std::abs(m - std::exp(z)) <= 1e-12 * std::exp(std::abs(z)));
    }
  }
  for (int i = 0; i <= 40; ++i) {
    const double z = -5.0 + 0.25 * i;
    if (z == 0.0) continue;
    const Complex m = ctrnn::kummer_m({Complex(1.0), Complex(2.0), Complex(z)});
    const double expected = (std::exp(z) - 1.0) / z;
    CHECK(std::abs(m.real() - expected) <= 1e-12 * std::abs(expected));
  }
}

TEST_CASE("kummer_m matches the brute-force summation") {
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex a(coef(rng), coef(rng));
    Complex b(coef(rng), coef(rng));
    // keep b away from the pole set and from tiny denominators
    while (std::abs(b.imag()) < 0.2 && std::abs(b.real() - std::round(b.real())) < 0.3)
      b = Complex(coef(rng), coef(rng));
    const Complex z(coef(rng), coef(rng));
    const Complex fast = ctrnn::kummer_m({a, b, z});
    const Complex slow = kummer_brute_force(a, b, z, 80);
    CHECK(std::abs(fast - slow) <= 1e-13 * std::max(1.0, std::abs(slow)));
  }
}

TEST_CASE("kummer_m error paths") {
  // pole: b a non-positive integer, a not terminating first
  CHECK_THROWS_AS(ctrnn::kummer_m({Complex(1.0), Complex(-2.0), Complex(1.0)}),
                  std::domain_error);
  CHECK_THROWS_AS(ctrnn::kummer_m({Complex(-3.0), Complex(-2.0), Complex(1.0)}),
                  std::domain_error);
  // termination strictly before the pole is fine
  CHECK_NOTHROW(ctrnn::kummer_m({Complex(-2.0), Complex(-3.0), Complex(1.0)}));
  // a == b cancels throughout, even on the pole set
  const Complex m = ctrnn::kummer_m({Complex(-2.0), Complex(-2.0), Complex(1.5)});
  CHECK(m.real() == doctest::Approx(std::exp(1.5)).epsilon(1e-14));
  // non-convergence when starved of terms
  SeriesControl starved;
  starved.max_terms = 3;
  CHECK_THROWS_AS(ctrnn::kummer_m({Complex(1.0), Complex(2.0), Complex(30.0)}, starved),
                  std::domain_error);
}

TEST_CASE("hermite recurrence") {
  CHECK(ctrnn::hermite(0, 3.7) == 1.0);
  CHECK(ctrnn::hermite(1, 3.0) == 6.0);
  CHECK(ctrnn::hermite(2, 2.0) == 14.0);
  CHECK(ctrnn::hermite(4, 1.5) == doctest::Approx(-15.0));
  CHECK_THROWS_AS(ctrnn::hermite(-1, 0.0), std::invalid_argument);
}

TEST_CASE("hermite parity") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> xs(-5.0, 5.0);
  for (int n = 0; n <= 12; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const double x = xs(rng);
      const double lhs = ctrnn::hermite(n, -x);
      const double rhs = (n % 2 == 0 ? 1.0 : -1.0) * ctrnn::hermite(n, x);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("hermite_via_kummer") {
  CHECK(ctrnn::hermite_via_kummer(2, 2.0) == doctest::Approx(14.0));
  CHECK(ctrnn::hermite_via_kummer(1, 3.0) == doctest::Approx(6.0));
  CHECK(ctrnn::hermite_via_kummer(4, 1.5) == doctest::Approx(-15.0));
  CHECK_THROWS_AS(ctrnn::hermite_via_kummer(151, 1.0), std::domain_error);
}

TEST_CASE("hermite and hermite_via_kummer agree on a grid") {
  for (int n = 0; n <= 10; ++n) {
    for (int i = 0; i <= 100; ++i) {
      const double x = -5.0 + 0.1 * i;
      const double direct = ctrnn::hermite(n, x);
      const double via = ctrnn::hermite_via_kummer(n, x);
      CHECK(std::abs(direct - via) <= 1e-10 * (1.0 + std::abs(direct)));
    }
  }
}
