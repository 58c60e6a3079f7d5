#pragma once

// Reference values computed by routes that share no code with the library:
// cpp_bin_float arithmetic instead of mpfr, plain quadrature, direct series.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <complex>

namespace oracle {

namespace bmp = boost::multiprecision;
using F = bmp::cpp_bin_float_50;
using C = bmp::cpp_complex_50;

inline std::complex<double> to_std(const C& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// Gamma by recurrence shift to Re s >= 40, then Stirling (40+ digits).
inline C gamma(C s) {
  C prod = 1;
  while (s.real() < 40) {
    prod *= s;
    s += 1;
  }
  const F half_log_2pi = log(2 * boost::math::constants::pi<F>()) / 2;
  C lg = (s - F(0.5)) * log(s) - s + half_log_2pi;
  C sp = s;
  C s2 = s * s;
  for (int n = 1; n <= 30; ++n) {
    F b = boost::math::bernoulli_b2n<F>(n);
    lg += C(b / F(2 * n * (2 * n - 1))) / sp;
    sp *= s2;
  }
  return exp(lg) / prod;
}

/// Direct Kummer series 1F1(a, b; z), 50-digit arithmetic.
inline C hyp1f1(const C& a, const C& b, const C& z) {
  C term = 1, sum = 1;
  for (int j = 0; j < 20000; ++j) {
    term *= (a + F(j)) * z / ((b + F(j)) * F(j + 1));
    sum += term;
    if (abs(term) < F("1e-45") * abs(sum) && j > abs(z)) break;
  }
  return sum;
}

/// M_{kappa,mu}(x) from its defining series.
inline C whittaker_m(double kappa, std::complex<double> mu, double x) {
  C m(F(mu.real()), F(mu.imag()));
  F X(x);
  C pre = exp(C(-X / 2)) * exp((F(0.5) + m) * log(C(X)));
  return pre * hyp1f1(F(0.5) - F(kappa) + m, F(1) + 2 * m, C(X));
}

/// M_{kappa,mu}(x) / Gamma(1 + 2 mu) at mu = mu0 by Richardson extrapolation
/// of mu0 + delta, delta in {1e-4, 1e-5, 1e-6}.
inline std::complex<double> whittaker_m_regularized_limit(double kappa, double mu0, double x) {
  auto f = [&](double d) {
    std::complex<double> mu(mu0 + d, 0);
    C m(F(mu.real()), F(0));
    return whittaker_m(kappa, mu, x) / gamma(F(1) + 2 * m);
  };
  C a = f(1e-4), b = f(1e-5), c = f(1e-6);
  C r1 = (F(10) * b - a) / F(9);
  C r2 = (F(10) * c - b) / F(9);
  return to_std((F(100) * r2 - r1) / F(99));
}

/// erf(x) = 2/sqrt(pi) int_0^x e^{-t^2} dt by Gauss-Kronrod.
inline double erf_quadrature(double x) {
  auto f = [](double t) { return std::exp(-t * t); };
  double I = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, x, 15, 1e-15);
  return 2 / std::sqrt(M_PI) * I;
}

/// K_0(1) = int_0^inf e^{-cosh t} dt.
inline double k0_of_one() {
  auto f = [](double t) { return std::exp(-std::cosh(t)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 10.0, 20, 1e-15);
}

}  // namespace oracle
