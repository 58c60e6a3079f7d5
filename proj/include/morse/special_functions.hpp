#pragma once

#include "morse/precision.hpp"
#include "morse/scaled_value.hpp"

#include <complex>

namespace morse {

/// Whittaker function arguments: real kappa, complex mu, real x > 0
/// (principal branch only).
struct WhittakerParams {
  double kappa = 0;
  std::complex<double> mu{0, 0};
  double x = 1;

  void validate() const;
};

ScaledValue gamma_complex(std::complex<double> s, const PrecisionConfig& cfg = {});

/// 1F1(a, b; z) / Gamma(b), entire in all three arguments.
ScaledValue hyp1f1_regularized(std::complex<double> a, std::complex<double> b,
                               std::complex<double> z, const PrecisionConfig& cfg = {});

/// M_{kappa,mu}(x) = e^{-x/2} x^{1/2+mu} 1F1(1/2-kappa+mu, 1+2mu; x).
/// Throws PoleError when 2mu is a negative integer.
ScaledValue whittaker_m(const WhittakerParams& p, const PrecisionConfig& cfg = {});

/// M_{kappa,mu}(x) / Gamma(1+2mu); entire in mu.
ScaledValue whittaker_m_regularized(const WhittakerParams& p, const PrecisionConfig& cfg = {});

/// W_{kappa,mu}(x), principal branch.
///
/// Routes:
///  - 2mu within cfg.halfint_offset of an integer: symmetric averages at
///    mu +/- h and mu +/- 2h, combined by one Richardson step.
///  - mu purely imaginary: 2 Re[Gamma(-2mu)/Gamma(1/2-kappa-mu) M_{kappa,mu}(x)],
///    certified real.
///  - mu real: both connection terms are real, certified real.
///  - otherwise the plain two-term connection formula.
///
/// Throws PrecisionLossError when the estimated cancellation exceeds
/// working_digits - 6 digits.
ScaledValue whittaker_w(const WhittakerParams& p, const PrecisionConfig& cfg = {});

/// Same function through the uncertified two-term route (no axis-specific
/// forms). Used to cross-check the certified routes.
ScaledValue whittaker_w_two_term(const WhittakerParams& p, const PrecisionConfig& cfg = {});

/// dW_{kappa,mu}/dx via x W' = (x/2 - kappa) W_{kappa,mu} - W_{kappa+1,mu}.
ScaledValue whittaker_w_prime(const WhittakerParams& p, const PrecisionConfig& cfg = {});

/// Leading large-x form e^{-x/2} x^kappa.
ScaledValue whittaker_w_asymptotic(const WhittakerParams& p);

/// K_mu(w) = sqrt(pi/(2w)) W_{0,mu}(2w), w > 0.
ScaledValue k_bessel(std::complex<double> mu, double w, const PrecisionConfig& cfg = {});

/// Main term of the imaginary-order K-Bessel asymptotics for t > x > 0:
/// sqrt(2 pi) (t^2-x^2)^{-1/4} e^{-pi t/2} sin(t arccosh(t/x) - sqrt(t^2-x^2) + pi/4).
/// The e^{-pi t/2} factor is left out when `include_exponential` is false.
double k_bessel_asymptotic_imag(double t, double x, bool include_exponential = true);

/// Full-precision scientific rendering of W, regularized M, or K
/// (used by the CLI). Digits = cfg.working_digits.
enum class DisplayFunction { whittaker_w, whittaker_m_regularized, k_bessel };
std::string render_high_precision(DisplayFunction f, const WhittakerParams& p,
                                  const PrecisionConfig& cfg);

}  // namespace morse
