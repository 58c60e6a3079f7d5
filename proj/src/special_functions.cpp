#include "morse/special_functions.hpp"

#include "morse/detail/kernels.hpp"
#include "morse/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace morse {

using detail::Cx;

void WhittakerParams::validate() const {
  if (!(x > 0) || !std::isfinite(x)) throw DomainError("whittaker: x must be a finite positive real");
  if (!std::isfinite(kappa)) throw DomainError("whittaker: kappa must be finite");
  if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag()))
    throw DomainError("whittaker: mu must be finite");
}

ScaledValue gamma_complex(std::complex<double> s, const PrecisionConfig& cfg) {
  cfg.validate();
  return dispatch_precision(cfg, [&]<class R>() {
    Cx<R> g = detail::gamma(Cx<R>(s));
    return detail::to_scaled(g, s.imag() == 0.0);
  });
}

ScaledValue hyp1f1_regularized(std::complex<double> a, std::complex<double> b,
                               std::complex<double> z, const PrecisionConfig& cfg) {
  cfg.validate();
  return dispatch_precision(cfg, [&]<class R>() {
    auto s = detail::hyp1f1_series(Cx<R>(a), Cx<R>(b), Cx<R>(z), true, cfg);
    bool real = a.imag() == 0 && b.imag() == 0 && z.imag() == 0;
    return detail::to_scaled(s.sum, real);
  });
}

namespace {

ScaledValue whittaker_m_impl(const WhittakerParams& p, const PrecisionConfig& cfg, bool regularized) {
  p.validate();
  cfg.validate();
  if (!regularized) {
    // Gamma(1+2mu) poles: 2mu = -1, -2, ...
    std::complex<double> two = 2.0 * p.mu;
    double n = std::round(two.real());
    if (n <= -1 && std::abs(two - std::complex<double>(n, 0)) < 1e-12)
      throw PoleError("whittaker_m: 2mu is a negative integer; use whittaker_m_regularized");
  }
  return dispatch_precision(cfg, [&]<class R>() {
    auto s = detail::whittaker_m_series(R(p.kappa), Cx<R>(p.mu), R(p.x), regularized, cfg);
    return detail::to_scaled(s.sum, p.mu.imag() == 0.0);
  });
}

}  // namespace

ScaledValue whittaker_m(const WhittakerParams& p, const PrecisionConfig& cfg) {
  return whittaker_m_impl(p, cfg, false);
}

ScaledValue whittaker_m_regularized(const WhittakerParams& p, const PrecisionConfig& cfg) {
  return whittaker_m_impl(p, cfg, true);
}

ScaledValue whittaker_w(const WhittakerParams& p, const PrecisionConfig& cfg) {
  p.validate();
  cfg.validate();
  return dispatch_precision(cfg, [&]<class R>() {
    auto w = detail::whittaker_w_checked(R(p.kappa), Cx<R>(p.mu), R(p.x), cfg);
    return detail::to_scaled(w.value, w.real_certified);
  });
}

ScaledValue whittaker_w_two_term(const WhittakerParams& p, const PrecisionConfig& cfg) {
  p.validate();
  cfg.validate();
  return dispatch_precision(cfg, [&]<class R>() {
    auto w = detail::whittaker_w_checked(R(p.kappa), Cx<R>(p.mu), R(p.x), cfg,
                                         detail::WRoute::two_term);
    return detail::to_scaled(w.value, false);
  });
}

ScaledValue whittaker_w_prime(const WhittakerParams& p, const PrecisionConfig& cfg) {
  p.validate();
  cfg.validate();
  return dispatch_precision(cfg, [&]<class R>() {
    auto w = detail::whittaker_w_prime_eval(R(p.kappa), Cx<R>(p.mu), R(p.x), cfg);
    return detail::to_scaled(w.value, w.real_certified);
  });
}

ScaledValue whittaker_w_asymptotic(const WhittakerParams& p) {
  p.validate();
  return ScaledValue::from_log(-p.x / 2 + p.kappa * std::log(p.x), 0.0, true);
}

ScaledValue k_bessel(std::complex<double> mu, double w, const PrecisionConfig& cfg) {
  if (!(w > 0)) throw DomainError("k_bessel: w must be positive");
  ScaledValue wv = whittaker_w(WhittakerParams{0.0, mu, 2 * w}, cfg);
  return wv.scaled_by(std::sqrt(std::numbers::pi / (2 * w)));
}

double k_bessel_asymptotic_imag(double t, double x, bool include_exponential) {
  if (!(x > 0) || !(t > x)) throw DomainError("k_bessel_asymptotic_imag: requires t > x > 0");
  double r = std::sqrt(t * t - x * x);
  double phase = t * std::acosh(t / x) - r + std::numbers::pi / 4;
  double amp = std::sqrt(2 * std::numbers::pi) / std::sqrt(r);
  double v = amp * std::sin(phase);
  return include_exponential ? v * std::exp(-std::numbers::pi * t / 2) : v;
}

std::string render_high_precision(DisplayFunction f, const WhittakerParams& p,
                                  const PrecisionConfig& cfg) {
  p.validate();
  cfg.validate();
  return dispatch_precision(cfg, [&]<class R>() {
    Cx<R> v;
    bool real = false;
    double lost = 0;
    double cap = cfg.working_digits;
    switch (f) {
      case DisplayFunction::whittaker_w: {
        auto w = detail::whittaker_w_checked(R(p.kappa), Cx<R>(p.mu), R(p.x), cfg);
        v = w.value;
        real = w.real_certified;
        lost = w.digits_lost;
        cap = std::min(cap, w.truncation_digits);
        break;
      }
      case DisplayFunction::whittaker_m_regularized: {
        v = detail::whittaker_m_series(R(p.kappa), Cx<R>(p.mu), R(p.x), true, cfg).sum;
        real = p.mu.imag() == 0.0;
        break;
      }
      case DisplayFunction::k_bessel: {
        auto w = detail::whittaker_w_checked(R(0), Cx<R>(p.mu), R(2 * p.x), cfg);
        v = w.value * sqrt(detail::pi<R>() / R(2 * p.x));
        real = w.real_certified;
        lost = w.digits_lost;
        cap = std::min(cap, w.truncation_digits);
        break;
      }
    }
    // only the digits that survive the estimated cancellation
    double usable = std::min(cfg.working_digits - std::ceil(lost) - 3, std::floor(cap));
    int shown = std::max(17, static_cast<int>(usable));
    std::ostringstream os;
    os << std::scientific << std::setprecision(shown - 1) << v.re;
    if (!real) {
      os << (v.im < 0 ? " - " : " + ") << std::setprecision(shown - 1) << abs(v.im) << "i";
    }
    return os.str();
  });
}

}  // namespace morse
