#pragma once

// Precision-generic kernels behind the special_functions API. Every routine is
// a pure function of its arguments; the real type R carries the precision.

#include "morse/detail/mp_complex.hpp"
#include "morse/errors.hpp"
#include "morse/precision.hpp"
#include "morse/scaled_value.hpp"

#include <boost/math/special_functions/bernoulli.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace morse::detail {

template <class R>
int digits_of() {
  return std::numeric_limits<R>::digits10;
}

template <class R>
R pow10(int e) {
  return pow(R(10), R(e));
}

/// Converts a high-precision complex to scaled form without passing through
/// double range.
template <class R>
ScaledValue to_scaled(const Cx<R>& v, bool real_certified) {
  R m = abs(v);
  if (m == 0) return ScaledValue({0.0, 0.0}, 0, real_certified);
  auto e = static_cast<std::int64_t>(floor(log10(m)));
  R f = pow(R(10), R(-e));
  std::complex<double> s(static_cast<double>(v.re * f), static_cast<double>(v.im * f));
  return ScaledValue(s, e, real_certified);
}

/// True when s is within tol of 0, -1, -2, ...
template <class R>
bool near_nonpositive_integer(const Cx<R>& s, const R& tol) {
  if (s.re > R(0.5)) return false;
  R n = round(s.re);
  return n <= 0 && abs(s.re - n) <= tol && abs(s.im) <= tol;
}

template <class R>
bool exact_nonpositive_integer(const Cx<R>& s) {
  return s.im == 0 && s.re <= 0 && s.re == round(s.re);
}

/// log Gamma(w) by the Stirling series; caller guarantees |w| large enough
/// that the truncated series meets the precision of R.
template <class R>
Cx<R> log_gamma_stirling(const Cx<R>& w) {
  const R half(0.5);
  Cx<R> res = (w - Cx<R>(half)) * log(w) - w + Cx<R>(half * log(2 * pi<R>()));
  const R eps = pow10<R>(-(digits_of<R>() + 4));
  Cx<R> inv = Cx<R>(R(1)) / w;
  Cx<R> inv2 = inv * inv;
  Cx<R> pw = inv;  // w^{-(2k-1)}
  for (int k = 1; k < 400; ++k) {
    R b = boost::math::bernoulli_b2n<R>(k);
    Cx<R> term = pw * (b / R(2 * k * (2 * k - 1)));
    res += term;
    if (abs(term) < eps * std::max(R(1), abs(res))) break;
    pw *= inv2;
  }
  return res;
}

/// Magnitude below which the Stirling series is shifted upward. Keeps the
/// smallest series term, about e^{-2 pi |w|}, below the working epsilon.
template <class R>
R stirling_threshold() {
  return std::max(R(10), R(0.45 * digits_of<R>() + 2));
}

/// Gamma(s) for Re(s) >= 1/2 via recurrence shift into Re >= threshold.
template <class R>
Cx<R> gamma_right(const Cx<R>& s) {
  const R thr = stirling_threshold<R>();
  Cx<R> w = s;
  Cx<R> prod(R(1));
  while (w.re < thr) {
    prod *= w;
    w.re += 1;
  }
  return exp(log_gamma_stirling(w)) / prod;
}

/// Gamma(s) for complex s. Reflection handles Re(s) < 1/2.
template <class R>
Cx<R> gamma(const Cx<R>& s) {
  const R tol = pow10<R>(-digits_of<R>() / 2);
  if (near_nonpositive_integer(s, tol)) {
    throw PoleError("gamma: argument " + std::to_string(static_cast<double>(s.re)) + "+" +
                    std::to_string(static_cast<double>(s.im)) + "i is a pole");
  }
  if (s.re >= R(0.5)) return gamma_right(s);
  Cx<R> one_minus = Cx<R>(R(1)) - s;
  return Cx<R>(pi<R>()) / (sin(pi<R>() * s) * gamma_right(one_minus));
}

/// 1/Gamma(s), entire; exactly 0 at 0, -1, -2, ...
template <class R>
Cx<R> rgamma(const Cx<R>& s) {
  if (exact_nonpositive_integer(s)) return {};
  if (s.re >= R(0.5)) return Cx<R>(R(1)) / gamma_right(s);
  Cx<R> one_minus = Cx<R>(R(1)) - s;
  return sin(pi<R>() * s) * gamma_right(one_minus) / Cx<R>(pi<R>());
}

template <class R>
struct SeriesResult {
  Cx<R> sum;
  R max_term{0};
  int terms = 0;

  /// log10(max |term| / |sum|), 0 when there is no cancellation.
  double digits_lost() const {
    R s = abs(sum);
    if (s == 0) return max_term == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    double d = static_cast<double>(log10(max_term / s));
    return std::max(0.0, d);
  }
};

/// Kummer series for 1F1(a, b; z) (regularized = false) or
/// 1F1(a, b; z)/Gamma(b) (regularized = true).
template <class R>
SeriesResult<R> hyp1f1_series(const Cx<R>& a, const Cx<R>& b, const Cx<R>& z, bool regularized,
                              const PrecisionConfig& cfg) {
  SeriesResult<R> out;
  const R tail(cfg.series_tail_rel);
  const R zabs = abs(z);
  int j = 0;
  Cx<R> term;
  if (!regularized) {
    const R tol = pow10<R>(-digits_of<R>() / 2);
    if (near_nonpositive_integer(b, tol)) throw PoleError("hyp1f1: b is a nonpositive integer");
    term = Cx<R>(R(1));
  } else if (exact_nonpositive_integer(b)) {
    // 1/Gamma(b + j) vanishes for j <= -b; the series starts at j = 1 - b.
    int m = static_cast<int>(-b.re);
    term = Cx<R>(R(1));
    for (int i = 0; i <= m; ++i) {
      term *= (a + Cx<R>(R(i))) * z;
      term *= R(1) / R(i + 1);
    }
    j = m + 1;  // b + j == 1, Gamma(1) == 1
  } else {
    term = rgamma(b);
  }
  out.sum = term;
  out.max_term = abs(term);
  int small_run = abs(term) == 0 ? 1 : 0;
  for (int n = 1; n < cfg.series_max_terms; ++n, ++j) {
    term *= (a + Cx<R>(R(j))) * z / ((b + Cx<R>(R(j))) * Cx<R>(R(j + 1)));
    out.sum += term;
    R ta = abs(term);
    if (ta > out.max_term) out.max_term = ta;
    bool small = ta <= tail * abs(out.sum);
    small_run = small ? small_run + 1 : 0;
    if (small_run >= 2 && R(j) > zabs) {
      out.terms = n + 1;
      return out;
    }
  }
  throw ConvergenceError("hyp1f1: series did not converge within " +
                         std::to_string(cfg.series_max_terms) + " terms");
}

/// M_{kappa,mu}(x) or its Buchholz-normalized form M/Gamma(1+2mu).
template <class R>
SeriesResult<R> whittaker_m_series(const R& kappa, const Cx<R>& mu, const R& x, bool regularized,
                                   const PrecisionConfig& cfg) {
  const R half(0.5);
  Cx<R> a = Cx<R>(half - kappa) + mu;
  Cx<R> b = Cx<R>(R(1)) + mu * R(2);
  SeriesResult<R> s = hyp1f1_series(a, b, Cx<R>(x), regularized, cfg);
  Cx<R> pref = exp(Cx<R>(-x / 2) + (Cx<R>(half) + mu) * Cx<R>(log(x)));
  s.sum *= pref;
  s.max_term *= abs(pref);
  return s;
}

template <class R>
struct WEval {
  Cx<R> value;
  double digits_lost = 0;
  bool real_certified = false;
  /// Cap from the near-integer extrapolation error, (3h)^6.
  double truncation_digits = std::numeric_limits<double>::infinity();
};

/// Gamma(-2mu)/Gamma(1/2-kappa-mu) * M_{kappa,mu}(x), one half of the
/// two-term connection formula.
template <class R>
SeriesResult<R> connection_term(const R& kappa, const Cx<R>& mu, const R& x,
                                const PrecisionConfig& cfg) {
  Cx<R> coef = gamma(-(mu * R(2))) * rgamma(Cx<R>(R(0.5) - kappa) - mu);
  if (is_zero(coef)) return {};
  SeriesResult<R> m = whittaker_m_series(kappa, mu, x, false, cfg);
  m.sum *= coef;
  m.max_term *= abs(coef);
  return m;
}

enum class WRoute { automatic, two_term };

template <class R>
double combination_loss(const R& part_max, const R& total) {
  if (part_max == 0) return 0.0;
  if (total == 0) return std::numeric_limits<double>::infinity();
  return std::max(0.0, static_cast<double>(log10(part_max / total)));
}

/// Two-term connection formula without the near-integer 2mu treatment.
/// `axis_aware` selects the conjugate-pair form on the imaginary axis and
/// exact reality on the real axis.
template <class R>
WEval<R> whittaker_w_connection(const R& kappa, const Cx<R>& mu, const R& x,
                                const PrecisionConfig& cfg, bool axis_aware) {
  WEval<R> out;
  if (axis_aware && mu.re == 0 && mu.im != 0) {
    SeriesResult<R> t = connection_term(kappa, mu, x, cfg);
    out.value = Cx<R>(R(2) * t.sum.re);
    out.real_certified = true;
    out.digits_lost =
        t.digits_lost() + combination_loss(abs(t.sum), abs(out.value.re) / R(2));
    return out;
  }
  SeriesResult<R> t1 = connection_term(kappa, mu, x, cfg);
  SeriesResult<R> t2 = connection_term(kappa, -mu, x, cfg);
  out.value = t1.sum + t2.sum;
  if (axis_aware && mu.im == 0) {
    out.value.im = 0;
    out.real_certified = true;
  }
  R part = std::max(abs(t1.sum), abs(t2.sum));
  out.digits_lost = std::max(t1.digits_lost(), t2.digits_lost()) +
                    combination_loss(part, abs(out.value));
  return out;
}

/// Distance of 2mu from the nearest integer.
template <class R>
R halfint_distance(const Cx<R>& mu) {
  Cx<R> two = mu * R(2);
  R n = round(two.re);
  return hypot(two.re - n, two.im);
}

template <class R>
WEval<R> whittaker_w_eval(const R& kappa, const Cx<R>& mu, const R& x, const PrecisionConfig& cfg,
                          WRoute route = WRoute::automatic) {
  if (!(x > 0)) throw DomainError("whittaker_w: x must be positive");
  const bool axis_aware = route == WRoute::automatic;
  const R h(cfg.halfint_offset);
  if (halfint_distance(mu) >= h) return whittaker_w_connection(kappa, mu, x, cfg, axis_aware);

  // 2mu sits on (or next to) an integer where the Gamma coefficients have
  // poles. Symmetric averages A(h) = [W(mu+h) + W(mu-h)]/2 are even in h;
  // combining h, 2h, 3h removes the h^2 and h^4 terms.
  double loss = 0;
  auto avg = [&](const R& step) {
    WEval<R> p = whittaker_w_connection(kappa, mu + Cx<R>(step), x, cfg, axis_aware);
    WEval<R> m = whittaker_w_connection(kappa, mu - Cx<R>(step), x, cfg, axis_aware);
    loss = std::max({loss, p.digits_lost, m.digits_lost});
    return (p.value + m.value) * R(0.5);
  };
  Cx<R> a1 = avg(h);
  Cx<R> a2 = avg(2 * h);
  Cx<R> a3 = avg(3 * h);
  WEval<R> out;
  out.value = (a1 * R(15) - a2 * R(6) + a3) * (R(1) / R(10));
  if (axis_aware && (mu.im == 0 || mu.re == 0)) {
    out.value.im = 0;
    out.real_certified = true;
  }
  out.digits_lost = loss;
  out.truncation_digits = -6 * std::log10(3 * cfg.halfint_offset);
  return out;
}

/// Throws PrecisionLossError when the estimated loss exceeds the budget.
template <class R>
void check_loss(const WEval<R>& w, const PrecisionConfig& cfg, const char* where) {
  double budget = cfg.working_digits - 6;
  if (w.digits_lost > budget) {
    throw PrecisionLossError(std::string(where) + ": estimated " + std::to_string(w.digits_lost) +
                                 " digits lost exceeds budget " + std::to_string(budget),
                             w.digits_lost);
  }
}

template <class R>
WEval<R> whittaker_w_checked(const R& kappa, const Cx<R>& mu, const R& x, const PrecisionConfig& cfg,
                             WRoute route = WRoute::automatic) {
  WEval<R> w = whittaker_w_eval(kappa, mu, x, cfg, route);
  check_loss(w, cfg, "whittaker_w");
  return w;
}

/// dW/dx from x W' = (x/2 - kappa) W_{kappa,mu} - W_{kappa+1,mu}.
template <class R>
WEval<R> whittaker_w_prime_eval(const R& kappa, const Cx<R>& mu, const R& x,
                                const PrecisionConfig& cfg) {
  WEval<R> w0 = whittaker_w_checked(kappa, mu, x, cfg);
  WEval<R> w1 = whittaker_w_checked(R(kappa + 1), mu, x, cfg);
  WEval<R> out;
  out.value = (w0.value * R(x / 2 - kappa) - w1.value) * (R(1) / x);
  out.real_certified = w0.real_certified && w1.real_certified;
  if (out.real_certified) out.value.im = 0;
  out.digits_lost = std::max(w0.digits_lost, w1.digits_lost);
  return out;
}

}  // namespace morse::detail
