#include "morse/m_function.hpp"

#include "morse/errors.hpp"
#include "morse/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace morse {

std::complex<double> m_principal(double k, double u0, std::complex<double> z,
                                 const PrecisionConfig& cfg) {
  double x0 = std::exp(u0);
  std::complex<double> mu{-z.imag(), z.real()};  // i z
  ScaledValue den, num;
  try {
    den = whittaker_w({-k, mu, x0}, cfg);
  } catch (const PrecisionLossError&) {
    throw PoleError("m_principal: denominator W vanishes (precision exhausted)");
  }
  num = whittaker_w({1 - k, mu, x0}, cfg);
  if (den.is_zero() || (num / den).log10_abs() > 8)
    throw PoleError("m_principal: E is a Dirichlet eigenvalue");
  std::complex<double> ratio = (num / den).to_complex();
  return -ratio + (x0 / 2 + k - 0.5);
}

std::complex<double> m_of_energy(double k, double u0, std::complex<double> E,
                                 const PrecisionConfig& cfg) {
  std::complex<double> z;
  if (E.imag() == 0.0) {
    z = E.real() >= 0 ? std::complex<double>(std::sqrt(E.real()), 0.0)
                      : std::complex<double>(0.0, std::sqrt(-E.real()));
  } else {
    z = std::sqrt(E);
    if (z.imag() < 0) z = -z;
  }
  std::complex<double> m = m_principal(k, u0, z, cfg);
  if (E.imag() == 0.0) m.imag(0.0);
  return m;
}

std::complex<double> fractional_linear(std::complex<double> m0, double alpha) {
  double c = std::cos(alpha), s = std::sin(alpha);
  std::complex<double> den = s * m0 + c;
  if (std::abs(den) < 1e-8 * (std::abs(s * m0) + std::abs(c)))
    throw PoleError("m_alpha: E is an eigenvalue for this boundary angle");
  return (c * m0 - s) / den;
}

std::complex<double> m_alpha(double k, double u0, std::complex<double> z, double alpha,
                             const PrecisionConfig& cfg) {
  std::complex<double> m0;
  try {
    m0 = m_principal(k, u0, z, cfg);
  } catch (const PoleError&) {
    // m0 = infinity maps to cos/sin.
    double s = std::sin(alpha);
    if (std::abs(s) < 1e-15) throw;
    return {std::cos(alpha) / s, 0.0};
  }
  return fractional_linear(m0, alpha);
}

double riccati_residual(double k, double u0, std::complex<double> E, double h,
                        const PrecisionConfig& cfg) {
  if (!(h >= 1e-6 && h <= 1e-3)) throw DomainError("riccati_residual: h must lie in [1e-6, 1e-3]");
  std::complex<double> mp = m_of_energy(k, u0 + h, E, cfg);
  std::complex<double> mm = m_of_energy(k, u0 - h, E, cfg);
  std::complex<double> m = m_of_energy(k, u0, E, cfg);
  std::complex<double> dm = (mp - mm) / (2 * h);
  return std::abs(dm + m * m - (potential_value(k, u0) - E));
}

namespace {

// Real m(E) without the pole threshold; used inside bisection.
double m_unchecked(double k, double u0, double E, const PrecisionConfig& cfg) {
  return with_escalation(cfg, [&](const PrecisionConfig& c) {
    double x0 = std::exp(u0);
    std::complex<double> mu = E >= 0 ? std::complex<double>(0.0, std::sqrt(E))
                                     : std::complex<double>(std::sqrt(-E), 0.0);
    ScaledValue den = whittaker_w({-k, mu, x0}, c);
    ScaledValue num = whittaker_w({1 - k, mu, x0}, c);
    if (den.is_zero()) throw PoleError("m: exact pole");
    double r = (num / den).to_complex().real();
    return -r + (x0 / 2 + k - 0.5);
  });
}

double m_real(double k, double u0, double E, const PrecisionConfig& cfg) {
  return with_escalation(cfg, [&](const PrecisionConfig& c) {
    return m_of_energy(k, u0, {E, 0.0}, c).real();
  });
}

}  // namespace

CorrespondenceReport pole_zero_correspondence(const MorseProblem& prob, int n,
                                              bool throw_on_violation, const ScanOptions& opt) {
  if (n < 1) throw DomainError("pole_zero_correspondence: n must be >= 1");
  MorseProblem p = prob;
  p.alpha = 0;
  CorrespondenceReport rep;
  rep.dirichlet = dirichlet_eigenvalues(p, n, opt);
  MorseProblem pn = p;
  pn.alpha = std::numbers::pi / 2;
  rep.neumann = eigenvalues_general_alpha(pn, n, 1e5, opt);

  const PrecisionConfig& cfg = opt.precision;
  auto safe_m = [&](double E) {
    for (int i = 0; i < 4; ++i) {
      try {
        return m_real(p.k, p.u0, E, cfg);
      } catch (const PoleError&) {
        E += 1e-9 * std::max(1.0, std::abs(E));
      }
    }
    return m_real(p.k, p.u0, E, cfg);
  };

  double L = p.k < 0 ? -p.k * p.k - 1 : -1.0;
  auto next = [](double E) {
    if (E < 1) return std::min(E + 0.05, 1.0);
    double t = std::sqrt(E);
    return E + std::min(0.025 * E, t * density_step(t));
  };
  double E = L;
  double mv = safe_m(E);
  while ((static_cast<int>(rep.poles.size()) < n || static_cast<int>(rep.zeros.size()) < n) &&
         E < 1e5) {
    double En = next(E);
    double mn = safe_m(En);
    if ((mv < 0) != (mn < 0)) {
      bool is_pole = mv > 0;  // m increases between poles, so + -> - is a jump
      double lo = E, hi = En, flo = mv;
      double root = 0;
      bool done = false;
      while (hi - lo > 1e-13 * std::max(1.0, std::abs(hi))) {
        double mid = 0.5 * (lo + hi);
        double fm;
        try {
          fm = m_unchecked(p.k, p.u0, mid, cfg);
        } catch (const NumericError&) {
          root = mid;
          done = true;
          break;
        }
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      if (!done) root = 0.5 * (lo + hi);
      (is_pole ? rep.poles : rep.zeros).push_back(root);
    }
    E = En;
    mv = mn;
  }

  auto match = [](const std::vector<double>& want, const std::vector<double>& have, int n) {
    int m = 0;
    for (int i = 0; i < n && i < static_cast<int>(want.size()); ++i) {
      bool ok = std::any_of(have.begin(), have.end(),
                            [&](double h) { return std::abs(h - want[i]) <= 1e-6; });
      if (!ok) return std::make_pair(m, want[i]);
      ++m;
    }
    return std::make_pair(m, std::numeric_limits<double>::quiet_NaN());
  };
  auto [pm, pbad] = match(rep.dirichlet, rep.poles, n);
  auto [zm, zbad] = match(rep.neumann, rep.zeros, n);
  rep.pole_matches = pm;
  rep.zero_matches = zm;

  rep.interlaced = true;
  for (std::size_t i = 0; i + 1 < rep.poles.size(); ++i) {
    long c = std::count_if(rep.zeros.begin(), rep.zeros.end(),
                           [&](double z) { return z > rep.poles[i] && z < rep.poles[i + 1]; });
    if (c != 1) rep.interlaced = false;
  }

  rep.monotone_between = true;
  for (std::size_t i = 0; i + 1 < rep.poles.size() && i < 3; ++i) {
    double a = rep.poles[i], b = rep.poles[i + 1];
    double prev = -std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 20; ++j) {
      double v = safe_m(a + (b - a) * j / 21.0);
      if (!(v > prev)) rep.monotone_between = false;
      prev = v;
    }
  }

  if (throw_on_violation) {
    if (pm < n) throw CorrespondenceViolation("Dirichlet eigenvalue without a matching pole of m", pbad);
    if (zm < n) throw CorrespondenceViolation("Neumann eigenvalue without a matching zero of m", zbad);
  }
  return rep;
}

HerglotzSweep herglotz_sweep(double k, double u0, int samples, std::uint64_t seed, double e_max,
                             double im_min, const PrecisionConfig& cfg) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-e_max, e_max), im(im_min, e_max);
  HerglotzSweep s;
  s.min_imag = std::numeric_limits<double>::infinity();
  while (s.samples < samples) {
    std::complex<double> E(re(rng), im(rng));
    if (std::abs(E) > e_max) continue;
    std::complex<double> m = m_of_energy(k, u0, E, cfg);
    ++s.samples;
    if (!(m.imag() > 0)) ++s.violations;
    s.min_imag = std::min(s.min_imag, m.imag());
  }
  return s;
}

double asymptotic_sup(double k, double u0, double radius, int n_angles, double eps,
                      const PrecisionConfig& cfg) {
  double sup = 0;
  double a0 = eps, a1 = std::numbers::pi / 2 - eps;
  for (int i = 0; i < n_angles; ++i) {
    double th = n_angles == 1 ? a0 : a0 + (a1 - a0) * i / (n_angles - 1);
    std::complex<double> z = std::polar(radius, th);
    std::complex<double> m = m_principal(k, u0, z, cfg);
    sup = std::max(sup, std::abs(m - std::complex<double>(0, 1) * z));
  }
  return sup;
}

std::vector<MFunctionSample> m_table(double k, double u0, double alpha,
                                     const std::vector<std::complex<double>>& energies,
                                     const PrecisionConfig& cfg) {
  std::vector<MFunctionSample> rows;
  for (auto E : energies) {
    std::complex<double> z = std::sqrt(E);
    if (z.imag() < 0) z = -z;
    MFunctionSample s{u0, E, {}, alpha};
    s.value = m_alpha(k, u0, z, alpha, cfg);
    if (E.imag() == 0.0) s.value.imag(0.0);
    rows.push_back(s);
  }
  return rows;
}

}  // namespace morse
