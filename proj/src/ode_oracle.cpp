#include "morse/ode_oracle.hpp"

#include "morse/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace morse::oracle {

using cld = std::complex<long double>;

void IntegrationSpec::validate() const {
  if (!(x_end > 0) || !(x_start > x_end)) throw DomainError("IntegrationSpec: need x_start > x_end > 0");
  if (!(rel_tol > 0) || !(abs_tol > 0)) throw DomainError("IntegrationSpec: tolerances must be positive");
  if (max_steps < 1) throw DomainError("IntegrationSpec: max_steps must be positive");
}

double default_anchor(double kappa, std::complex<double> mu) {
  return std::max(60.0, 10.0 * (1.0 + std::norm(mu) + kappa * kappa));
}

namespace {

ScaledValue scaled(cld v, long double log_scale) {
  std::complex<double> s(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  if (s == std::complex<double>(0, 0)) return ScaledValue();
  return ScaledValue::from_complex(s) * ScaledValue::from_log(static_cast<double>(log_scale), 0.0, true);
}

// Hermite cubic on [x0, x1]; returns (value, derivative) in node-0 units.
std::pair<cld, cld> hermite(const OdeTable::Node& a, const OdeTable::Node& b, double x) {
  long double h = b.x - a.x;
  long double t = (x - a.x) / h;
  long double rel = std::exp(b.log_scale - a.log_scale);
  cld f0 = a.f, d0 = a.fp * h, f1 = b.f * rel, d1 = b.fp * h * rel;
  long double t2 = t * t, t3 = t2 * t;
  cld v = (2 * t3 - 3 * t2 + 1) * f0 + (t3 - 2 * t2 + t) * d0 + (-2 * t3 + 3 * t2) * f1 +
          (t3 - t2) * d1;
  cld dv = ((6 * t2 - 6 * t) * f0 + (3 * t2 - 4 * t + 1) * d0 + (-6 * t2 + 6 * t) * f1 +
            (3 * t2 - 2 * t) * d1) /
           h;
  return {v, dv};
}

}  // namespace

ScaledValue OdeTable::final_value() const {
  const Node& n = nodes_.back();
  return scaled(n.f, n.log_scale);
}

ScaledValue OdeTable::final_derivative() const {
  const Node& n = nodes_.back();
  return scaled(n.fp, n.log_scale);
}

namespace {

std::size_t locate(const std::vector<OdeTable::Node>& nodes, double x) {
  double lo = std::min(nodes.front().x, nodes.back().x);
  double hi = std::max(nodes.front().x, nodes.back().x);
  if (x < lo || x > hi) throw DomainError("OdeTable: x outside the integrated range");
  bool decreasing = nodes.back().x < nodes.front().x;
  auto it = decreasing
                ? std::lower_bound(nodes.begin(), nodes.end(), x,
                                   [](const OdeTable::Node& n, double v) { return n.x > v; })
                : std::lower_bound(nodes.begin(), nodes.end(), x,
                                   [](const OdeTable::Node& n, double v) { return n.x < v; });
  std::size_t i = static_cast<std::size_t>(it - nodes.begin());
  if (i == 0) i = 1;
  if (i >= nodes.size()) i = nodes.size() - 1;
  return i - 1;
}

}  // namespace

ScaledValue OdeTable::value_at(double x) const {
  std::size_t i = locate(nodes_, x);
  return scaled(hermite(nodes_[i], nodes_[i + 1], x).first, nodes_[i].log_scale);
}

ScaledValue OdeTable::derivative_at(double x) const {
  std::size_t i = locate(nodes_, x);
  return scaled(hermite(nodes_[i], nodes_[i + 1], x).second, nodes_[i].log_scale);
}

std::pair<cld, cld> asymptotic_initial_data(double kappa, std::complex<double> mu, double x,
                                            int terms) {
  // W ~ e^{-x/2} x^kappa sum_n (1/2+mu-kappa)_n (1/2-mu-kappa)_n / n! (-x)^{-n}
  cld a(0.5L - kappa + mu.real(), mu.imag());
  cld b(0.5L - kappa - mu.real(), -mu.imag());
  long double X = x;
  cld c = 1;  // c_n x^{-n}
  cld s = c, ds = 0;
  long double prev = 1;
  int limit = terms < 0 ? 400 : terms;
  for (int n = 0; n < limit; ++n) {
    cld next = c * (a + static_cast<long double>(n)) * (b + static_cast<long double>(n)) /
               (-(static_cast<long double>(n) + 1) * X);
    long double mag = std::abs(next);
    if (terms < 0 && (mag >= prev || mag < 1e-21L * std::abs(s))) {
      if (mag < prev && mag < 1e-21L * std::abs(s)) {
        s += next;
        ds += next * (-(static_cast<long double>(n) + 1) / X);
      }
      break;
    }
    s += next;
    ds += next * (-(static_cast<long double>(n) + 1) / X);
    c = next;
    prev = mag;
  }
  // f = e^{-x/2} x^kappa s(x): f' / (e^{-x/2} x^kappa) = (kappa/x - 1/2) s + s'
  cld fp = (static_cast<long double>(kappa) / X - 0.5L) * s + ds;
  return {s, fp};
}

OdeTable integrate_whittaker_ode(double kappa, std::complex<double> mu, double x_from, cld f0,
                                 cld fp0, double log_scale0, double x_to, double rel_tol,
                                 double abs_tol, int max_steps) {
  if (!(x_from > 0) || !(x_to > 0)) throw DomainError("integrate_whittaker_ode: x must be positive");
  const cld mu2 = cld(mu.real(), mu.imag()) * cld(mu.real(), mu.imag());
  const long double K = kappa;
  auto q = [&](long double x) { return 0.25L - K / x - (0.25L - mu2) / (x * x); };

  // Dormand-Prince 5(4) tableau.
  constexpr long double c2 = 1.0L / 5, c3 = 3.0L / 10, c4 = 4.0L / 5, c5 = 8.0L / 9;
  constexpr long double a21 = 1.0L / 5;
  constexpr long double a31 = 3.0L / 40, a32 = 9.0L / 40;
  constexpr long double a41 = 44.0L / 45, a42 = -56.0L / 15, a43 = 32.0L / 9;
  constexpr long double a51 = 19372.0L / 6561, a52 = -25360.0L / 2187, a53 = 64448.0L / 6561,
                        a54 = -212.0L / 729;
  constexpr long double a61 = 9017.0L / 3168, a62 = -355.0L / 33, a63 = 46732.0L / 5247,
                        a64 = 49.0L / 176, a65 = -5103.0L / 18656;
  constexpr long double b1 = 35.0L / 384, b3 = 500.0L / 1113, b4 = 125.0L / 192,
                        b5 = -2187.0L / 6784, b6 = 11.0L / 84;
  constexpr long double e1 = 71.0L / 57600, e3 = -71.0L / 16695, e4 = 71.0L / 1920,
                        e5 = -17253.0L / 339200, e6 = 22.0L / 525, e7 = -1.0L / 40;

  struct St {
    cld f, g;
  };
  auto rhs = [&](long double x, const St& y) { return St{y.g, q(x) * y.f}; };
  auto comb = [](const St& y, std::initializer_list<std::pair<long double, St>> ks, long double h) {
    St r = y;
    for (auto& [w, k] : ks) {
      r.f += h * w * k.f;
      r.g += h * w * k.g;
    }
    return r;
  };

  std::vector<OdeTable::Node> nodes;
  long double L = log_scale0;
  {
    long double s = std::max(std::abs(f0), std::abs(fp0));
    if (s == 0) throw DomainError("integrate_whittaker_ode: zero initial data");
    f0 /= s;
    fp0 /= s;
    L += std::log(s);
  }
  nodes.push_back({x_from, f0, fp0, L});

  const long double dir = x_to < x_from ? -1 : 1;
  long double x = x_from;
  St y{f0, fp0};
  long double span = std::abs(static_cast<long double>(x_to) - x_from);
  long double h = dir * std::min<long double>(0.05L, span / 100);
  St k1 = rhs(x, y);
  int steps = 0;
  while (dir * (x_to - x) > 0) {
    if (++steps > max_steps) throw StiffnessError("integrate_whittaker_ode: max_steps exceeded");
    if (dir * (x + h - x_to) > 0) h = x_to - x;
    St k2 = rhs(x + c2 * h, comb(y, {{a21, k1}}, h));
    St k3 = rhs(x + c3 * h, comb(y, {{a31, k1}, {a32, k2}}, h));
    St k4 = rhs(x + c4 * h, comb(y, {{a41, k1}, {a42, k2}, {a43, k3}}, h));
    St k5 = rhs(x + c5 * h, comb(y, {{a51, k1}, {a52, k2}, {a53, k3}, {a54, k4}}, h));
    St k6 = rhs(x + h, comb(y, {{a61, k1}, {a62, k2}, {a63, k3}, {a64, k4}, {a65, k5}}, h));
    St yn = comb(y, {{b1, k1}, {b3, k3}, {b4, k4}, {b5, k5}, {b6, k6}}, h);
    St k7 = rhs(x + h, yn);
    cld ef = h * (e1 * k1.f + e3 * k3.f + e4 * k4.f + e5 * k5.f + e6 * k6.f + e7 * k7.f);
    cld eg = h * (e1 * k1.g + e3 * k3.g + e4 * k4.g + e5 * k5.g + e6 * k6.g + e7 * k7.g);
    long double mag = std::max({std::abs(y.f), std::abs(y.g), std::abs(yn.f), std::abs(yn.g)});
    long double sc = abs_tol + rel_tol * mag;
    long double err = std::max(std::abs(ef), std::abs(eg)) / sc;
    if (!std::isfinite(static_cast<double>(err))) err = 1e10L;

    if (err <= 1) {
      x += h;
      y = yn;
      k1 = k7;
      long double s = std::max(std::abs(y.f), std::abs(y.g));
      y.f /= s;
      y.g /= s;
      k1.f /= s;
      k1.g /= s;
      L += std::log(s);
      nodes.push_back({static_cast<double>(x), y.f, y.g, L});
    }
    long double fac = err == 0 ? 5.0L : 0.9L * std::pow(err, -0.2L);
    h *= std::clamp(fac, 0.2L, 5.0L);
    if (std::abs(h) < 1e-12L * std::max<long double>(1, std::abs(x)) && dir * (x_to - x) > 1e-12L)
      throw StiffnessError("integrate_whittaker_ode: step size collapsed");
  }
  nodes.back().x = x_to;
  return OdeTable(std::move(nodes));
}

OdeTable integrate_whittaker_inward(double kappa, std::complex<double> mu,
                                    const IntegrationSpec& spec) {
  spec.validate();
  double need = 10.0 * (1.0 + std::norm(mu) + kappa * kappa);
  if (spec.x_start < need)
    throw DomainError("integrate_whittaker_inward: x_start below 10 (1 + |mu|^2 + kappa^2)");
  auto [f, fp] = asymptotic_initial_data(kappa, mu, spec.x_start, spec.asymptotic_terms);
  double L0 = -spec.x_start / 2 + kappa * std::log(spec.x_start);
  return integrate_whittaker_ode(kappa, mu, spec.x_start, f, fp, L0, spec.x_end, spec.rel_tol,
                                 spec.abs_tol, spec.max_steps);
}

void GridEigenSpec::validate() const {
  if (!(u_max > u_min)) throw DomainError("GridEigenSpec: need u_max > u_min");
  if (n_points < 1000) throw DomainError("GridEigenSpec: n_points must be >= 1000");
  if (!(bc_alpha >= 0 && bc_alpha < 2 * M_PI)) throw DomainError("GridEigenSpec: bc_alpha outside [0, 2pi)");
  if (n_eigs < 1) throw DomainError("GridEigenSpec: n_eigs must be >= 1");
}

namespace {

struct Tridiag {
  std::vector<double> d, e;  // e[i] couples i and i+1
};

Tridiag assemble(const std::function<double(double)>& V, double u_min, double u_max, int n,
                 double alpha) {
  double h = (u_max - u_min) / (n - 1);
  double ih2 = 1.0 / (h * h);
  bool dirichlet = std::abs(std::sin(alpha)) < 1e-14;
  Tridiag t;
  int first = dirichlet ? 1 : 0;
  for (int i = first; i <= n - 2; ++i) {
    t.d.push_back(2 * ih2 + V(u_min + i * h));
    if (i < n - 2) t.e.push_back(-ih2);
  }
  if (!dirichlet) {
    // Ghost point psi_{-1} = psi_1 + 2h cot(a) psi_0, symmetrized.
    double cot = std::cos(alpha) / std::sin(alpha);
    t.d[0] -= 2 * cot / h;
    t.e[0] = -std::sqrt(2.0) * ih2;
  }
  return t;
}

// Number of eigenvalues strictly below lambda.
int sturm_count(const Tridiag& t, double lambda) {
  int count = 0;
  double q = t.d[0] - lambda;
  const double tiny = std::numeric_limits<double>::min();
  if (q < 0) ++count;
  for (std::size_t i = 1; i < t.d.size(); ++i) {
    if (q == 0) q = tiny;
    q = t.d[i] - lambda - t.e[i - 1] * t.e[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const Tridiag& t, int n_eigs) {
  double lower = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t.d.size(); ++i) {
    double r = (i > 0 ? std::abs(t.e[i - 1]) : 0) + (i < t.e.size() ? std::abs(t.e[i]) : 0);
    lower = std::min(lower, t.d[i] - r);
  }
  std::vector<double> out;
  double lo_floor = lower;
  for (int k = 0; k < n_eigs; ++k) {
    double lo = lo_floor;
    double step = 1.0;
    double hi = lo + step;
    while (sturm_count(t, hi) < k + 1) {
      lo = hi;
      step *= 2;
      hi = lo + step;
    }
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(t, mid) >= k + 1)
        hi = mid;
      else
        lo = mid;
      if (hi - lo <= 1e-14 * std::max(1.0, std::abs(hi))) break;
    }
    double ev = 0.5 * (lo + hi);
    out.push_back(ev);
    lo_floor = lo;
  }
  return out;
}

}  // namespace

std::vector<double> fd_grid_eigenvalues(const std::function<double(double)>& potential,
                                        double u_min, double u_max, int n_points, double bc_alpha,
                                        int n_eigs) {
  GridEigenSpec{u_min, u_max, n_points, bc_alpha, n_eigs}.validate();
  if (n_eigs >= n_points - 2) throw DomainError("fd_grid_eigenvalues: too many eigenvalues requested");
  return lowest_eigenvalues(assemble(potential, u_min, u_max, n_points, bc_alpha), n_eigs);
}

FdEigenResult fd_halfline_eigenvalues(const std::function<double(double)>& potential,
                                      const GridEigenSpec& spec) {
  spec.validate();
  FdEigenResult r;
  r.coarse = fd_grid_eigenvalues(potential, spec.u_min, spec.u_max, spec.n_points, spec.bc_alpha,
                                 spec.n_eigs);
  r.fine = fd_grid_eigenvalues(potential, spec.u_min, spec.u_max, 2 * spec.n_points - 1,
                               spec.bc_alpha, spec.n_eigs);
  for (int i = 0; i < spec.n_eigs; ++i) r.eigenvalues.push_back((4 * r.fine[i] - r.coarse[i]) / 3);

  double wide_max = spec.u_min + 2 * (spec.u_max - spec.u_min);
  auto wide = fd_grid_eigenvalues(potential, spec.u_min, wide_max, 2 * spec.n_points - 1,
                                  spec.bc_alpha, spec.n_eigs);
  for (int i = 0; i < spec.n_eigs; ++i)
    r.truncation_shift = std::max(r.truncation_shift, std::abs(wide[i] - r.coarse[i]));
  r.truncation_warning = r.truncation_shift > 1e-6;
  return r;
}

}  // namespace morse::oracle
