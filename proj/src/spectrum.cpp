#include "morse/spectrum.hpp"

#include "morse/errors.hpp"
#include "morse/special_functions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

namespace morse {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> mu_from_energy(std::complex<double> E) {
  if (E.imag() == 0.0) {
    // Keep exact zeros so the certified-real routes apply.
    if (E.real() >= 0) return {0.0, std::sqrt(E.real())};
    return {std::sqrt(-E.real()), 0.0};
  }
  std::complex<double> z = std::sqrt(E);
  if (z.imag() < 0) z = -z;
  return {-z.imag(), z.real()};
}

bool potential_monotone_from(double k, double u0) {
  return k >= 0 || u0 >= std::log(2 * std::abs(k));
}

}  // namespace

double MorseProblem::x0() const { return std::exp(u0); }

MorseProblem MorseProblem::normalized() const {
  MorseProblem p = *this;
  p.alpha = std::fmod(alpha, 2 * kPi);
  if (p.alpha < 0) p.alpha += 2 * kPi;
  if (p.alpha >= 2 * kPi) p.alpha = 0;
  return p;
}

void MorseProblem::validate() const {
  if (!std::isfinite(k) || !std::isfinite(u0) || !std::isfinite(alpha))
    throw DomainError("MorseProblem: parameters must be finite");
  if (!(x0() > 0) || !std::isfinite(x0())) throw DomainError("MorseProblem: e^{u0} out of range");
}

double potential_value(double k, double u) {
  double e = std::exp(u);
  return 0.25 * e * e + k * e;
}

std::pair<double, double> rescale_general(double A, double B, double v0) {
  if (!(A > 0)) throw DomainError("rescale_general: A must be positive");
  return {2 * B / std::sqrt(A), v0 - 0.5 * std::log(A / 4)};
}

ScaledValue eigenfunction_value(const MorseProblem& prob, std::complex<double> E, double u,
                                const PrecisionConfig& cfg) {
  prob.validate();
  if (u < prob.u0) throw DomainError("eigenfunction_value: u below u0");
  ScaledValue w = whittaker_w({prob.kappa(), mu_from_energy(E), std::exp(u)}, cfg);
  return w.scaled_by(std::exp(-u / 2));
}

ScaledValue eigenfunction_derivative(const MorseProblem& prob, std::complex<double> E, double u,
                                     const PrecisionConfig& cfg) {
  prob.validate();
  if (u < prob.u0) throw DomainError("eigenfunction_derivative: u below u0");
  std::complex<double> mu = mu_from_energy(E);
  double x = std::exp(u);
  double kap = prob.kappa();
  ScaledValue w0 = whittaker_w({kap, mu, x}, cfg);
  ScaledValue w1 = whittaker_w({kap + 1, mu, x}, cfg);
  return (w0.scaled_by(x / 2 - kap - 0.5) - w1).scaled_by(std::exp(-u / 2));
}

ScaledValue z_function(const MorseProblem& prob, std::complex<double> mu,
                       const PrecisionConfig& cfg) {
  prob.validate();
  return whittaker_w({prob.kappa(), mu, prob.x0()}, cfg);
}

double z_imag_scaled(const MorseProblem& prob, double t, const PrecisionConfig& cfg) {
  ScaledValue z = z_function(prob, {0.0, t}, cfg);
  return (z * ScaledValue::from_log(kPi * std::abs(t) / 2, 0.0, true)).real();
}

double shooting_function(const MorseProblem& prob, double E, const PrecisionConfig& cfg) {
  MorseProblem p = prob.normalized();
  double c = std::cos(p.alpha), s = std::sin(p.alpha);
  ScaledValue v;
  if (std::abs(s) < 1e-15) {
    v = eigenfunction_value(p, E, p.u0, cfg).scaled_by(c);
  } else if (std::abs(c) < 1e-15) {
    v = eigenfunction_derivative(p, E, p.u0, cfg).scaled_by(s);
  } else {
    v = eigenfunction_value(p, E, p.u0, cfg).scaled_by(c) +
        eigenfunction_derivative(p, E, p.u0, cfg).scaled_by(s);
  }
  double boost = E > 0 ? kPi * std::sqrt(E) / 2 : 0.0;
  return (v * ScaledValue::from_log(boost, 0.0, true)).real();
}

double density_step(double T) {
  return 0.25 * kPi / std::log(std::max(T, std::exp(2.0)));
}

double with_escalation(const PrecisionConfig& cfg,
                       const std::function<double(const PrecisionConfig&)>& fn) {
  PrecisionConfig c = cfg;
  for (;;) {
    try {
      return fn(c);
    } catch (const PrecisionLossError&) {
      if (c.rung_digits() >= 100) throw;
      c = c.escalated();
    }
  }
}

std::vector<double> evaluate_grid(const std::function<double(double)>& f,
                                  const std::vector<double>& grid, unsigned threads) {
  std::vector<double> out(grid.size());
  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(grid.size()));
  if (n <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = f(grid[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < n; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < grid.size(); i += n) out[i] = f(grid[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<Bracketed> refine_sign_changes(const std::function<double(double)>& f,
                                           const std::vector<double>& grid,
                                           const std::vector<double>& values, double rel_tol) {
  std::vector<Bracketed> roots;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double fa = values[i], fb = values[i + 1];
    if (fa == 0.0) {
      roots.push_back({grid[i], grid[i], grid[i]});
      continue;
    }
    if (!(fa * fb < 0)) continue;
    double lo = grid[i], hi = grid[i + 1];
    double root = std::numeric_limits<double>::quiet_NaN();
    while (hi - lo > rel_tol * std::max(1.0, std::abs(hi))) {
      double mid = 0.5 * (lo + hi);
      double fm;
      try {
        fm = f(mid);
      } catch (const PrecisionLossError&) {
        root = mid;
        break;
      }
      if (fm == 0.0) {
        root = mid;
        break;
      }
      if ((fm < 0) == (fa < 0)) {
        lo = mid;
        fa = fm;
      } else {
        hi = mid;
      }
    }
    if (std::isnan(root)) root = 0.5 * (lo + hi);
    roots.push_back({root, lo, hi});
  }
  if (!values.empty() && values.back() == 0.0) roots.push_back({grid.back(), grid.back(), grid.back()});
  return roots;
}

namespace {

PrecisionConfig config_for_t(const ScanOptions& opt, double t) {
  if (t >= opt.escalate_above_t && opt.precision.working_digits < 50)
    return PrecisionConfig::for_digits(50);
  return opt.precision;
}

int count_sign_changes(const std::vector<double>& v, std::size_t stride) {
  int n = 0;
  for (std::size_t i = 0; i + stride < v.size(); i += stride) {
    if (v[i] == 0.0 || v[i] * v[i + stride] < 0) ++n;
  }
  return n;
}

}  // namespace

std::vector<SpectralZero> dirichlet_zero_scan(const MorseProblem& prob, double T, double step,
                                              const ScanOptions& opt) {
  prob.validate();
  if (prob.normalized().alpha != 0.0) throw DomainError("dirichlet_zero_scan: needs alpha = 0");
  if (!(T > 0)) throw DomainError("dirichlet_zero_scan: T must be positive");
  if (step <= 0) step = density_step(T);

  auto f = [&](double t) {
    return with_escalation(config_for_t(opt, t),
                           [&](const PrecisionConfig& c) { return z_imag_scaled(prob, t, c); });
  };

  // Values on a grid of spacing h/2^level; compare stride-2 and stride-1 counts.
  double h = step / 2;
  auto make_grid = [&](double spacing) {
    std::vector<double> g;
    int n = static_cast<int>(std::ceil(T / spacing));
    for (int i = 0; i <= n; ++i) g.push_back(std::min(T, i * spacing));
    return g;
  };
  std::vector<double> grid = make_grid(h);
  std::vector<double> vals = evaluate_grid(f, grid, opt.threads);
  for (int level = 0; level < 6; ++level) {
    if (count_sign_changes(vals, 2) == count_sign_changes(vals, 1)) break;
    // Refine: insert midpoints.
    std::vector<double> mids;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) mids.push_back(0.5 * (grid[i] + grid[i + 1]));
    std::vector<double> mv = evaluate_grid(f, mids, opt.threads);
    std::vector<double> g2, v2;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      g2.push_back(grid[i]);
      v2.push_back(vals[i]);
      if (i < mids.size()) {
        g2.push_back(mids[i]);
        v2.push_back(mv[i]);
      }
    }
    grid = std::move(g2);
    vals = std::move(v2);
  }

  auto roots = refine_sign_changes(f, grid, vals, 1e-10);
  std::vector<SpectralZero> out;
  for (auto& r : roots) {
    if (r.root <= 0) continue;
    SpectralZero z;
    z.axis = Axis::imaginary;
    z.coordinate = r.root;
    z.index = static_cast<int>(out.size());
    z.bracket = {r.lo, r.hi};
    z.energy = r.root * r.root;
    auto it = std::lower_bound(grid.begin(), grid.end(), r.root);
    std::size_t j = std::min<std::size_t>(static_cast<std::size_t>(it - grid.begin()), grid.size() - 1);
    double local = std::max(std::abs(vals[j]), std::abs(vals[j > 0 ? j - 1 : 0]));
    try {
      z.residual = local > 0 ? std::abs(f(r.root)) / local : 0.0;
    } catch (const PrecisionLossError&) {
      z.residual = 0.0;
    }
    out.push_back(z);
  }
  return out;
}

RealZeroScan exceptional_real_zeros(const MorseProblem& prob, const ScanOptions& opt) {
  prob.validate();
  if (prob.normalized().alpha != 0.0) throw DomainError("exceptional_real_zeros: needs alpha = 0");
  RealZeroScan res;
  double kap = prob.kappa();
  if (kap <= 0) return res;

  auto f = [&](double mu) {
    return with_escalation(opt.precision, [&](const PrecisionConfig& c) {
      return z_function(prob, {mu, 0.0}, c).real();
    });
  };
  auto fi = [&](double t) {
    return with_escalation(opt.precision,
                           [&](const PrecisionConfig& c) { return z_imag_scaled(prob, t, c); });
  };

  double h = std::min(0.02, kap / 50);
  std::vector<double> grid;
  int n = static_cast<int>(std::ceil(kap / h));
  for (int i = 0; i <= n; ++i) grid.push_back(std::min(kap, i * h));
  std::vector<double> vals = evaluate_grid(f, grid, opt.threads);

  auto roots = refine_sign_changes(f, grid, vals, 1e-12);
  for (auto& r : roots) {
    if (r.root <= 0 || r.root >= kap) continue;
    SpectralZero z;
    z.axis = Axis::real;
    z.coordinate = r.root;
    z.index = static_cast<int>(res.zeros.size());
    z.bracket = {r.lo, r.hi};
    z.energy = -r.root * r.root;
    try {
      double local = std::max(std::abs(f(r.lo)), std::abs(f(r.hi)));
      z.residual = local > 0 ? std::abs(f(r.root)) / std::max(local, std::abs(vals[0])) : 0.0;
    } catch (const PrecisionLossError&) {
      z.residual = 0.0;
    }
    res.zeros.push_back(z);
  }

  // Double zero at mu = 0: tiny value, no sign change along either axis near 0.
  double scale = std::max(std::abs(f(0.5)), std::abs(fi(0.5)));
  double z0 = vals[0];
  if (std::abs(z0) < 1e-8 * scale) {
    double d = 1e-3;
    bool real_touch = f(d) * f(d / 2) > 0;
    bool imag_touch = fi(d) * fi(d / 2) > 0;
    res.double_zero_at_origin = real_touch && imag_touch;
  }
  return res;
}

std::vector<double> dirichlet_eigenvalues(const MorseProblem& prob, int n, const ScanOptions& opt) {
  if (n < 1) throw DomainError("dirichlet_eigenvalues: n must be >= 1");
  auto real = exceptional_real_zeros(prob, opt);
  std::vector<double> neg;
  for (auto& z : real.zeros) neg.push_back(z.energy);
  if (real.double_zero_at_origin) neg.push_back(0.0);
  std::sort(neg.begin(), neg.end());
  double T = 8;
  for (int round = 0; round < 12; ++round) {
    std::vector<double> out = neg;
    if (static_cast<int>(out.size()) < n) {
      auto zs = dirichlet_zero_scan(prob, T, 0, opt);
      for (auto& z : zs) out.push_back(z.energy);
    }
    if (static_cast<int>(out.size()) >= n) {
      out.resize(n);
      return out;
    }
    T *= 1.6;
  }
  throw ScanExhaustedError("dirichlet_eigenvalues: not enough zeros found");
}

std::vector<double> eigenvalues_general_alpha(const MorseProblem& prob, int n, double E_max,
                                              const ScanOptions& opt) {
  prob.validate();
  if (n < 1) throw DomainError("eigenvalues_general_alpha: n must be >= 1");
  MorseProblem p = prob.normalized();
  auto f = [&](double E) {
    double t = std::sqrt(std::max(E, 0.0));
    return with_escalation(config_for_t(opt, t),
                           [&](const PrecisionConfig& c) { return shooting_function(p, E, c); });
  };
  double L = p.k < 0 ? -p.k * p.k - 1 : -1.0;
  auto next = [](double E) {
    if (E < 1) return std::min(E + 0.1, 1.0);
    double t = std::sqrt(E);
    double cap = 2 * t * density_step(t);  // quarter of the expected gap in E
    return E + std::min(0.05 * E, cap);
  };

  std::vector<double> found;
  double E = L;
  double prev_val = f(E);
  const std::size_t chunk = 64;
  while (static_cast<int>(found.size()) < n) {
    if (E >= E_max)
      throw ScanExhaustedError("eigenvalues_general_alpha: fewer than n eigenvalues below E_max");
    std::vector<double> grid{E};
    while (grid.size() < chunk + 1 && grid.back() < E_max) grid.push_back(std::min(next(grid.back()), E_max));
    std::vector<double> tail(grid.begin() + 1, grid.end());
    std::vector<double> tv = evaluate_grid(f, tail, opt.threads);
    std::vector<double> vals{prev_val};
    vals.insert(vals.end(), tv.begin(), tv.end());
    // A zero exactly on the left endpoint was already reported by the previous chunk.
    if (vals[0] == 0.0 && !found.empty()) vals[0] = std::numeric_limits<double>::min();
    for (auto& r : refine_sign_changes(f, grid, vals, 1e-12)) {
      found.push_back(r.root);
      if (static_cast<int>(found.size()) == n) break;
    }
    E = grid.back();
    prev_val = vals.back();
  }
  found.resize(n);
  return found;
}

double turning_point(double k, double T) {
  auto V = [k](double u) { return potential_value(k, u); };
  auto dV = [k](double u) {
    double e = std::exp(u);
    return 0.5 * e * e + k * e;
  };
  double lo, hi = 1;
  while (V(hi) <= T) hi += 1;
  if (k < 0) {
    lo = std::log(2 * -k);
    if (T <= -k * k) throw DomainError("turning_point: T at or below min V = -k^2");
  } else {
    if (T <= 0) throw DomainError("turning_point: T must be positive for k >= 0");
    lo = hi - 1;
    while (V(lo) > T) lo -= 1;
  }
  double u = hi;
  for (int it = 0; it < 200; ++it) {
    double g = V(u) - T;
    if (g > 0)
      hi = u;
    else
      lo = u;
    double d = dV(u);
    double un = u - g / d;
    if (!(un > lo && un < hi) || !std::isfinite(un)) un = 0.5 * (lo + hi);
    if (std::abs(un - u) <= 1e-15 * std::max(1.0, std::abs(u))) return un;
    u = un;
  }
  return u;
}

double weyl_integral(double k, double u0, double T, double tol) {
  using boost::math::quadrature::gauss_kronrod;
  double V0 = potential_value(k, u0);
  if (T <= V0) {
    if (potential_monotone_from(k, u0)) return 0.0;
    throw DomainError("weyl_integral: T below T1, V(u) = T has no unique root beyond u0");
  }
  double uT = turning_point(k, T);
  if (uT <= u0) return 0.0;
  auto plain = [&](double u) { return std::sqrt(std::max(0.0, T - potential_value(k, u))); };
  auto tail = [&](double a) {
    double S = std::sqrt(uT - a);
    auto g = [&](double s) {
      double u = uT - s * s;
      return 2 * s * std::sqrt(std::max(0.0, T - potential_value(k, u)));
    };
    return gauss_kronrod<double, 31>::integrate(g, 0.0, S, 20, tol);
  };
  double I;
  double u1 = std::log(6 * std::abs(k) + 1);
  if (k < 0 && u0 < std::log(2 * std::abs(k)) && u1 < uT && u1 > u0) {
    I = gauss_kronrod<double, 31>::integrate(plain, u0, u1, 20, tol) + tail(u1);
  } else {
    I = tail(u0);
  }
  return I / kPi;
}

double weyl_closed_form(double u0, double T) {
  double s = std::sqrt(T);
  return s * std::log(s) + (2 * std::numbers::ln2 - 1 - u0) * s;
}

double asymptotic_count_c1() { return 2 / kPi; }
double asymptotic_count_c2(double u0) { return 2 / kPi * (2 * std::numbers::ln2 - 1 - u0); }

double asymptotic_count(double u0, double T_mu) {
  if (!(T_mu > 1)) throw DomainError("asymptotic_count: T must exceed 1");
  return asymptotic_count_c1() * T_mu * std::log(T_mu) + asymptotic_count_c2(u0) * T_mu;
}

CountingReport counting_report(const MorseProblem& prob, double T, int n_checkpoints,
                               const ScanOptions& opt) {
  if (!(T > 2)) throw DomainError("counting_report: T must exceed 2");
  if (n_checkpoints < 1) throw DomainError("counting_report: need at least one checkpoint");
  auto zeros = dirichlet_zero_scan(prob, T, 0, opt);
  auto real = exceptional_real_zeros(prob, opt);
  CountingReport rep;
  rep.c1 = asymptotic_count_c1();
  rep.c2 = asymptotic_count_c2(prob.u0);
  long fixed = 2 * static_cast<long>(real.zeros.size()) + (real.double_zero_at_origin ? 2 : 0);
  for (int i = 1; i <= n_checkpoints; ++i) {
    double Ti = T * i / n_checkpoints;
    if (Ti <= 1) continue;
    long imag = std::count_if(zeros.begin(), zeros.end(),
                              [&](const SpectralZero& z) { return z.coordinate <= Ti; });
    CountingRow row;
    row.T = Ti;
    row.observed = 2 * imag + fixed;
    row.main_term = asymptotic_count(prob.u0, Ti);
    row.diff = static_cast<double>(row.observed) - row.main_term;
    rep.max_abs_diff = std::max(rep.max_abs_diff, std::abs(row.diff));
    rep.rows.push_back(row);
  }
  double n = static_cast<double>(rep.rows.size());
  if (n >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& r : rep.rows) {
      sx += r.T;
      sy += r.diff;
      sxx += r.T * r.T;
      sxy += r.T * r.diff;
    }
    rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  rep.drift = std::abs(rep.slope) * T;
  return rep;
}

MonotonicityReport monotonicity_check(const std::vector<double>& k_list,
                                      const std::vector<double>& u0_list, double alpha, int n,
                                      bool throw_on_violation, const ScanOptions& opt) {
  if (n < 1) throw DomainError("monotonicity_check: n must be >= 1");
  MonotonicityReport rep;
  auto energies = [&](double k, double u0) {
    MorseProblem p{k, u0, alpha};
    p = p.normalized();
    if (p.alpha == 0.0) return dirichlet_eigenvalues(p, n, opt);
    return eigenvalues_general_alpha(p, n, 1e5, opt);
  };
  std::vector<std::vector<MonotonicityEntry>> table;
  for (double k : k_list) {
    std::vector<MonotonicityEntry> row;
    for (double u0 : u0_list) row.push_back({k, u0, energies(k, u0)});
    table.push_back(row);
  }
  auto fail = [&](const std::string& what, double k, double u0, int j) {
    std::ostringstream os;
    os << what << " at (k=" << k << ", u0=" << u0 << ", n=" << j << ")";
    rep.violations.push_back(os.str());
    if (throw_on_violation) throw MonotonicityViolation(os.str(), k, u0, j);
  };
  for (auto& row : table) {
    double k = row.front().k;
    double thr = k < 0 ? std::log(2 * -k) - 1e-12 : -std::numeric_limits<double>::infinity();
    const MonotonicityEntry* prev = nullptr;
    for (auto& e : row) {
      if (e.u0 < thr) continue;
      if (prev) {
        for (int j = 0; j < n; ++j) {
          ++rep.comparisons;
          if (!(e.energies[j] > prev->energies[j])) fail("E_n not increasing in u0", e.k, e.u0, j);
        }
      }
      prev = &e;
    }
  }
  for (std::size_t c = 0; c < u0_list.size(); ++c) {
    for (std::size_t r = 1; r < table.size(); ++r) {
      auto& a = table[r - 1][c];
      auto& b = table[r][c];
      for (int j = 0; j < n; ++j) {
        ++rep.comparisons;
        if (!(b.energies[j] > a.energies[j])) fail("E_n not increasing in k", b.k, b.u0, j);
      }
    }
  }
  for (auto& row : table)
    for (auto& e : row) rep.entries.push_back(e);
  return rep;
}

}  // namespace morse
