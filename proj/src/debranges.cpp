#include "morse/debranges.hpp"

#include "morse/errors.hpp"
#include "morse/special_functions.hpp"
#include "morse/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace morse {

namespace {

std::complex<double> i_times(std::complex<double> z) { return {-z.imag(), z.real()}; }

ScaledValue w_at(double kappa, std::complex<double> z, double x, const PrecisionConfig& cfg) {
  return whittaker_w({kappa, i_times(z), x}, cfg);
}

ScaledValue prefactor(double log_value) { return ScaledValue::from_log(log_value, 0.0, true); }

}  // namespace

ScaledValue structure_a_direct(double u, std::complex<double> z, const PrecisionConfig& cfg) {
  double x = std::exp(u);
  return prefactor((x - u) / 2) * w_at(0.5, z, x, cfg);
}

ScaledValue structure_b_direct(double u, std::complex<double> z, const PrecisionConfig& cfg) {
  double x = std::exp(u);
  if (z == std::complex<double>(0, 0)) return ScaledValue();
  return prefactor(-(x + u) / 2) * ScaledValue::from_complex(z, z.imag() == 0.0) *
         w_at(-0.5, z, x, cfg);
}

ScaledValue structure_e0(double u, std::complex<double> z, const PrecisionConfig& cfg) {
  ScaledValue a = structure_a_direct(u, z, cfg);
  ScaledValue b = structure_b_direct(u, z, cfg);
  return a - ScaledValue::from_complex({0.0, 1.0}) * b;
}

ScaledValue structure_e0_sharp(double u, std::complex<double> z, const PrecisionConfig& cfg) {
  return structure_e0(u, std::conj(z), cfg).conj();
}

StructureFunctionSample structure_sample(double u, std::complex<double> z,
                                         const PrecisionConfig& cfg) {
  StructureFunctionSample s;
  s.u = u;
  s.z = z;
  s.E_value = structure_e0(u, z, cfg);
  ScaledValue sharp = structure_e0_sharp(u, z, cfg);
  s.A_value = (s.E_value + sharp).scaled_by(0.5);
  s.B_value = (s.E_value - sharp) * ScaledValue::from_complex({0.0, -0.5});
  return s;
}

HBReport hermite_biehler_check(double u, int samples, std::uint64_t seed, bool throw_on_violation,
                               const PrecisionConfig& cfg) {
  if (samples < 100) throw DomainError("hermite_biehler_check: samples must be >= 100");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-30, 30), im(0.05, 10);
  HBReport rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  double sum = 0;
  while (rep.samples < samples) {
    std::complex<double> z(re(rng), im(rng));
    if (std::abs(z) > 30) continue;
    double up = with_escalation(cfg, [&](const PrecisionConfig& c) {
      return structure_e0(u, z, c).log10_abs();
    });
    double down = with_escalation(cfg, [&](const PrecisionConfig& c) {
      return structure_e0(u, std::conj(z), c).log10_abs();
    });
    double margin = up - down;
    ++rep.samples;
    rep.points.push_back(z);
    rep.margins.push_back(margin);
    rep.min_margin = std::min(rep.min_margin, margin);
    sum += margin;
    if (!(margin > 0)) {
      ++rep.violations;
      if (throw_on_violation) throw HBViolation("Hermite-Biehler inequality fails", z);
    }
  }
  rep.mean_margin = sum / rep.samples;
  return rep;
}

InterlacingReport ab_zero_interlacing(double u, double t_max, bool throw_on_violation,
                                      const PrecisionConfig& cfg) {
  if (!(t_max > 0)) throw DomainError("ab_zero_interlacing: t_max must be positive");
  auto scaled = [&](bool a, double t) {
    return with_escalation(cfg, [&](const PrecisionConfig& c) {
      ScaledValue v = a ? structure_a_direct(u, {t, 0.0}, c) : structure_b_direct(u, {t, 0.0}, c);
      return (v * prefactor(std::numbers::pi * t / 2)).real();
    });
  };
  auto fa = [&](double t) { return scaled(true, t); };
  auto fb = [&](double t) { return scaled(false, t); };

  double h = density_step(t_max) / 2;
  std::vector<double> grid;
  int n = static_cast<int>(std::ceil(t_max / h));
  for (int i = 0; i <= n; ++i) grid.push_back(std::min(t_max, i * h));
  auto va = evaluate_grid(fa, grid);
  auto vb = evaluate_grid(fb, grid);

  InterlacingReport rep;
  for (auto& r : refine_sign_changes(fa, grid, va, 1e-10)) rep.a_zeros.push_back(r.root);
  for (auto& r : refine_sign_changes(fb, grid, vb, 1e-10)) rep.b_zeros.push_back(r.root);

  // Sign touches: interior local minimum of |f| far below its neighbours.
  auto touches = [&](const std::vector<double>& v, std::vector<double>& zeros) {
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      if (v[i] == 0.0 || v[i - 1] * v[i] < 0 || v[i] * v[i + 1] < 0) continue;
      double s = std::max(std::abs(v[i - 1]), std::abs(v[i + 1]));
      if (std::abs(v[i]) < 1e-8 * s) {
        zeros.push_back(grid[i]);
        zeros.push_back(grid[i]);
        rep.double_zeros.push_back(grid[i]);
      }
    }
    std::sort(zeros.begin(), zeros.end());
  };
  touches(va, rep.a_zeros);
  touches(vb, rep.b_zeros);

  // Merge and require alternation, counting multiplicity.
  std::vector<std::pair<double, char>> all;
  for (double t : rep.a_zeros) all.push_back({t, 'A'});
  for (double t : rep.b_zeros) all.push_back({t, 'B'});
  std::sort(all.begin(), all.end());
  rep.interlaced = !rep.a_zeros.empty();
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].second == all[i - 1].second || all[i].first == all[i - 1].first) {
      bool same_double = all[i].first == all[i - 1].first &&
                         std::find(rep.double_zeros.begin(), rep.double_zeros.end(), all[i].first) !=
                             rep.double_zeros.end();
      if (!same_double) rep.interlaced = false;
    }
  }
  if (!rep.interlaced && throw_on_violation)
    throw InterlacingViolation("zeros of A and B do not interlace");
  return rep;
}

DeBrangesM debranges_m(double u, std::complex<double> z, const PrecisionConfig& cfg) {
  double x = std::exp(u);
  StructureFunctionSample s = structure_sample(u, z, cfg);
  ScaledValue a_direct = structure_a_direct(u, z, cfg);
  if (a_direct.is_zero() || (s.B_value / a_direct).log10_abs() > 8)
    throw PoleError("debranges_m: A(z) vanishes");
  DeBrangesM r;
  r.value = -(s.B_value / s.A_value).to_complex();
  if (z == std::complex<double>(0, 0)) return r;

  ScaledValue w12 = w_at(0.5, z, x, cfg);
  ScaledValue wm = w_at(-0.5, z, x, cfg);
  ScaledValue w32 = w_at(1.5, z, x, cfg);
  ScaledValue ex = prefactor(-x);
  ScaledValue zs = ScaledValue::from_complex(z);
  r.lhs = -(ex * zs * wm / w12).to_complex();
  ScaledValue bracket = -(w32 / w12) + ScaledValue::from_double(x - 1);
  r.rhs = -(ex * bracket / zs).to_complex();
  r.identity_rel_diff = std::abs(r.lhs - r.rhs) / std::max(std::abs(r.lhs), std::abs(r.rhs));
  r.value_vs_neg_lhs = std::abs(r.value + r.lhs) / std::max(std::abs(r.value), std::abs(r.lhs));
  r.identity_checked = true;
  return r;
}

}  // namespace morse
