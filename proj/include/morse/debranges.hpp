#pragma once

// Structure function E0(u, z) built from W_{+-1/2, iz}(e^u) and its
// Hermite-Biehler / interlacing / m-function checks.

#include "morse/precision.hpp"
#include "morse/scaled_value.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace morse {

struct StructureFunctionSample {
  double u = 0;
  std::complex<double> z;
  ScaledValue E_value;
  ScaledValue A_value;
  ScaledValue B_value;
};

/// E0(u,z) = e^{(e^u-u)/2} W_{1/2,iz}(e^u) - i z e^{-(e^u+u)/2} W_{-1/2,iz}(e^u).
ScaledValue structure_e0(double u, std::complex<double> z, const PrecisionConfig& cfg = {});

/// E#(z) = conj(E(conj z)).
ScaledValue structure_e0_sharp(double u, std::complex<double> z, const PrecisionConfig& cfg = {});

/// A = (E + E#)/2, B = (E - E#)/(2i).
StructureFunctionSample structure_sample(double u, std::complex<double> z,
                                         const PrecisionConfig& cfg = {});

/// Closed forms A = e^{(e^u-u)/2} W_{1/2,iz}, B = z e^{-(e^u+u)/2} W_{-1/2,iz}.
ScaledValue structure_a_direct(double u, std::complex<double> z, const PrecisionConfig& cfg = {});
ScaledValue structure_b_direct(double u, std::complex<double> z, const PrecisionConfig& cfg = {});

struct HBReport {
  int samples = 0;
  int violations = 0;
  std::vector<std::complex<double>> points;
  std::vector<double> margins;  // log10|E(z)| - log10|E(conj z)|
  double min_margin = 0;
  double mean_margin = 0;
};

/// |E0(u,z)| > |E0(u,conj z)| for random z with |z| <= 30, Im z in [0.05, 10].
/// Throws HBViolation on the first failure when `throw_on_violation`.
HBReport hermite_biehler_check(double u, int samples, std::uint64_t seed = 42,
                               bool throw_on_violation = true, const PrecisionConfig& cfg = {});

struct InterlacingReport {
  std::vector<double> a_zeros;
  std::vector<double> b_zeros;  // includes t = 0
  std::vector<double> double_zeros;  // sign touches without a sign change
  bool interlaced = false;
};

/// Real zeros of A and B on [0, t_max]; checks exactly one B-zero strictly
/// between consecutive A-zeros and B-zeros alternate with A-zeros.
/// Throws InterlacingViolation when `throw_on_violation`.
InterlacingReport ab_zero_interlacing(double u, double t_max, bool throw_on_violation = true,
                                      const PrecisionConfig& cfg = {});

struct DeBrangesM {
  std::complex<double> value;  // -B/A
  std::complex<double> lhs;    // -e^{-x} z W_{-1/2}/W_{1/2}
  std::complex<double> rhs;    // -(1/z) e^{-x}(-W_{3/2}/W_{1/2} + x - 1)
  double identity_rel_diff = 0;    // lhs vs rhs
  double value_vs_neg_lhs = 0;     // -B/A vs -lhs
  bool identity_checked = false;  // false at z = 0
};

/// -B(z)/A(z) with both closed forms of the Whittaker-identity rewrite.
/// PoleError at zeros of A.
DeBrangesM debranges_m(double u, std::complex<double> z, const PrecisionConfig& cfg = {});

}  // namespace morse
