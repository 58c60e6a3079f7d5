#pragma once

#include "morse/precision.hpp"
#include "morse/spectrum.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace morse {

struct MFunctionSample {
  double u0 = 0;
  std::complex<double> E;
  std::complex<double> value;
  double alpha = 0;
};

/// m(u0, z^2) = -W_{1-k,iz}(e^{u0}) / W_{-k,iz}(e^{u0}) + e^{u0}/2 + k - 1/2.
/// PoleError when |W_{1-k,iz} / W_{-k,iz}| exceeds 1e8.
std::complex<double> m_principal(double k, double u0, std::complex<double> z,
                                 const PrecisionConfig& cfg = {});

/// m_principal at z = sqrt(E), the root with Im z >= 0.
std::complex<double> m_of_energy(double k, double u0, std::complex<double> E,
                                 const PrecisionConfig& cfg = {});

/// [cos(a) m0 - sin(a)] / [sin(a) m0 + cos(a)].
std::complex<double> m_alpha(double k, double u0, std::complex<double> z, double alpha,
                             const PrecisionConfig& cfg = {});

/// Applies the fractional-linear map of angle alpha to a given m value.
std::complex<double> fractional_linear(std::complex<double> m0, double alpha);

/// |dm/du + m^2 - (V_k(u0) - E)| with a central difference over u0 +/- h.
double riccati_residual(double k, double u0, std::complex<double> E, double h,
                        const PrecisionConfig& cfg = {});

struct CorrespondenceReport {
  std::vector<double> dirichlet;  // from the spectrum module
  std::vector<double> neumann;
  std::vector<double> poles;  // sign-change poles of m on the real E axis
  std::vector<double> zeros;  // zeros of m on the real E axis
  int pole_matches = 0;
  int zero_matches = 0;
  bool interlaced = false;       // exactly one zero between consecutive poles
  bool monotone_between = false; // m increasing on sampled interior points
};

/// Compares the lowest n Dirichlet / Neumann eigenvalues with the poles / zeros
/// of m_principal along real E, each to 1e-6. Throws CorrespondenceViolation
/// on the first unmatched eigenvalue when `throw_on_violation`.
CorrespondenceReport pole_zero_correspondence(const MorseProblem& prob, int n,
                                              bool throw_on_violation = true,
                                              const ScanOptions& opt = {});

struct HerglotzSweep {
  int samples = 0;
  int violations = 0;
  double min_imag = 0;
};

/// Random E with |E| <= e_max, Im E >= im_min; counts Im m <= 0.
HerglotzSweep herglotz_sweep(double k, double u0, int samples, std::uint64_t seed,
                             double e_max = 100, double im_min = 0.1,
                             const PrecisionConfig& cfg = {});

/// sup |m(u0, z^2) - i z| over n_angles rays with arg z in [eps, pi/2 - eps], |z| = radius.
double asymptotic_sup(double k, double u0, double radius, int n_angles = 9, double eps = 0.1,
                      const PrecisionConfig& cfg = {});

/// Rows over a rectangular E-grid.
std::vector<MFunctionSample> m_table(double k, double u0, double alpha,
                                     const std::vector<std::complex<double>>& energies,
                                     const PrecisionConfig& cfg = {});

}  // namespace morse
