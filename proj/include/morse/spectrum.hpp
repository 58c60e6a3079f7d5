#pragma once

// Spectrum of -d^2/du^2 + e^{2u}/4 + k e^u on [u0, inf): zeros of
// Z(mu) = W_{-k,mu}(e^{u0}), shooting in E, counting and the Weyl integral.

#include "morse/precision.hpp"
#include "morse/scaled_value.hpp"

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace morse {

struct MorseProblem {
  double k = 0;
  double u0 = 0;
  double alpha = 0;  // cos(a) psi(u0) + sin(a) psi'(u0) = 0

  double kappa() const { return -k; }
  double x0() const;
  /// Copy with alpha reduced to [0, 2 pi).
  MorseProblem normalized() const;
  void validate() const;
};

enum class Axis { imaginary, real };

struct SpectralZero {
  Axis axis = Axis::imaginary;
  double coordinate = 0;  // t for mu = i t, or mu on the real axis
  int index = 0;
  std::pair<double, double> bracket{0, 0};
  double energy = 0;  // t^2 or -mu^2
  double residual = 0;
};

struct RealZeroScan {
  std::vector<SpectralZero> zeros;  // positive mu only; mirrors at -mu implied
  bool double_zero_at_origin = false;
};

struct CountingRow {
  double T = 0;
  long observed = 0;
  double main_term = 0;
  double diff = 0;
};

struct CountingReport {
  std::vector<CountingRow> rows;
  double c1 = 0;
  double c2 = 0;
  double max_abs_diff = 0;
  double slope = 0;  // least-squares slope of diff against T
  double drift = 0;  // |slope| * T_max
};

struct MonotonicityEntry {
  double k = 0;
  double u0 = 0;
  std::vector<double> energies;
};

struct MonotonicityReport {
  std::vector<MonotonicityEntry> entries;
  int comparisons = 0;
  std::vector<std::string> violations;
};

/// Options shared by the scanning routines.
struct ScanOptions {
  PrecisionConfig precision{};
  /// Grid points at or beyond this t are evaluated with at least 50 digits.
  double escalate_above_t = 30;
  unsigned threads = 0;  // 0 = hardware concurrency
};

double potential_value(double k, double u);

/// Reduces V(v) = A e^{2v} + B e^v on [v0, inf) to the normalized (k, u0).
std::pair<double, double> rescale_general(double A, double B, double v0);

/// psi(u, E) = e^{-u/2} W_{-k, i z}(e^u), z the principal square root of E.
ScaledValue eigenfunction_value(const MorseProblem& prob, std::complex<double> E, double u,
                                const PrecisionConfig& cfg = {});
/// d psi / du at u via x W' = (x/2 - kappa) W - W_{kappa+1}.
ScaledValue eigenfunction_derivative(const MorseProblem& prob, std::complex<double> E, double u,
                                     const PrecisionConfig& cfg = {});

/// Z(mu) = W_{-k,mu}(e^{u0}).
ScaledValue z_function(const MorseProblem& prob, std::complex<double> mu,
                       const PrecisionConfig& cfg = {});

/// Z(i t) e^{pi t / 2}, a real number of moderate size.
double z_imag_scaled(const MorseProblem& prob, double t, const PrecisionConfig& cfg = {});

/// cos(a) psi(u0,E) + sin(a) psi'(u0,E), multiplied by e^{pi sqrt(max(E,0))/2}.
/// Zero exactly at eigenvalues.
double shooting_function(const MorseProblem& prob, double E, const PrecisionConfig& cfg = {});

/// Scan step 0.25 pi / log(max(T, e^2)).
double density_step(double T);

/// Sign-change scan of f over an increasing grid, refined by bisection until
/// the bracket is below rel_tol * max(1, |x|). A PrecisionLossError at a
/// bisection midpoint is taken as landing on the zero.
struct Bracketed {
  double root;
  double lo;
  double hi;
};
std::vector<Bracketed> refine_sign_changes(const std::function<double(double)>& f,
                                           const std::vector<double>& grid,
                                           const std::vector<double>& values, double rel_tol);

/// Evaluates f at every grid point, in parallel.
std::vector<double> evaluate_grid(const std::function<double(double)>& f,
                                  const std::vector<double>& grid, unsigned threads = 0);

/// Runs fn(cfg), moving up the precision ladder on PrecisionLossError.
double with_escalation(const PrecisionConfig& cfg,
                       const std::function<double(const PrecisionConfig&)>& fn);

/// Imaginary-axis zeros i t, 0 < t <= T, of Z for a Dirichlet problem.
/// step <= 0 selects density_step(T).
std::vector<SpectralZero> dirichlet_zero_scan(const MorseProblem& prob, double T, double step = 0,
                                              const ScanOptions& opt = {});

/// Real zeros 0 < mu < kappa (only when kappa = -k > 0) plus the mu = 0 test.
RealZeroScan exceptional_real_zeros(const MorseProblem& prob, const ScanOptions& opt = {});

/// Lowest n Dirichlet eigenvalues from the zeros of Z.
std::vector<double> dirichlet_eigenvalues(const MorseProblem& prob, int n,
                                          const ScanOptions& opt = {});

/// Lowest n eigenvalues for any boundary angle by scanning shooting_function in E.
/// Throws ScanExhaustedError when fewer than n are found below E_max.
std::vector<double> eigenvalues_general_alpha(const MorseProblem& prob, int n, double E_max = 1e5,
                                              const ScanOptions& opt = {});

/// Largest root of V_k(u) = T by safeguarded Newton.
double turning_point(double k, double T);

/// (1/pi) int_{u0}^{u_T} sqrt(T - V_k(u)) du; 0 when T <= V(u0) with V monotone.
double weyl_integral(double k, double u0, double T, double tol = 1e-13);

/// sqrt(T) log sqrt(T) + (2 log 2 - 1 - u0) sqrt(T), the large-T form of
/// int sqrt(T - V) du (no 1/pi).
double weyl_closed_form(double u0, double T);

/// (2/pi) T log T + (2/pi)(2 log 2 - 1 - u0) T.
double asymptotic_count(double u0, double T_mu);
double asymptotic_count_c1();
double asymptotic_count_c2(double u0);

/// Observed mu-plane zero counts against the main term at T i / n, i = 1..n.
CountingReport counting_report(const MorseProblem& prob, double T, int n_checkpoints,
                               const ScanOptions& opt = {});

/// E_j for j < n over the grids; strict increase in u0 (for each k; when
/// k < 0 only u0 >= log 2|k| is compared) and in k (for each u0).
/// Throws MonotonicityViolation on the first failure if `throw_on_violation`.
MonotonicityReport monotonicity_check(const std::vector<double>& k_list,
                                      const std::vector<double>& u0_list, double alpha, int n,
                                      bool throw_on_violation = true, const ScanOptions& opt = {});

}  // namespace morse
