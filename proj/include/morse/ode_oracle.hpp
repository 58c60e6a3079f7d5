#pragma once

// Independent verification engines: direct integration of Whittaker's ODE
// and a finite-difference half-line Schrodinger eigen-solver.

#include "morse/scaled_value.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace morse::oracle {

struct IntegrationSpec {
  double x_start = 60;
  double x_end = 1;
  double rel_tol = 1e-13;
  double abs_tol = 1e-300;
  int max_steps = 2'000'000;
  /// Terms of the large-x asymptotic series used as initial data:
  /// -1 = truncate at the smallest term, 0 = leading term e^{-x/2} x^kappa only.
  int asymptotic_terms = -1;

  void validate() const;
};

/// Smallest admissible anchor for (kappa, mu): max(60, 10 (1 + |mu|^2 + kappa^2)).
double default_anchor(double kappa, std::complex<double> mu);

/// Dense solution table. Values are stored as significand-like long doubles
/// with a per-node natural-log scale so the table never overflows.
class OdeTable {
 public:
  struct Node {
    double x;
    std::complex<long double> f;
    std::complex<long double> fp;
    long double log_scale;  // true value = f * e^{log_scale}
  };

  explicit OdeTable(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  const std::vector<Node>& nodes() const { return nodes_; }
  /// Value at the final integration point.
  ScaledValue final_value() const;
  ScaledValue final_derivative() const;
  /// Cubic Hermite interpolation between stored steps.
  ScaledValue value_at(double x) const;
  ScaledValue derivative_at(double x) const;
  std::size_t steps() const { return nodes_.size() - 1; }

 private:
  std::vector<Node> nodes_;
};

/// Integrates f'' = (1/4 - kappa/x - (1/4 - mu^2)/x^2) f between two points
/// with adaptive Dormand-Prince 5(4) steps. Initial data (f0, fp0) are taken
/// as multiplied by e^{log_scale0}.
OdeTable integrate_whittaker_ode(double kappa, std::complex<double> mu, double x_from,
                                 std::complex<long double> f0, std::complex<long double> fp0,
                                 double log_scale0, double x_to, double rel_tol, double abs_tol,
                                 int max_steps);

/// Back-integrates Whittaker's equation from x_start down to x_end starting
/// from the recessive large-x behaviour e^{-x/2} x^kappa (1 + O(1/x)).
/// Throws DomainError if x_start < 10 (1 + |mu|^2 + kappa^2).
OdeTable integrate_whittaker_inward(double kappa, std::complex<double> mu,
                                    const IntegrationSpec& spec);

/// Asymptotic-series initial data at x: (f, f') with f ~ W_{kappa,mu}(x),
/// both divided by e^{-x/2} x^kappa.
std::pair<std::complex<long double>, std::complex<long double>> asymptotic_initial_data(
    double kappa, std::complex<double> mu, double x, int terms);

struct GridEigenSpec {
  double u_min = 0;
  double u_max = 12;
  int n_points = 20000;
  double bc_alpha = 0;  // boundary angle at u_min; Dirichlet at u_max
  int n_eigs = 10;

  void validate() const;
};

struct FdEigenResult {
  std::vector<double> eigenvalues;  // Richardson-extrapolated
  std::vector<double> coarse;       // n_points grid
  std::vector<double> fine;         // 2 n_points - 1 grid
  double truncation_shift = 0;      // max change when u_max - u_min is doubled
  bool truncation_warning = false;  // truncation_shift > 1e-6
};

/// Lowest eigenvalues of the three-point discretization of -d^2/du^2 + V
/// on one grid (no extrapolation). Robin condition cos(a) psi + sin(a) psi' = 0
/// at u_min by ghost-point elimination, Dirichlet at u_max.
std::vector<double> fd_grid_eigenvalues(const std::function<double(double)>& potential,
                                        double u_min, double u_max, int n_points, double bc_alpha,
                                        int n_eigs);

/// Two-grid Richardson-extrapolated eigenvalues plus a truncation check that
/// doubles the box at fixed spacing.
FdEigenResult fd_halfline_eigenvalues(const std::function<double(double)>& potential,
                                      const GridEigenSpec& spec);

}  // namespace morse::oracle
