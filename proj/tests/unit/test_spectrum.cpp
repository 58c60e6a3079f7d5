#include "morse/errors.hpp"
#include "morse/ode_oracle.hpp"
#include "morse/special_functions.hpp"
#include "morse/spectrum.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace morse;

namespace {

std::vector<double> fd_reference(const MorseProblem& p, int n) {
  oracle::GridEigenSpec spec;
  spec.u_min = p.u0;
  spec.u_max = std::max(p.u0 + 4, std::log(4.0 * std::sqrt(400.0) + 8 * std::abs(p.k)) + 2);
  spec.n_points = 6000;
  spec.bc_alpha = p.alpha;
  spec.n_eigs = n;
  return oracle::fd_halfline_eigenvalues([k = p.k](double u) { return potential_value(k, u); }, spec)
      .eigenvalues;
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("potential and rescaling") {
  CHECK(potential_value(0, 0) == 0.25);
  CHECK(potential_value(-1, std::log(2.0)) == doctest::Approx(-1).epsilon(1e-15));
  double e = std::numbers::e;
  CHECK(potential_value(2, 1) == doctest::Approx(e * e / 4 + 2 * e).epsilon(1e-15));
  auto [k1, u1] = rescale_general(0.25, -0.7, 1.3);
  CHECK(k1 == doctest::Approx(-2.8));
  CHECK(u1 == doctest::Approx(1.3 + std::log(4.0)));
  auto [k2, u2] = rescale_general(1, 1, 0);
  CHECK(k2 == doctest::Approx(2));
  CHECK(u2 == doctest::Approx(std::log(2.0)));
  auto [k3, u3] = rescale_general(4, 0, 1);
  CHECK(k3 == 0);
  CHECK(u3 == doctest::Approx(1));
  CHECK_THROWS(rescale_general(-1, 0, 0));
}

TEST_CASE("eigenfunction closed form and oracle") {
  MorseProblem p{0, 0, 0};
  for (double u : {0.0, 0.5, 1.5}) {
    double expected = std::exp(-u / 2 - std::exp(u) / 2);
    CHECK(eigenfunction_value(p, -0.25, u).real() == doctest::Approx(expected).epsilon(1e-13));
  }
  MorseProblem q{-0.5, 0, 0};
  ScaledValue psi = eigenfunction_value(q, 4.0, 0);
  CHECK(psi.is_real_certified());
  oracle::IntegrationSpec spec;
  spec.x_start = oracle::default_anchor(0.5, {0, 2});
  spec.x_end = 1;
  ScaledValue ode = oracle::integrate_whittaker_inward(0.5, {0, 2}, spec).final_value();
  CHECK(ScaledValue::relative_difference(psi, ode) < 1e-9);
  // derivative against a central difference in u
  MorseProblem r{-0.5, -1, 0};
  double h = 1e-5;
  double fd = (eigenfunction_value(r, 4.0, h).real() - eigenfunction_value(r, 4.0, -h).real()) / (2 * h);
  CHECK(eigenfunction_derivative(r, 4.0, 0).real() == doctest::Approx(fd).epsilon(1e-7));
  CHECK_THROWS_AS(eigenfunction_value(q, 4.0, -1), DomainError);
}

TEST_CASE("Z function") {
  MorseProblem p{0, 0, 0};
  CHECK(z_function(p, 0.5).real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  std::complex<double> mu(0.3, 1.7);
  CHECK(ScaledValue::relative_difference(z_function(p, mu), z_function(p, -mu)) < 1e-12);
  ScaledValue z5 = z_function(p, {0, 5});
  CHECK(z5.is_real_certified());
  double pred = k_bessel_asymptotic_imag(5, 0.5, false);
  CHECK(z_imag_scaled(p, 5) * pred > 0);
}

TEST_CASE("shooting function") {
  MorseProblem p{0, 0, 0};
  CHECK(shooting_function(p, -0.25) > 0);
  // Dirichlet: proportional to Z(i sqrt E)
  double s = shooting_function(p, 9.0);
  CHECK(s * z_imag_scaled(p, 3.0) > 0);
}

TEST_CASE("scan step and sign-change refinement") {
  CHECK(density_step(1) == doctest::Approx(0.25 * std::numbers::pi / 2));
  CHECK(density_step(1000) == doctest::Approx(0.25 * std::numbers::pi / std::log(1000.0)));
  std::vector<double> grid{0, 1, 2, 3, 4};
  auto f = [](double x) { return std::cos(x); };
  auto vals = evaluate_grid(f, grid, 2);
  auto roots = refine_sign_changes(f, grid, vals, 1e-12);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].root == doctest::Approx(std::numbers::pi / 2).epsilon(1e-11));
}

TEST_CASE("Dirichlet zeros against finite differences") {
  for (MorseProblem p : {MorseProblem{0, 0, 0}, MorseProblem{1, 0, 0}, MorseProblem{-0.5, 0, 0}}) {
    auto e = dirichlet_eigenvalues(p, 6);
    auto fd = fd_reference(p, 6);
    for (int i = 0; i < 6; ++i) CHECK(e[i] == doctest::Approx(fd[i]).epsilon(1e-5));
    for (int i = 1; i < 6; ++i) CHECK(e[i] > e[i - 1]);
  }
}

TEST_CASE("zeros follow the asymptotic phase") {
  MorseProblem p{0, 0, 0};
  auto zs = dirichlet_zero_scan(p, 20);
  REQUIRE(zs.size() >= 5);
  double prev_err = 1e9;
  for (std::size_t i = 2; i < zs.size(); i += 3) {
    // Z(i t) = W_{0,it}(1) is proportional to K_{it}(1/2)
    double t = zs[i].coordinate, x = 0.5;
    double phase = t * std::acosh(t / x) - std::sqrt(t * t - x * x) + std::numbers::pi / 4;
    double err = std::abs(std::remainder(phase, std::numbers::pi));
    CHECK(err < 0.2);
    CHECK(err <= prev_err * 1.5);
    prev_err = err;
  }
  for (std::size_t i = 0; i < zs.size(); ++i) {
    CHECK(zs[i].index == static_cast<int>(i));
    CHECK(zs[i].axis == Axis::imaginary);
    CHECK(zs[i].energy == doctest::Approx(zs[i].coordinate * zs[i].coordinate));
    CHECK(zs[i].bracket.second - zs[i].bracket.first <= 1e-10 * std::max(1.0, zs[i].coordinate));
    // duality: shooting function changes sign across t^2
    double lo = zs[i].energy * (1 - 1e-6), hi = zs[i].energy * (1 + 1e-6);
    CHECK(shooting_function(p, lo) * shooting_function(p, hi) < 0);
  }
}

TEST_CASE("exceptional real zeros") {
  CHECK(exceptional_real_zeros({0, 0, 0}).zeros.empty());
  CHECK(exceptional_real_zeros({1, 0, 0}).zeros.empty());
  MorseProblem p{-2, -2, 0};
  RealZeroScan r = exceptional_real_zeros(p);
  REQUIRE(r.zeros.size() == 1);
  const SpectralZero& z = r.zeros[0];
  CHECK(z.axis == Axis::real);
  CHECK(z.energy > -4);
  CHECK(z.energy < 0);
  CHECK(z.energy == doctest::Approx(fd_reference(p, 1)[0]).epsilon(1e-5));
  CHECK_FALSE(r.double_zero_at_origin);
}

TEST_CASE("general boundary angle") {
  MorseProblem d{0, 0, 0};
  auto ed = eigenvalues_general_alpha(d, 4);
  auto ez = dirichlet_eigenvalues(d, 4);
  for (int i = 0; i < 4; ++i) CHECK(ed[i] == doctest::Approx(ez[i]).epsilon(1e-8));
  MorseProblem n{0, 0, std::numbers::pi / 2};
  auto en = eigenvalues_general_alpha(n, 4);
  auto fd = fd_reference(n, 4);
  for (int i = 0; i < 4; ++i) CHECK(en[i] == doctest::Approx(fd[i]).epsilon(1e-5));
  // Neumann interlaces Dirichlet
  for (int i = 0; i < 4; ++i) CHECK(en[i] < ed[i]);
  for (int i = 0; i + 1 < 4; ++i) CHECK(ed[i] < en[i + 1]);
  auto eneg = eigenvalues_general_alpha({-1, 0, 0}, 3);
  CHECK(eneg[0] > -1);
  CHECK_THROWS_AS(eigenvalues_general_alpha(d, 50, 100), ScanExhaustedError);
}

TEST_CASE("lower bounds") {
  CHECK(dirichlet_eigenvalues({0, 0, 0}, 1)[0] > 0);
  CHECK(dirichlet_eigenvalues({1, 0, 0}, 1)[0] > 0);
  CHECK(dirichlet_eigenvalues({-1, 0, 0}, 1)[0] > -1);
  CHECK(dirichlet_eigenvalues({-1, 1, 0}, 1)[0] > -1);
}

TEST_CASE("Weyl integral") {
  CHECK(weyl_integral(1, 0, potential_value(1, 0)) == 0);
  CHECK(turning_point(0, 100) == doctest::Approx(std::log(20.0)));
  double w = weyl_integral(0, 0, 1e4);
  double closed = weyl_closed_form(0, 1e4) / std::numbers::pi;
  CHECK(std::abs(w - closed) < 0.01);
  CHECK(weyl_integral(0, 0, 1e4, 1e-14) == doctest::Approx(w).epsilon(1e-8));
  // non-monotone head handled
  CHECK(std::isfinite(weyl_integral(-3, -2, 50)));
  CHECK(weyl_integral(1, 0, 0.1) == 0);
  // T below V(u0) on the descending head of the well
  CHECK_THROWS_AS(weyl_integral(-3, -5, -1), DomainError);
}

TEST_CASE("asymptotic count coefficients") {
  CHECK(asymptotic_count_c1() == doctest::Approx(2 / std::numbers::pi));
  CHECK(asymptotic_count_c2(0) == doctest::Approx(2 / std::numbers::pi * (2 * std::log(2.0) - 1)));
  CHECK(std::abs(asymptotic_count_c2(2 * std::log(2.0) - 1)) < 1e-15);
  double T = 50;
  CHECK(asymptotic_count(1, T) ==
        doctest::Approx(asymptotic_count_c1() * T * std::log(T) + asymptotic_count_c2(1) * T));
}

TEST_CASE("counting report") {
  CountingReport r = counting_report({0, 0, 0}, 20, 5);
  REQUIRE(r.rows.size() == 5);
  CHECK(r.rows.back().T == doctest::Approx(20));
  CHECK(r.max_abs_diff <= 2);
  CHECK(r.drift <= 3);
  for (auto& row : r.rows) CHECK(row.observed % 2 == 0);
  CHECK_THROWS(counting_report({0, 0, 1}, 20, 5));
}

TEST_CASE("monotonicity") {
  MonotonicityReport a = monotonicity_check({0}, {0, 0.5, 1}, 0, 3);
  CHECK(a.violations.empty());
  CHECK(a.comparisons == 6);
  MonotonicityReport b = monotonicity_check({-1, 0, 1}, {1}, 0, 3);
  CHECK(b.violations.empty());
  MonotonicityReport c = monotonicity_check({-1}, {std::log(2.0), 1, 2}, 0, 2);
  CHECK(c.violations.empty());
}

TEST_CASE("problem validation") {
  CHECK_THROWS(MorseProblem{NAN, 0, 0}.validate());
  CHECK(MorseProblem{0, 0, 7}.normalized().alpha == doctest::Approx(7 - 2 * std::numbers::pi));
  CHECK(MorseProblem{0, 1, 0}.x0() == doctest::Approx(std::numbers::e));
  CHECK_THROWS(dirichlet_zero_scan({0, 0, 0}, -1));
}

}
