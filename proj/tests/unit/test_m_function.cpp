#include "morse/errors.hpp"
#include "morse/m_function.hpp"
#include "morse/spectrum.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace morse;
using cd = std::complex<double>;

namespace {
double rel(cd a, cd b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }
}  // namespace

TEST_SUITE("m_function") {

TEST_CASE("matches the eigenfunction log-derivative") {
  for (auto [k, u0, E] : {std::tuple{0.0, 0.0, cd(1, 2)}, std::tuple{-0.5, 0.3, cd(-3, 0.5)},
                          std::tuple{1.0, -0.5, cd(20, 4)}}) {
    MorseProblem p{k, u0, 0};
    cd ratio = (eigenfunction_derivative(p, E, u0) / eigenfunction_value(p, E, u0)).to_complex();
    CHECK(rel(m_of_energy(k, u0, E), ratio) < 1e-8);
  }
}

TEST_CASE("real below the spectrum") {
  cd m = m_of_energy(0, 0, -0.3);
  CHECK(m.imag() == doctest::Approx(0).epsilon(1e-14));
  // closed form at E = -1/4 with k = 0: psi = e^{-u/2 - e^u/2}
  CHECK(m_of_energy(0, 0, -0.25).real() == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("conjugate symmetry") {
  cd E(3, 1.5);
  CHECK(rel(m_of_energy(0.4, 0.2, std::conj(E)), std::conj(m_of_energy(0.4, 0.2, E))) < 1e-12);
}

TEST_CASE("fractional-linear family") {
  cd z(2, 0.7);
  cd m0 = m_principal(0, 0, z);
  CHECK(m_alpha(0, 0, z, 0) == m0);
  CHECK(rel(m_alpha(0, 0, z, std::numbers::pi / 2), -1.0 / m0) < 1e-14);
  for (double a : {0.3, 1.1, 2.5}) {
    cd there = fractional_linear(m0, a);
    CHECK(rel(fractional_linear(there, -a), m0) < 1e-12);
  }
}

TEST_CASE("pole at a Dirichlet eigenvalue") {
  double e0 = dirichlet_eigenvalues({0, 0, 0}, 1)[0];
  CHECK_THROWS_AS(m_of_energy(0, 0, e0), PoleError);
  // alpha = pi/2 maps the pole to a finite value
  CHECK(std::abs(m_alpha(0, 0, std::sqrt(e0), std::numbers::pi / 2)) < 1e-6);
}

TEST_CASE("Riccati residual") {
  double r3 = riccati_residual(0.3, 0.1, {1, 2}, 1e-3);
  double r4 = riccati_residual(0.3, 0.1, {1, 2}, 5e-4);
  double r5 = riccati_residual(0.3, 0.1, {1, 2}, 2.5e-4);
  CHECK(r3 <= 1e-5 * (1 + std::abs(cd(1, 2))));
  CHECK(r3 / r4 == doctest::Approx(4).epsilon(0.05));
  CHECK(r4 / r5 == doctest::Approx(4).epsilon(0.05));
  CHECK(riccati_residual(0.3, 0.1, {1, -2}, 1e-3) == doctest::Approx(r3).epsilon(1e-10));
  CHECK_THROWS(riccati_residual(0, 0, {1, 1}, 1e-2));
}

TEST_CASE("Herglotz sweep") {
  HerglotzSweep s = herglotz_sweep(0, 0, 30, 11);
  CHECK(s.samples == 30);
  CHECK(s.violations == 0);
  CHECK(s.min_imag > 0);
}

TEST_CASE("large |z| behaviour") {
  double s20 = asymptotic_sup(0, 0, 20);
  double s40 = asymptotic_sup(0, 0, 40);
  CHECK(s40 < s20);
  CHECK(s20 < 0.1);
}

TEST_CASE("pole and zero correspondence") {
  CorrespondenceReport r = pole_zero_correspondence({0, 0, 0}, 3);
  CHECK(r.pole_matches == 3);
  CHECK(r.zero_matches == 3);
  CHECK(r.interlaced);
  CHECK(r.monotone_between);
}

TEST_CASE("table rows") {
  auto rows = m_table(0, 0, 0, {cd(1, 1), cd(2, 1)});
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].E == cd(2, 1));
  CHECK(rows[0].value.imag() > 0);
}

}
