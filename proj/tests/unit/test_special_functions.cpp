#include "morse/errors.hpp"
#include "morse/special_functions.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace morse;
using cd = std::complex<double>;

namespace {

double rel(cd a, cd b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }
double rel(const ScaledValue& a, const ScaledValue& b) { return ScaledValue::relative_difference(a, b); }

}  // namespace

TEST_SUITE("special_functions") {

TEST_CASE("scaled value normalization and arithmetic") {
  ScaledValue v({12345.0, 0.0}, 3);
  CHECK(v.scale() == 7);
  CHECK(std::abs(v.significand().real() - 1.2345) < 1e-15);
  CHECK(ScaledValue().is_zero());
  CHECK(ScaledValue({0.0, 0.0}, 12).scale() == 0);
  auto tiny = ScaledValue::from_log(-5000.0, 0.0, true);
  auto prod = tiny * ScaledValue::from_log(5000.0, 0.0, true);
  CHECK(std::abs(prod.real() - 1.0) < 1e-11);
  CHECK(rel(ScaledValue::from_double(3.0) + ScaledValue::from_double(-1.0), ScaledValue::from_double(2.0)) < 1e-15);
  CHECK(ScaledValue::from_double(-0.5).sign() == -1);
}

TEST_CASE("gamma: classical values, reflection, oracle") {
  CHECK(std::abs(gamma_complex(1.0).real() - 1.0) < 1e-15);
  CHECK(std::abs(gamma_complex(0.5).real() - std::sqrt(std::numbers::pi)) < 1e-15);
  cd s(2, 3);
  cd g = gamma_complex(s).to_complex();
  CHECK(rel(g, oracle::to_std(oracle::gamma(oracle::C(2, 3)))) < 1e-15);
  CHECK(rel(gamma_complex(s + 1.0).to_complex(), s * g) < 1e-14);
  CHECK(rel(gamma_complex(std::conj(s)).to_complex(), std::conj(g)) < 1e-15);
  cd neg(-3.7, 0.4);
  CHECK(rel(gamma_complex(neg).to_complex(), oracle::to_std(oracle::gamma(oracle::C(-3.7, 0.4)))) < 1e-14);
  CHECK_THROWS_AS(gamma_complex(0.0), PoleError);
  CHECK_THROWS_AS(gamma_complex(-2.0), PoleError);
  // 50-digit rung also works
  auto g50 = gamma_complex({0.0, 20.0}, PrecisionConfig::for_digits(50));
  CHECK(rel(g50.to_complex(), oracle::to_std(oracle::gamma(oracle::C(0, 20)))) < 1e-14);
}

TEST_CASE("regularized 1F1") {
  CHECK(std::abs(hyp1f1_regularized(1.0, 2.0, 0.0).real() - 1.0) < 1e-15);
  CHECK(std::abs(hyp1f1_regularized(1.0, 1.0, 1.0).real() - std::numbers::e) < 1e-15);
  double x = std::sqrt(2.0);
  double expected = std::sqrt(std::numbers::pi) * oracle::erf_quadrature(x) / (2 * x) /
                    std::tgamma(1.5);
  CHECK(std::abs(hyp1f1_regularized(0.5, 1.5, -2.0).real() - expected) < 1e-14);
  // entire in b: finite at b = -1
  CHECK(std::isfinite(hyp1f1_regularized(0.5, -1.0, 0.7).real()));
  PrecisionConfig tight;
  tight.series_max_terms = 100;
  CHECK_THROWS_AS(hyp1f1_regularized(0.5, 1.5, 400.0, tight), ConvergenceError);
}

TEST_CASE("whittaker M against direct series") {
  for (auto [k, mu, x] : {std::tuple{0.5, cd(0.25, 0), 1.0}, std::tuple{1.0, cd(0.3, 0.4), 2.0},
                          std::tuple{-1.5, cd(0, 3), 4.5}}) {
    ScaledValue m = whittaker_m({k, mu, x});
    CHECK(rel(m.to_complex(), oracle::to_std(oracle::whittaker_m(k, mu, x))) < 1e-14);
  }
  CHECK(whittaker_m({0.5, {0.25, 0}, 1.0}).real() > 0);
  // leading behaviour x^{mu + 1/2}
  double x = 1e-8;
  CHECK(std::abs(whittaker_m({0, {0.5, 0}, x}).real() / x - 1) < 1e-7);
  // conjugation
  cd a = whittaker_m({1, {0.3, 0.4}, 2}).to_complex();
  cd b = whittaker_m({1, {0.3, -0.4}, 2}).to_complex();
  CHECK(rel(std::conj(a), b) < 1e-15);
  CHECK_THROWS_AS(whittaker_m({0, {-0.5, 0}, 1}), PoleError);
}

TEST_CASE("regularized M") {
  ScaledValue r = whittaker_m_regularized({0, {0.5, 0}, 1});
  CHECK(rel(r, whittaker_m({0, {0.5, 0}, 1})) < 1e-15);
  // at kappa = 0 the limit vanishes; kappa = 0.3 gives a nonzero limit
  cd lim0 = oracle::whittaker_m_regularized_limit(0, -0.5, 1);
  CHECK(std::abs(whittaker_m_regularized({0, {-0.5, 0}, 1}).to_complex() - lim0) < 1e-9);
  cd lim = oracle::whittaker_m_regularized_limit(0.3, -0.5, 1);
  CHECK(rel(whittaker_m_regularized({0.3, {-0.5, 0}, 1}).to_complex(), lim) < 1e-9);
  cd at_zero = whittaker_m_regularized({1, {0, 0}, 2}).to_complex();
  CHECK(rel(at_zero, oracle::to_std(oracle::whittaker_m(1, 0, 2))) < 1e-14);
  // M = Gamma(1+2mu) * regularized M
  cd mu(0.7, -1.2);
  cd lhs = whittaker_m({0.3, mu, 1.7}).to_complex();
  cd rhs = (gamma_complex(1.0 + 2.0 * mu) * whittaker_m_regularized({0.3, mu, 1.7})).to_complex();
  CHECK(rel(lhs, rhs) < 1e-12);
}

TEST_CASE("whittaker W closed forms and routes") {
  for (double x : {0.5, 1.0, 3.0, 10.0}) {
    ScaledValue w = whittaker_w({0, {0.5, 0}, x});
    CHECK(w.is_real_certified());
    CHECK(std::abs(w.real() / std::exp(-x / 2) - 1) < 1e-12);
  }
  CHECK(std::abs(whittaker_w({0, {0.5, 0}, 3}).real() - 0.22313016014842982) < 1e-16);
  CHECK(rel(whittaker_w({1, {0.3, 0}, 2}), whittaker_w({1, {-0.3, 0}, 2})) < 1e-14);
  ScaledValue wi = whittaker_w({-0.5, {0, 2}, 1});
  CHECK(wi.is_real_certified());
  CHECK(wi.significand().imag() == 0.0);
  CHECK(std::abs(wi.real() - 0.023307519478310983) < 1e-15);
  // certified route vs generic two-term route
  for (double t : {0.7, 2.5, 6.0}) {
    WhittakerParams p{0.4, {0, t}, 1.3};
    CHECK(rel(whittaker_w(p), whittaker_w_two_term(p)) < 1e-10);
  }
  // integer 2 mu: Richardson path
  ScaledValue w0 = whittaker_w({0, {0, 0}, 2});
  CHECK(rel(w0.to_complex(), std::sqrt(2.0 / std::numbers::pi) * oracle::k0_of_one()) < 1e-10);
  CHECK(std::abs(whittaker_w({0.5, {1.0, 0}, 2}).real() -
                 whittaker_w({0.5, {1.0 + 1e-4, 0}, 2}).real()) < 1e-3);
}

TEST_CASE("W derivative") {
  ScaledValue d = whittaker_w_prime({0, {0.5, 0}, 3});
  CHECK(std::abs(d.real() + 0.5 * std::exp(-1.5)) < 1e-15);
  for (auto [k, mu, x] : {std::tuple{-0.5, cd(0, 1.5), 2.0}, std::tuple{1.3, cd(0.2, 0), 0.8},
                          std::tuple{0.0, cd(0, 4), 1.0}}) {
    double h = 1e-5;
    double fd = (whittaker_w({k, mu, x + h}).real() - whittaker_w({k, mu, x - h}).real()) / (2 * h);
    double an = whittaker_w_prime({k, mu, x}).real();
    double scale = std::max(std::abs(an), std::abs(whittaker_w({k, mu, x}).real()));
    CHECK(std::abs(fd - an) <= 1e-6 * scale);
  }
  CHECK(whittaker_w_prime({-0.5, {0, 1.5}, 2}).is_real_certified());
}

TEST_CASE("asymptotic form") {
  CHECK(std::abs(whittaker_w_asymptotic({0, {3, 1}, 10}).real() - std::exp(-5.0)) < 1e-17);
  CHECK(std::abs(whittaker_w_asymptotic({2, {0, 0}, 20}).real() - 400 * std::exp(-10.0)) < 1e-15);
  double prev = 1;
  for (double x : {20.0, 40.0, 80.0}) {
    WhittakerParams p{0.5, {0.3, 0}, x};
    ScaledValue w = whittaker_w(p, PrecisionConfig::for_digits(50));
    double err = std::abs((w / whittaker_w_asymptotic(p)).real() - 1);
    CHECK(err < prev);
    CHECK(err * x < 0.2);
    prev = err;
  }
}

TEST_CASE("K-Bessel") {
  CHECK(std::abs(k_bessel({0.5, 0}, 1).real() - 0.46106850444789454) < 1e-15);
  CHECK(std::abs(k_bessel({0, 0}, 1).real() - oracle::k0_of_one()) < 1e-10);
  ScaledValue k5 = k_bessel({0, 5}, 1);
  CHECK(k5.is_real_certified());
  double scaled = k5.real() * std::exp(std::numbers::pi * 5 / 2);
  double pred = k_bessel_asymptotic_imag(5, 1, false);
  CHECK(scaled * pred > 0);
  CHECK(std::abs(scaled - pred) < 0.1 * std::abs(pred) + 0.05);
  CHECK_THROWS_AS(k_bessel_asymptotic_imag(1, 1), DomainError);
  double x = 2, t = 2 * std::cosh(1.0);
  CHECK(std::isfinite(k_bessel_asymptotic_imag(t, x)));
}

TEST_CASE("symmetry, conjugation, reality on random draws") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> K(-3, 3), M(0, 5), X(0.1, 30), U(0, 1);
  for (int i = 0; i < 40; ++i) {
    double k = K(rng), x = X(rng);
    cd mu = U(rng) < 0.5 ? cd(0, M(rng)) : cd(M(rng), 0);
    ScaledValue a = whittaker_w({k, mu, x}), b = whittaker_w({k, -mu, x});
    CHECK(rel(a, b) < 1e-10);
    CHECK(a.significand().imag() == 0.0);
    cd g(M(rng) - 2.5, M(rng) - 2.5);
    CHECK(rel(whittaker_w({k, std::conj(g), x}).conj(), whittaker_w({k, g, x})) < 1e-10);
  }
}

TEST_CASE("validation and precision loss") {
  CHECK_THROWS_AS(whittaker_w({0, {1, 0}, -1}), DomainError);
  CHECK_THROWS_AS(whittaker_w({NAN, {1, 0}, 1}), DomainError);
  PrecisionConfig bad;
  bad.halfint_offset = 0.1;
  CHECK_THROWS(whittaker_w({0, {1, 0}, 1}, bad));
  // large t at tiny x: catastrophic cancellation is reported, not hidden
  CHECK_THROWS_AS(whittaker_w({0, {0.3, 0}, 200}), PrecisionLossError);
}

TEST_CASE("high-precision rendering") {
  auto s = render_high_precision(DisplayFunction::whittaker_w, {0, {0.5, 0}, 3}, PrecisionConfig::for_digits(50));
  // near-integer 2 mu costs a few digits; what is printed must be correct
  std::string ref = "2.2313016014842982893328047076401252134217162936108";
  std::string mant = s.substr(0, s.find('e'));
  CHECK(mant.size() >= 30);
  CHECK(ref.compare(0, mant.size() - 1, mant, 0, mant.size() - 1) == 0);
  CHECK(s.substr(s.find('e')) == "e-01");
}

}
