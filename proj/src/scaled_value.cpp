#include "morse/scaled_value.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace morse {

namespace {

constexpr double kLn10 = 2.302585092994045684;

std::complex<double> pow10_times(std::complex<double> z, std::int64_t e) {
  // Split the exponent so intermediate powers stay finite.
  while (e > 300) {
    z *= 1e300;
    e -= 300;
  }
  while (e < -300) {
    z *= 1e-300;
    e += 300;
  }
  return z * std::pow(10.0, static_cast<double>(e));
}

}  // namespace

ScaledValue::ScaledValue(std::complex<double> significand, std::int64_t scale, bool real_certified)
    : significand_(significand), scale_(scale), real_certified_(real_certified) {
  if (real_certified_) significand_.imag(0.0);
  normalize();
}

void ScaledValue::normalize() {
  double m = std::abs(significand_);
  if (m == 0.0 || !std::isfinite(m)) {
    if (m == 0.0) {
      significand_ = {0.0, 0.0};
      scale_ = 0;
    }
    return;
  }
  auto shift = static_cast<std::int64_t>(std::floor(std::log10(m)));
  significand_ = pow10_times(significand_, -shift);
  scale_ += shift;
  // Rounding in log10 can leave |s| a hair outside [1, 10).
  m = std::abs(significand_);
  if (m >= 10.0) {
    significand_ /= 10.0;
    ++scale_;
  } else if (m < 1.0) {
    significand_ *= 10.0;
    --scale_;
  }
}

ScaledValue ScaledValue::from_double(double v, bool real_certified) {
  return ScaledValue({v, 0.0}, 0, real_certified);
}

ScaledValue ScaledValue::from_complex(std::complex<double> v, bool real_certified) {
  return ScaledValue(v, 0, real_certified);
}

ScaledValue ScaledValue::from_log(double log_magnitude, double phase, bool real_certified) {
  double l10 = log_magnitude / kLn10;
  double e = std::floor(l10);
  double frac = l10 - e;
  std::complex<double> s = std::polar(std::pow(10.0, frac), phase);
  return ScaledValue(s, static_cast<std::int64_t>(e), real_certified);
}

int ScaledValue::sign() const {
  double r = significand_.real();
  return (r > 0) - (r < 0);
}

double ScaledValue::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log10(std::abs(significand_)) + static_cast<double>(scale_);
}

double ScaledValue::log_abs() const { return log10_abs() * kLn10; }

std::complex<double> ScaledValue::to_complex() const { return pow10_times(significand_, scale_); }

std::complex<double> ScaledValue::to_complex_shifted(std::int64_t shift) const {
  return pow10_times(significand_, scale_ + shift);
}

ScaledValue ScaledValue::conj() const {
  return ScaledValue(std::conj(significand_), scale_, real_certified_);
}

ScaledValue ScaledValue::operator*(const ScaledValue& o) const {
  return ScaledValue(significand_ * o.significand_, scale_ + o.scale_,
                     real_certified_ && o.real_certified_);
}

ScaledValue ScaledValue::operator/(const ScaledValue& o) const {
  return ScaledValue(significand_ / o.significand_, scale_ - o.scale_,
                     real_certified_ && o.real_certified_);
}

ScaledValue ScaledValue::operator+(const ScaledValue& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  std::int64_t s = std::max(scale_, o.scale_);
  std::complex<double> sum =
      pow10_times(significand_, scale_ - s) + pow10_times(o.significand_, o.scale_ - s);
  return ScaledValue(sum, s, real_certified_ && o.real_certified_);
}

ScaledValue ScaledValue::operator-() const {
  return ScaledValue(-significand_, scale_, real_certified_);
}

ScaledValue ScaledValue::operator-(const ScaledValue& o) const { return *this + (-o); }

ScaledValue ScaledValue::scaled_by(double factor) const {
  return ScaledValue(significand_ * factor, scale_, real_certified_);
}

double ScaledValue::relative_difference(const ScaledValue& a, const ScaledValue& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  std::int64_t s = std::max(a.is_zero() ? b.scale_ : a.scale_, b.is_zero() ? a.scale_ : b.scale_);
  std::complex<double> x = pow10_times(a.significand_, a.scale_ - s);
  std::complex<double> y = pow10_times(b.significand_, b.scale_ - s);
  return std::abs(x - y) / std::max(std::abs(x), std::abs(y));
}

std::string ScaledValue::to_string(int digits) const {
  char buf[128];
  int p = std::max(1, digits) - 1;
  if (real_certified_ || significand_.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.*fe%+lld", p, significand_.real(),
                  static_cast<long long>(scale_));
  } else {
    std::snprintf(buf, sizeof buf, "(%.*f%+.*fi)e%+lld", p, significand_.real(), p,
                  significand_.imag(), static_cast<long long>(scale_));
  }
  return buf;
}

}  // namespace morse
