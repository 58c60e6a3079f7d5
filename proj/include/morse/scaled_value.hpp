#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace morse {

/// A number carried as significand x 10^scale, normalized so that
/// 1 <= |significand| < 10 (or significand == 0 exactly).
///
/// Magnitudes such as e^{-e^u} and e^{-pi t / 2} leave the double range long
/// before they leave the range the library has to handle, so every special
/// function result is handed out in this form.
class ScaledValue {
 public:
  ScaledValue() = default;

  /// Normalizes (significand, scale); a zero significand forces scale 0.
  ScaledValue(std::complex<double> significand, std::int64_t scale, bool real_certified = false);

  static ScaledValue from_double(double v, bool real_certified = true);
  static ScaledValue from_complex(std::complex<double> v, bool real_certified = false);
  /// Builds e^{log_magnitude} * e^{i phase}.
  static ScaledValue from_log(double log_magnitude, double phase, bool real_certified = false);

  const std::complex<double>& significand() const { return significand_; }
  std::int64_t scale() const { return scale_; }
  bool is_real_certified() const { return real_certified_; }
  bool is_zero() const { return significand_ == std::complex<double>(0.0, 0.0); }

  /// Real part of the significand's sign: -1, 0 or +1.
  int sign() const;
  /// log10 |value|; -infinity for zero.
  double log10_abs() const;
  /// Natural log |value|.
  double log_abs() const;

  /// Plain double/complex value (may over/underflow to inf/0).
  std::complex<double> to_complex() const;
  double real() const { return to_complex().real(); }
  double imag() const { return to_complex().imag(); }

  /// Value multiplied by 10^shift, returned as complex<double>.
  std::complex<double> to_complex_shifted(std::int64_t shift) const;

  ScaledValue conj() const;
  ScaledValue operator*(const ScaledValue& o) const;
  ScaledValue operator/(const ScaledValue& o) const;
  ScaledValue operator+(const ScaledValue& o) const;
  ScaledValue operator-(const ScaledValue& o) const;
  ScaledValue operator-() const;
  ScaledValue scaled_by(double factor) const;

  /// |a - b| / max(|a|, |b|) computed without leaving scaled form.
  static double relative_difference(const ScaledValue& a, const ScaledValue& b);

  /// Scientific rendering with `digits` significant digits.
  std::string to_string(int digits = 17) const;

 private:
  void normalize();

  std::complex<double> significand_{0.0, 0.0};
  std::int64_t scale_ = 0;
  bool real_certified_ = false;
};

}  // namespace morse
