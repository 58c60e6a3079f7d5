#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace morse {

/// Base for every numeric failure the library reports.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Raised when the estimated cancellation exceeds the digit budget.
class PrecisionLossError : public NumericError {
 public:
  PrecisionLossError(const std::string& what, double digits_lost)
      : NumericError(what), digits_lost_(digits_lost) {}
  double digits_lost() const noexcept { return digits_lost_; }

 private:
  double digits_lost_;
};

class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

class StiffnessError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ScanExhaustedError : public NumericError {
 public:
  using NumericError::NumericError;
};

class MonotonicityViolation : public NumericError {
 public:
  MonotonicityViolation(const std::string& what, double k, double u0, int n)
      : NumericError(what), k_(k), u0_(u0), n_(n) {}
  double k() const noexcept { return k_; }
  double u0() const noexcept { return u0_; }
  int n() const noexcept { return n_; }

 private:
  double k_, u0_;
  int n_;
};

class CorrespondenceViolation : public NumericError {
 public:
  CorrespondenceViolation(const std::string& what, double eigenvalue)
      : NumericError(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

class HBViolation : public NumericError {
 public:
  HBViolation(const std::string& what, std::complex<double> witness)
      : NumericError(what), witness_(witness) {}
  std::complex<double> witness() const noexcept { return witness_; }

 private:
  std::complex<double> witness_;
};

class InterlacingViolation : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace morse
