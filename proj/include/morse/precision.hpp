#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace morse {

namespace bmp = boost::multiprecision;

/// Fixed-precision mpfr reals. Precision lives in the type, so there is no
/// process-wide precision state and kernels stay reentrant.
template <unsigned Digits>
using MpReal = bmp::number<bmp::mpfr_float_backend<Digits, bmp::allocate_stack>, bmp::et_off>;

using Real34 = MpReal<34>;
using Real50 = MpReal<50>;
using Real100 = MpReal<100>;

/// Working-precision controls shared by every special-function evaluation.
struct PrecisionConfig {
  int working_digits = 34;
  double series_tail_rel = 1e-36;
  int series_max_terms = 5000;
  double halfint_offset = 1e-6;

  /// Defaults tied to a digit count: tail threshold 10^-(digits+2).
  static PrecisionConfig for_digits(int digits) {
    PrecisionConfig cfg;
    cfg.working_digits = digits;
    cfg.series_tail_rel = std::pow(10.0, -(digits + 2));
    return cfg;
  }

  void validate() const {
    if (working_digits < 16) throw std::invalid_argument("working_digits must be >= 16");
    if (!(series_tail_rel > 0)) throw std::invalid_argument("series_tail_rel must be positive");
    if (series_max_terms < 100) throw std::invalid_argument("series_max_terms must be >= 100");
    if (!(halfint_offset > 0 && halfint_offset < 1e-3))
      throw std::invalid_argument("halfint_offset must lie in (0, 1e-3)");
  }

  /// Digits the mpfr type actually carries: smallest ladder rung >= working_digits.
  int rung_digits() const {
    if (working_digits <= 34) return 34;
    if (working_digits <= 50) return 50;
    if (working_digits <= 100) return 100;
    throw std::invalid_argument("working_digits above 100 is not supported (ladder 34/50/100)");
  }

  /// Next rung up, used when a scan hits a precision-loss error.
  PrecisionConfig escalated() const {
    int next = rung_digits() == 34 ? 50 : 100;
    if (rung_digits() == 100) throw std::runtime_error("precision ladder exhausted");
    PrecisionConfig cfg = *this;
    cfg.working_digits = next;
    cfg.series_tail_rel = std::pow(10.0, -(next + 2));
    return cfg;
  }
};

/// Runs `fn.template operator()<Real>()` with the mpfr type for cfg's rung.
template <class Fn>
decltype(auto) dispatch_precision(const PrecisionConfig& cfg, Fn&& fn) {
  switch (cfg.rung_digits()) {
    case 34:
      return fn.template operator()<Real34>();
    case 50:
      return fn.template operator()<Real50>();
    default:
      return fn.template operator()<Real100>();
  }
}

}  // namespace morse
