#pragma once

// Minimal complex arithmetic over a multiprecision real. std::complex<T> is
// unspecified for non-builtin T, so the handful of operations the kernels
// need live here.

#include <boost/math/constants/constants.hpp>

#include <complex>

namespace morse::detail {

template <class R>
struct Cx {
  R re{0};
  R im{0};

  Cx() = default;
  Cx(const R& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Cx(const R& r, const R& i) : re(r), im(i) {}
  explicit Cx(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cx& operator-=(const Cx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cx& operator*=(const Cx& o) {
    R r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Cx& operator/=(const Cx& o) {
    // Smith's algorithm
    if (abs(o.re) >= abs(o.im)) {
      R q = o.im / o.re;
      R d = o.re + o.im * q;
      R r = (re + im * q) / d;
      im = (im - re * q) / d;
      re = std::move(r);
    } else {
      R q = o.re / o.im;
      R d = o.re * q + o.im;
      R r = (re * q + im) / d;
      im = (im * q - re) / d;
      re = std::move(r);
    }
    return *this;
  }
  Cx& operator*=(const R& s) {
    re *= s;
    im *= s;
    return *this;
  }

  std::complex<double> to_double() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

template <class R> Cx<R> operator+(Cx<R> a, const Cx<R>& b) { return a += b; }
template <class R> Cx<R> operator-(Cx<R> a, const Cx<R>& b) { return a -= b; }
template <class R> Cx<R> operator*(Cx<R> a, const Cx<R>& b) { return a *= b; }
template <class R> Cx<R> operator/(Cx<R> a, const Cx<R>& b) { return a /= b; }
template <class R> Cx<R> operator*(Cx<R> a, const R& s) { return a *= s; }
template <class R> Cx<R> operator*(const R& s, Cx<R> a) { return a *= s; }
template <class R> Cx<R> operator-(const Cx<R>& a) { return {-a.re, -a.im}; }

template <class R> Cx<R> conj(const Cx<R>& a) { return {a.re, -a.im}; }
template <class R> R norm(const Cx<R>& a) { return a.re * a.re + a.im * a.im; }
template <class R> R abs(const Cx<R>& a) { return hypot(a.re, a.im); }
template <class R> R arg(const Cx<R>& a) { return atan2(a.im, a.re); }
template <class R> bool is_zero(const Cx<R>& a) { return a.re == 0 && a.im == 0; }

template <class R>
Cx<R> exp(const Cx<R>& a) {
  R m = exp(a.re);
  if (a.im == 0) return {m, R(0)};
  return {m * cos(a.im), m * sin(a.im)};
}

/// Principal branch, cut along the negative real axis.
template <class R>
Cx<R> log(const Cx<R>& a) {
  return {log(abs(a)), arg(a)};
}

template <class R>
Cx<R> sin(const Cx<R>& a) {
  if (a.im == 0) return {sin(a.re), R(0)};
  return {sin(a.re) * cosh(a.im), cos(a.re) * sinh(a.im)};
}

/// Principal square root (Re >= 0).
template <class R>
Cx<R> sqrt(const Cx<R>& a) {
  if (is_zero(a)) return {};
  R m = abs(a);
  R r = sqrt((m + abs(a.re)) / 2);
  if (a.re >= 0) return {r, a.im / (2 * r)};
  R i = a.im >= 0 ? r : R(-r);
  return {abs(a.im) / (2 * r), i};
}

/// x^w for real x > 0 on the principal branch.
template <class R>
Cx<R> pow_real_base(const R& x, const Cx<R>& w) {
  return exp(w * log(x));
}

template <class R>
R pi() {
  return boost::math::constants::pi<R>();
}

}  // namespace morse::detail
