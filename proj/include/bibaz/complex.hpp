#pragma once

// Cartesian complex numbers over an arbitrary scalar field.
//
// std::complex is only specified for floating-point types, so exact-mode
// coefficients need their own pair type. No polar form is ever stored.

#include "bibaz/scalar.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace bibaz {

template <Scalar T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Complex(T real, T imag) : re(std::move(real)), im(std::move(imag)) {}
  Complex(int real) : re(real) {}  // NOLINT(google-explicit-constructor)

  static Complex i() { return {T(0), T(1)}; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    T d = o.re * o.re + o.im * o.im;
    if (d == 0) throw std::domain_error("complex division by zero");
    T r = (re * o.re + im * o.im) / d;
    T i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {T(-a.re), T(-a.im)}; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& c) {
    os << c.re;
    if (c.im != 0) os << (c.im < 0 ? " - " : " + ") << (c.im < 0 ? T(-c.im) : c.im) << "i";
    return os;
  }
};

/// |z|^2, exact in both modes.
template <Scalar T>
T norm(const Complex<T>& z) {
  return z.re * z.re + z.im * z.im;
}

inline double abs(const Complex<double>& z) { return std::hypot(z.re, z.im); }

inline Complex<double> to_double(const Complex<Rational>& z) { return {to_double(z.re), to_double(z.im)}; }
inline Complex<double> to_double(const Complex<double>& z) { return z; }

}  // namespace bibaz
