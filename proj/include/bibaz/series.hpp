#pragma once

// Truncated formal power series c_0 + c_1 z + ... + c_N z^N with complex
// coefficients.
//
// The scalar type selects the mode: TruncSeries<Rational> is exact (every
// operation is closed over Q[i], nothing is rounded), TruncSeries<double> is
// floating. Modes never mix implicitly; use to_floating() to convert.
//
// Binary operations return the smaller of the two operand orders. Nothing is
// zero-padded, so a result's order is always the order through which it is
// known.

#include "bibaz/complex.hpp"
#include "bibaz/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace bibaz {

template <Scalar T>
class TruncSeries {
 public:
  using scalar_type = T;
  using value_type = Complex<T>;

  TruncSeries(std::vector<value_type> coeffs) : coeffs_(std::move(coeffs)) {  // NOLINT
    if (coeffs_.empty()) throw SeriesDomainError("series needs at least one coefficient");
  }
  TruncSeries(std::initializer_list<value_type> coeffs) : TruncSeries(std::vector<value_type>(coeffs)) {}

  static TruncSeries zero(int order) { return TruncSeries(std::vector<value_type>(checked(order) + 1)); }
  static TruncSeries constant(value_type c, int order) {
    auto s = zero(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }
  /// The series z at the given order (order ≥ 1).
  static TruncSeries identity(int order) {
    if (order < 1) throw SeriesDomainError("identity series z needs order >= 1");
    auto s = zero(order);
    s.coeffs_[1] = value_type(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const value_type& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const value_type> coeffs() const { return coeffs_; }

  TruncSeries truncated(int order) const {
    if (order < 0 || order > this->order()) throw SeriesDomainError("cannot truncate to order " + std::to_string(order));
    return TruncSeries(std::vector<value_type>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  /// s(z)/z for a series with zero constant term.
  TruncSeries divided_by_z() const {
    if (!coeffs_[0].is_zero()) throw SeriesDomainError("divided_by_z needs zero constant term");
    if (order() < 1) throw SeriesDomainError("divided_by_z needs order >= 1");
    return TruncSeries(std::vector<value_type>(coeffs_.begin() + 1, coeffs_.end()));
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    return zip(a, b, [](const value_type& x, const value_type& y) { return x + y; });
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return zip(a, b, [](const value_type& x, const value_type& y) { return x - y; });
  }
  friend TruncSeries operator-(const TruncSeries& a) {
    std::vector<value_type> out(a.coeffs_.size());
    std::transform(a.coeffs_.begin(), a.coeffs_.end(), out.begin(), [](const value_type& x) { return -x; });
    return TruncSeries(std::move(out));
  }
  friend TruncSeries operator*(const value_type& c, const TruncSeries& a) {
    std::vector<value_type> out(a.coeffs_.size());
    std::transform(a.coeffs_.begin(), a.coeffs_.end(), out.begin(), [&](const value_type& x) { return c * x; });
    return TruncSeries(std::move(out));
  }

  /// Coefficient-wise equality; orders must agree as well.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
    for (int n = 0; n <= s.order(); ++n) {
      if (n) os << " + ";
      os << "(" << s.coeffs_[n] << ")";
      if (n == 1) os << "z";
      if (n > 1) os << "z^" << n;
    }
    return os << " + O(z^" << s.order() + 1 << ")";
  }

 private:
  static std::size_t checked(int order) {
    if (order < 0) throw SeriesDomainError("negative truncation order");
    return static_cast<std::size_t>(order);
  }

  template <class Op>
  static TruncSeries zip(const TruncSeries& a, const TruncSeries& b, Op op) {
    const int n = std::min(a.order(), b.order());
    std::vector<value_type> out;
    out.reserve(n + 1);
    for (int i = 0; i <= n; ++i) out.push_back(op(a.coeffs_[i], b.coeffs_[i]));
    return TruncSeries(std::move(out));
  }

  std::vector<value_type> coeffs_;
};

/// A series z + a_2 z^2 + ... ; the normalization is checked exactly.
template <Scalar T>
class NormalizedSeries {
 public:
  using value_type = Complex<T>;

  explicit NormalizedSeries(TruncSeries<T> s) : s_(std::move(s)) {
    if (s_.order() < 1 || !s_[0].is_zero() || !(s_[1] == value_type(1)))
      throw SeriesDomainError("normalized series needs c0 = 0 and c1 = 1");
  }

  /// Builds z + a_2 z^2 + ... + a_N z^N from {a_2, ..., a_N}.
  static NormalizedSeries from_tail(std::vector<value_type> tail) {
    std::vector<value_type> c{value_type(0), value_type(1)};
    c.insert(c.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
    return NormalizedSeries(TruncSeries<T>(std::move(c)));
  }

  const TruncSeries<T>& series() const { return s_; }
  int order() const { return s_.order(); }
  const value_type& operator[](std::size_t n) const { return s_[n]; }

  friend bool operator==(const NormalizedSeries& a, const NormalizedSeries& b) { return a.s_ == b.s_; }

 private:
  TruncSeries<T> s_;
};

/// Cauchy product.
template <Scalar T>
TruncSeries<T> mul(const TruncSeries<T>& a, const TruncSeries<T>& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex<T>> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return TruncSeries<T>(std::move(out));
}

template <Scalar T>
TruncSeries<T> operator*(const TruncSeries<T>& a, const TruncSeries<T>& b) {
  return mul(a, b);
}

/// a / b for b_0 ≠ 0.
template <Scalar T>
TruncSeries<T> divide(const TruncSeries<T>& a, const TruncSeries<T>& b) {
  if (b[0].is_zero()) throw SeriesDomainError("divide: divisor has zero constant term");
  const int n = std::min(a.order(), b.order());
  std::vector<Complex<T>> q(n + 1);
  for (int i = 0; i <= n; ++i) {
    Complex<T> acc = a[i];
    for (int j = 1; j <= i; ++j) acc -= b[j] * q[i - j];
    q[i] = acc / b[0];
  }
  return TruncSeries<T>(std::move(q));
}

/// s^e for s_0 = 1 and real e, via the J.C.P. Miller recurrence
///   n w_n = Σ_{j=1..n} (j(e+1) − n) s_j w_{n−j}.
/// Exact mode takes a rational exponent.
template <Scalar T>
TruncSeries<T> pow_real(const TruncSeries<T>& s, const T& e) {
  if (!(s[0] == Complex<T>(1))) throw SeriesDomainError("pow_real needs constant term exactly 1");
  const int n = s.order();
  std::vector<Complex<T>> w(n + 1);
  w[0] = Complex<T>(1);
  for (int m = 1; m <= n; ++m) {
    Complex<T> acc;
    for (int j = 1; j <= m; ++j) {
      T weight = T(j) * (e + T(1)) - T(m);
      acc += Complex<T>(weight) * s[j] * w[m - j];
    }
    w[m] = acc / Complex<T>(T(m));
  }
  return TruncSeries<T>(std::move(w));
}

template <Scalar T>
TruncSeries<T> derivative(const TruncSeries<T>& s) {
  if (s.order() < 1) throw SeriesDomainError("derivative needs order >= 1");
  std::vector<Complex<T>> out(s.order());
  for (int n = 0; n < s.order(); ++n) out[n] = Complex<T>(T(n + 1)) * s[n + 1];
  return TruncSeries<T>(std::move(out));
}

/// outer(inner(z)) by Horner's rule; inner must have zero constant term.
template <Scalar T>
TruncSeries<T> compose(const TruncSeries<T>& outer, const TruncSeries<T>& inner) {
  if (!inner[0].is_zero()) throw SeriesDomainError("compose: inner series must have zero constant term");
  const int n = std::min(outer.order(), inner.order());
  const auto in = inner.truncated(n);
  auto acc = TruncSeries<T>::constant(outer[n], n);
  for (int i = n - 1; i >= 0; --i) acc = mul(acc, in) + TruncSeries<T>::constant(outer[i], n);
  return acc;
}

/// Compositional inverse g with f(g(w)) = w through the truncation order.
///
/// Coefficients are fixed one degree at a time: with g correct through w^{n-1},
/// [w^n] f(g) = g_n + (terms in g_2..g_{n-1}), so setting g_n to minus the
/// residual of the trial g_n = 0 makes degree n vanish.
template <Scalar T>
NormalizedSeries<T> invert(const NormalizedSeries<T>& f) {
  const int n = f.order();
  if (n < 2) throw SeriesDomainError("invert needs order >= 2");
  std::vector<Complex<T>> g(n + 1);
  g[1] = Complex<T>(1);
  for (int m = 2; m <= n; ++m) {
    // only f_1..f_m and g_1..g_m influence degree m
    auto trial = compose(f.series().truncated(m), TruncSeries<T>(std::vector<Complex<T>>(g.begin(), g.begin() + m + 1)));
    g[m] = -trial[m];
  }
  return NormalizedSeries<T>(TruncSeries<T>(std::move(g)));
}

/// Hadamard (coefficient-wise) product.
template <Scalar T>
TruncSeries<T> hadamard(const TruncSeries<T>& a, const TruncSeries<T>& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex<T>> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = a[i] * b[i];
  return TruncSeries<T>(std::move(out));
}

inline TruncSeries<double> to_floating(const TruncSeries<Rational>& s) {
  std::vector<Complex<double>> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) out.push_back(to_double(c));
  return TruncSeries<double>(std::move(out));
}

/// Largest |c_n − d_n|^2 over the common order; zero iff the series agree there.
template <Scalar T>
T max_residual_sq(const TruncSeries<T>& a, const TruncSeries<T>& b) {
  const auto diff = a - b;
  T worst(0);
  for (const auto& c : diff.coeffs()) worst = std::max(worst, norm(c));
  return worst;
}

}  // namespace bibaz
