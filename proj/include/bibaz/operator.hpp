#pragma once

// The multiplier transform
//
//   D^k f(z) = z + Σ_{n≥2} Υ^k_n C(δ,n) a_n z^n,
//   Υ^k_n   = [λ(α+β−1)(n−1)]^k,
//   C(δ,n)  = Γ(n+δ) / (Γ(δ+1) Γ(n)),
//
// and the Bazilevič quotient z^{1−γ} (D^k f)' / (D^k f)^{1−γ} built on it.

#include "bibaz/errors.hpp"
#include "bibaz/scalar.hpp"
#include "bibaz/series.hpp"

#include <cmath>
#include <ostream>
#include <string>

namespace bibaz {

template <Scalar T>
struct ClassParams {
  int k = 0;
  T alpha = T(1);
  T beta = T(1);
  T lambda = T(1);
  T delta = T(0);
  T gamma = T(0);

  /// Throws InvalidParameter unless k ≥ 0, 0 < α,β ≤ 1, λ,δ,γ ≥ 0
  /// (and, in exact mode, δ integral).
  void validate() const {
    auto bad = [](const std::string& what) { throw InvalidParameter("ClassParams: " + what); };
    if (k < 0) bad("k must be a non-negative integer");
    if (!(alpha > 0 && alpha <= 1)) bad("alpha must lie in (0,1]");
    if (!(beta > 0 && beta <= 1)) bad("beta must lie in (0,1]");
    if (!(lambda >= 0)) bad("lambda must be >= 0");
    if (!(delta >= 0)) bad("delta must be >= 0");
    if (!(gamma >= 0)) bad("gamma must be >= 0");
    if constexpr (scalar_traits<T>::exact) {
      if (!is_integer(delta)) bad("exact mode needs an integral delta");
    }
    if constexpr (!scalar_traits<T>::exact) {
      if (!std::isfinite(lambda) || !std::isfinite(delta) || !std::isfinite(gamma)) bad("parameters must be finite");
    }
  }

  /// λ(α+β−1) = 0 with k ≥ 1 kills every Υ^k_n, n ≥ 2.
  bool degenerate() const { return k >= 1 && lambda * (alpha + beta - T(1)) == 0; }

  friend std::ostream& operator<<(std::ostream& os, const ClassParams& p) {
    return os << "{k=" << p.k << ", alpha=" << p.alpha << ", beta=" << p.beta << ", lambda=" << p.lambda
              << ", delta=" << p.delta << ", gamma=" << p.gamma << "}";
  }
};

inline ClassParams<double> to_floating(const ClassParams<Rational>& p) {
  return {p.k, to_double(p.alpha), to_double(p.beta), to_double(p.lambda), to_double(p.delta), to_double(p.gamma)};
}

/// The combined multipliers u_n = Υ^k_n C(δ,n) for n = 2, 3.
template <Scalar T>
struct MultiplierPair {
  T u2;
  T u3;
  bool degenerate() const { return u2 == 0 || u3 == 0; }
};

template <Scalar T>
T upsilon(const ClassParams<T>& p, int n) {
  if (n < 2) throw InvalidParameter("upsilon: n must be >= 2");
  const T base = p.lambda * (p.alpha + p.beta - T(1)) * T(n - 1);
  return ipow(base, static_cast<unsigned>(p.k));
}

/// C(δ,n) = binom(n+δ−1, δ). Integral δ uses the finite product
/// Π_{j=1..δ} (n−1+j)/j; non-integral δ (floating only) goes through lgamma.
template <Scalar T>
T c_delta(const T& delta, int n) {
  if (n < 2) throw InvalidParameter("c_delta: n must be >= 2");
  if (!(delta >= 0)) throw InvalidParameter("c_delta: delta must be >= 0");
  if (is_integer(delta)) {
    T result(1);
    const long d = static_cast<long>(to_double(delta));
    for (long j = 1; j <= d; ++j) result = result * T(n - 1 + j) / T(j);
    return result;
  }
  if constexpr (scalar_traits<T>::exact) {
    throw InvalidParameter("c_delta: exact mode needs an integral delta");
  } else {
    return std::exp(std::lgamma(n + delta) - std::lgamma(delta + 1.0) - std::lgamma(static_cast<double>(n)));
  }
}

template <Scalar T>
T multiplier(const ClassParams<T>& p, int n) {
  return upsilon(p, n) * c_delta(p.delta, n);
}

template <Scalar T>
MultiplierPair<T> multipliers(const ClassParams<T>& p) {
  return {multiplier(p, 2), multiplier(p, 3)};
}

/// The fixed series z + Σ Υ^k_n C(δ,n) z^n whose Hadamard product with f is D^k f.
template <Scalar T>
NormalizedSeries<T> operator_kernel(const ClassParams<T>& p, int order) {
  std::vector<Complex<T>> tail;
  for (int n = 2; n <= order; ++n) tail.emplace_back(multiplier(p, n));
  return NormalizedSeries<T>::from_tail(std::move(tail));
}

template <Scalar T>
NormalizedSeries<T> apply_operator(const ClassParams<T>& p, const NormalizedSeries<T>& f) {
  std::vector<Complex<T>> c(f.series().coeffs().begin(), f.series().coeffs().end());
  for (int n = 2; n <= f.order(); ++n) c[n] *= Complex<T>(multiplier(p, n));
  return NormalizedSeries<T>(TruncSeries<T>(std::move(c)));
}

/// (D f)' · (D f / z)^{γ−1}, which equals z^{1−γ}(D f)'/(D f)^{1−γ}.
/// The result has order f.order() − 1 and constant term 1.
template <Scalar T>
TruncSeries<T> bazilevic_quotient(const ClassParams<T>& p, const NormalizedSeries<T>& f) {
  if (f.order() < 2) throw SeriesDomainError("bazilevic_quotient needs order >= 2");
  const auto df = apply_operator(p, f).series();
  const auto slope = derivative(df);
  if (p.gamma == T(1)) return slope;
  return mul(slope, pow_real(df.divided_by_z(), T(p.gamma - T(1))));
}

}  // namespace bibaz
