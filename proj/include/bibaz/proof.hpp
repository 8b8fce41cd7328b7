#pragma once

// Exact reproduction of the coefficient-bound argument.
//
// A member f of the class satisfies
//   Q_f(z) = φ(u(z)),  Q_g(w) = φ(v(w)),  g = f^{-1},
// where Q is the Bazilevič quotient and u = (p−1)/(p+1), v = (h−1)/(h+1)
// for Carathéodory functions p, h. Comparing coefficients through z^2 gives
//
//   [f, z]    (γ+1)u_2 a_2                               = B_1 p_1 / 2
//   [f, z^2]  (γ+2)u_3 a_3 + c u_2^2 a_2^2               = B_1(p_2 − p_1^2/2)/2 + B_2 p_1^2/4
//   [g, w]    −(γ+1)u_2 a_2                              = B_1 h_1 / 2
//   [g, w^2]  (2(γ+2)u_3 + c u_2^2)a_2^2 − (γ+2)u_3 a_3  = B_1(h_2 − h_1^2/2)/2 + B_2 h_1^2/4
//
// with c = (γ−1)(γ+2)/2. From these follow
//
//   sign:        h_1 = −p_1
//   square:      8(γ+1)^2 u_2^2 a_2^2 = B_1^2 (p_1^2 + h_1^2)
//   sum:         X a_2^2 = B_1(p_2 + h_2)/2 + (B_2 − B_1)(p_1^2 + h_1^2)/4
//   difference:  2(γ+2)u_3 (a_3 − a_2^2) = B_1((p_2−h_2) − (p_1^2−h_1^2)/2)/2 + B_2(p_1^2−h_1^2)/4
//
// and the closed forms
//   a_2^2 = B_1^3 (p_2 + h_2) / D2,   D2 = 2B_1^2 X − 4(B_2−B_1)(γ+1)^2 u_2^2,
//   a_3   = B_1(p_2 − h_2)/(4(γ+2)u_3) + B_1^2(p_1^2 + h_1^2)/(8(γ+1)^2 u_2^2),
// which the extremal problem maximizes.

#include "bibaz/bounds.hpp"
#include "bibaz/maminda.hpp"
#include "bibaz/operator.hpp"
#include "bibaz/series.hpp"

#include <ostream>
#include <tuple>
#include <utility>

namespace bibaz {

/// (p_1, p_2, h_1, h_2): leading coefficients of the two Carathéodory functions.
template <Scalar T>
struct CaratheodoryTuple {
  Complex<T> p1, p2, h1, h2;

  /// |p_k|, |h_k| ≤ 2 and h_1 = −p_1: the relaxed constraint set.
  bool admissible() const {
    const T four(4);
    return norm(p1) <= four && norm(p2) <= four && norm(h1) <= four && norm(h2) <= four && h1 == -p1;
  }

  /// Additionally |c_2 − c_1^2/2| ≤ 2 − |c_1|^2/2 for c = p, h: the
  /// second-coefficient body of the Carathéodory class.
  bool strictly_admissible() const {
    if (!admissible()) return false;
    auto ok = [](const Complex<T>& c1, const Complex<T>& c2) {
      const Complex<T> shifted = c2 - Complex<T>(T(T(1) / T(2))) * c1 * c1;
      const T room = T(2) - norm(c1) / T(2);
      if (room < 0) return false;
      return norm(shifted) <= room * room;
    };
    return ok(p1, p2) && ok(h1, h2);
  }

  friend std::ostream& operator<<(std::ostream& os, const CaratheodoryTuple& t) {
    return os << "(p1=" << t.p1 << ", p2=" << t.p2 << ", h1=" << t.h1 << ", h2=" << t.h2 << ")";
  }
};

inline CaratheodoryTuple<double> to_double(const CaratheodoryTuple<Rational>& t) {
  return {to_double(t.p1), to_double(t.p2), to_double(t.h1), to_double(t.h2)};
}

/// u = (p − 1)/(p + 1).
template <Scalar T>
TruncSeries<T> schwarz_from_caratheodory(const TruncSeries<T>& p) {
  if (!(p[0] == Complex<T>(1))) throw SeriesDomainError("Caratheodory series needs p0 = 1");
  const auto one = TruncSeries<T>::constant(Complex<T>(1), p.order());
  return divide(p - one, p + one);
}

/// p = (1 + u)/(1 − u).
template <Scalar T>
TruncSeries<T> caratheodory_from_schwarz(const TruncSeries<T>& u) {
  if (!u[0].is_zero()) throw SeriesDomainError("Schwarz series needs u0 = 0");
  const auto one = TruncSeries<T>::constant(Complex<T>(1), u.order());
  return divide(one + u, one - u);
}

/// Quantities shared by every relation.
template <Scalar T>
struct ProofContext {
  ClassParams<T> params;
  T b1, b2;
  MultiplierPair<T> m;
  T x;   // 2(γ+2)u_3 + (γ−1)(γ+2)u_2^2
  T d2;  // 2B_1^2 X − 4(B_2 − B_1)(γ+1)^2 u_2^2

  ProofContext(const ClassParams<T>& p, T b1_, T b2_) : params(p), b1(std::move(b1_)), b2(std::move(b2_)) {
    p.validate();
    if (!(b1 > 0)) throw InvalidParameter("B1 must be > 0");
    m = multipliers(p);
    if (m.degenerate()) throw DegenerateOperator("operator multipliers vanish (u2 or u3 = 0)");
    x = composite_x(p, m);
    d2 = T(2) * b1 * b1 * x - T(4) * (b2 - b1) * g1() * g1() * m.u2 * m.u2;
  }

  T g1() const { return params.gamma + T(1); }
  T g2() const { return params.gamma + T(2); }
  /// (γ−1)(γ+2)/2
  T c() const { return (params.gamma - T(1)) * g2() / T(2); }

  static Complex<T> k(const T& v) { return Complex<T>(v); }

  /// Right side of the second-order relation for a Carathéodory pair (c_1, c_2).
  Complex<T> second_rhs(const Complex<T>& c1, const Complex<T>& c2) const {
    return k(b1 / T(2)) * (c2 - k(T(T(1) / T(2))) * c1 * c1) + k(b2 / T(4)) * c1 * c1;
  }
};

template <Scalar T>
struct ProofRelations {
  Complex<T> a2_linear;    // a_2 from the first-order f relation
  Complex<T> a2sq_closed;  // a_2^2 = B_1^3(p_2+h_2)/D2
  Complex<T> a2sq_square;  // a_2^2 from the square relation
  Complex<T> a3_closed;    // a_3 from the difference relation and the square relation
  /// Square relation with a_2 = a2_linear.
  Complex<T> residual_square;
  /// Sum relation with a_2^2 = a2sq_closed and p_1^2 + h_1^2 eliminated
  /// through the square relation.
  Complex<T> residual_sum;
};

/// Closed expressions of the argument evaluated at a tuple. Throws
/// ZeroDenominator when D2 vanishes.
template <Scalar T>
ProofRelations<T> proof_relations(const ClassParams<T>& p, const T& b1, const T& b2, const CaratheodoryTuple<T>& t) {
  const ProofContext<T> ctx(p, b1, b2);
  if (ctx.d2 == 0) throw ZeroDenominator("a2^2 denominator vanishes");
  const auto k = ProofContext<T>::k;
  const T u2sq = ctx.m.u2 * ctx.m.u2;
  const T g1sq = ctx.g1() * ctx.g1();
  const Complex<T> sum_sq = t.p1 * t.p1 + t.h1 * t.h1;

  ProofRelations<T> r;
  r.a2_linear = k(b1) * t.p1 / k(T(2) * ctx.g1() * ctx.m.u2);
  r.a2sq_closed = k(b1 * b1 * b1) * (t.p2 + t.h2) / k(ctx.d2);
  r.a2sq_square = k(b1 * b1) * sum_sq / k(T(8) * g1sq * u2sq);
  r.a3_closed = r.a2sq_square + k(b1) * (t.p2 - t.h2) / k(T(4) * ctx.g2() * ctx.m.u3);
  r.residual_square = k(T(8) * g1sq * u2sq) * r.a2_linear * r.a2_linear - k(b1 * b1) * sum_sq;
  const Complex<T> sum_sq_via_square = k(T(8) * g1sq * u2sq / (b1 * b1)) * r.a2sq_closed;
  r.residual_sum = k(ctx.x) * r.a2sq_closed - k(b1 / T(2)) * (t.p2 + t.h2) - k((b2 - b1) / T(4)) * sum_sq_via_square;
  return r;
}

/// Test-only fault: flips the sign of the recovered a_2 so the end-to-end
/// checks must report a nonzero residual.
struct VerifyOptions {
  bool inject_sign_fault = false;
};

/// a_2, a_3 recovered from (p_1, p_2) through the f-side relations.
template <Scalar T>
std::pair<Complex<T>, Complex<T>> coefficients_from_p(const ProofContext<T>& ctx, const Complex<T>& p1,
                                                      const Complex<T>& p2, const VerifyOptions& opt = {}) {
  const auto k = ProofContext<T>::k;
  Complex<T> a2 = k(ctx.b1) * p1 / k(T(2) * ctx.g1() * ctx.m.u2);
  if (opt.inject_sign_fault) a2 = -a2;
  const Complex<T> a3 = (ctx.second_rhs(p1, p2) - k(ctx.c() * ctx.m.u2 * ctx.m.u2) * a2 * a2) / k(ctx.g2() * ctx.m.u3);
  return {a2, a3};
}

/// a_2, a_3 recovered from (h_1, h_2) through the g-side relations.
template <Scalar T>
std::pair<Complex<T>, Complex<T>> coefficients_from_h(const ProofContext<T>& ctx, const Complex<T>& h1,
                                                      const Complex<T>& h2, const VerifyOptions& opt = {}) {
  const auto k = ProofContext<T>::k;
  Complex<T> a2 = -k(ctx.b1) * h1 / k(T(2) * ctx.g1() * ctx.m.u2);
  if (opt.inject_sign_fault) a2 = -a2;
  const T lead = T(2) * ctx.g2() * ctx.m.u3 + ctx.c() * ctx.m.u2 * ctx.m.u2;
  const Complex<T> a3 = (k(lead) * a2 * a2 - ctx.second_rhs(h1, h2)) / k(ctx.g2() * ctx.m.u3);
  return {a2, a3};
}

namespace detail {
template <Scalar T>
TruncSeries<T> caratheodory_series(const Complex<T>& c1, const Complex<T>& c2) {
  return TruncSeries<T>({Complex<T>(1), c1, c2});
}
template <Scalar T>
TruncSeries<T> subordinated(const ProofContext<T>& ctx, const Complex<T>& c1, const Complex<T>& c2) {
  const PhiSpec<T> phi = phi::Generic<T>{ctx.b1, ctx.b2};
  return compose(phi_series(phi, 2), schwarz_from_caratheodory(caratheodory_series(c1, c2)));
}
}  // namespace detail

/// Builds f = z + a_2 z^2 + a_3 z^3 from (p_1, p_2) and returns
/// max_n |[z^n](Q_f − φ∘u)|^2 over n ≤ 2. Zero in exact mode for a correct engine.
template <Scalar T>
T expansion_check(const ClassParams<T>& p, const T& b1, const T& b2, const CaratheodoryTuple<T>& t,
                  const VerifyOptions& opt = {}) {
  const ProofContext<T> ctx(p, b1, b2);
  const auto [a2, a3] = coefficients_from_p(ctx, t.p1, t.p2, opt);
  const auto f = NormalizedSeries<T>::from_tail({a2, a3});
  return max_residual_sq(bazilevic_quotient(p, f), detail::subordinated(ctx, t.p1, t.p2));
}

/// The inverse side: f from (h_1, h_2), then max_n |[w^n](Q_g − φ∘v)|^2
/// for g = f^{-1}.
template <Scalar T>
T inverse_expansion_check(const ClassParams<T>& p, const T& b1, const T& b2, const CaratheodoryTuple<T>& t,
                          const VerifyOptions& opt = {}) {
  const ProofContext<T> ctx(p, b1, b2);
  const auto [a2, a3] = coefficients_from_h(ctx, t.h1, t.h2, opt);
  const auto g = invert(NormalizedSeries<T>::from_tail({a2, a3}));
  return max_residual_sq(bazilevic_quotient(p, g), detail::subordinated(ctx, t.h1, t.h2));
}

/// Residuals of the derived relations at a consistent point: (p_1, p_2) fix
/// a_2, a_3 through the f-side relations, and the g-side relations then fix
/// h_1, h_2. Every residual is zero exactly when the chain holds.
template <Scalar T>
struct RelationResiduals {
  CaratheodoryTuple<T> tuple;
  Complex<T> a2, a3;
  Complex<T> sign;        // h_1 + p_1
  Complex<T> square;      // 8(γ+1)^2 u_2^2 a_2^2 − B_1^2(p_1^2 + h_1^2)
  Complex<T> sum;         // X a_2^2 − B_1(p_2+h_2)/2 − (B_2−B_1)(p_1^2+h_1^2)/4
  Complex<T> a2_closed;   // a_2^2 − B_1^3(p_2+h_2)/D2, left zero when D2 = 0
  Complex<T> difference;  // difference relation, left minus right
  Complex<T> a3_closed;   // a_3 minus its closed form
  /// a_3 minus the closed form written with (γ+1) in place of (γ+1)^2.
  Complex<T> unsquared_gap;
  bool d2_zero = false;

  bool all_zero() const {
    return sign.is_zero() && square.is_zero() && sum.is_zero() && a2_closed.is_zero() && difference.is_zero() &&
           a3_closed.is_zero();
  }
};

template <Scalar T>
RelationResiduals<T> relation_consistency(const ClassParams<T>& p, const T& b1, const T& b2, const Complex<T>& p1,
                                          const Complex<T>& p2) {
  const ProofContext<T> ctx(p, b1, b2);
  const auto k = ProofContext<T>::k;
  RelationResiduals<T> r;
  std::tie(r.a2, r.a3) = coefficients_from_p(ctx, p1, p2);
  const Complex<T> h1 = -k(T(2) * ctx.g1() * ctx.m.u2 / b1) * r.a2;
  const T lead = T(2) * ctx.g2() * ctx.m.u3 + ctx.c() * ctx.m.u2 * ctx.m.u2;
  const Complex<T> lhs_g2 = k(lead) * r.a2 * r.a2 - k(ctx.g2() * ctx.m.u3) * r.a3;
  const Complex<T> half(T(T(1) / T(2)));
  const Complex<T> h2 = (lhs_g2 - k(b2 / T(4)) * h1 * h1) * k(T(2) / b1) + half * h1 * h1;
  r.tuple = {p1, p2, h1, h2};

  const T u2sq = ctx.m.u2 * ctx.m.u2;
  const T g1sq = ctx.g1() * ctx.g1();
  const Complex<T> a2sq = r.a2 * r.a2;
  const Complex<T> sum_sq = p1 * p1 + h1 * h1;
  const Complex<T> diff_sq = p1 * p1 - h1 * h1;
  r.sign = h1 + p1;
  r.square = k(T(8) * g1sq * u2sq) * a2sq - k(b1 * b1) * sum_sq;
  r.sum = k(ctx.x) * a2sq - k(b1 / T(2)) * (p2 + h2) - k((b2 - b1) / T(4)) * sum_sq;
  if (ctx.d2 == 0) {
    r.d2_zero = true;
  } else {
    r.a2_closed = a2sq - k(b1 * b1 * b1) * (p2 + h2) / k(ctx.d2);
  }
  r.difference =
      k(T(2) * ctx.g2() * ctx.m.u3) * (r.a3 - a2sq) - (k(b1 / T(2)) * ((p2 - h2) - half * diff_sq) + k(b2 / T(4)) * diff_sq);
  const Complex<T> linear = k(b1) * (p2 - h2) / k(T(4) * ctx.g2() * ctx.m.u3);
  r.a3_closed = r.a3 - (linear + k(b1 * b1) * sum_sq / k(T(8) * g1sq * u2sq));
  r.unsquared_gap = r.a3 - (linear + k(b1 * b1) * sum_sq / k(T(8) * ctx.g1() * u2sq));
  return r;
}

}  // namespace bibaz
