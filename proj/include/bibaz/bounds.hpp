#pragma once

// Coefficient bounds for the bi-Bazilevič class built on D^k.
//
// With u_n = Υ^k_n C(δ,n) and
//   X = 2(γ+2) u_3 + (γ−1)(γ+2) u_2^2,
//   D = B_1^2 X − 2(B_2 − B_1)(γ+1)^2 u_2^2,
// the bounds are
//   |a_2| ≤ B_1 sqrt(2 B_1) / sqrt(|D|),
//   |a_3| ≤ B_1/((γ+2) u_3) + (B_1/((γ+1) u_2))^2.
//
// Every φ family goes through the same two formulas after substituting its
// (B_1, B_2); no specialized closed form is used for evaluation.

#include "bibaz/errors.hpp"
#include "bibaz/maminda.hpp"
#include "bibaz/operator.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace bibaz {

namespace flag {
inline constexpr const char* degenerate_operator = "degenerate_operator";
inline constexpr const char* zero_denominator = "zero_denominator";
/// u_2 or u_3 < 0 (odd k with α+β < 1): the a_3 formula carries no absolute
/// value and can then undercut the true maximum of the relaxed problem.
inline constexpr const char* negative_multiplier = "negative_multiplier";
}  // namespace flag

template <Scalar T>
T composite_x(const ClassParams<T>& p, const MultiplierPair<T>& m) {
  const T g = p.gamma;
  return T(2) * (g + T(2)) * m.u3 + (g - T(1)) * (g + T(2)) * m.u2 * m.u2;
}

/// D, the quantity inside the absolute value of the a_2 bound.
template <Scalar T>
T a2_denominator(const ClassParams<T>& p, const T& b1, const T& b2) {
  const auto m = multipliers(p);
  const T g1 = p.gamma + T(1);
  return b1 * b1 * composite_x(p, m) - T(2) * (b2 - b1) * g1 * g1 * m.u2 * m.u2;
}

namespace detail {
template <Scalar T>
void require_b1(const T& b1) {
  if (!(b1 > 0)) throw InvalidParameter("B1 must be > 0");
}
template <Scalar T>
MultiplierPair<T> require_nondegenerate(const ClassParams<T>& p) {
  p.validate();
  auto m = multipliers(p);
  if (m.degenerate()) throw DegenerateOperator("operator multipliers vanish (u2 or u3 = 0)");
  return m;
}
template <Scalar T>
T abs_value(const T& x) {
  return x < 0 ? T(-x) : x;
}
}  // namespace detail

/// 2 B_1^3 / |D|, exact in exact mode.
template <Scalar T>
T bound_a2_squared(const ClassParams<T>& p, const T& b1, const T& b2) {
  detail::require_b1(b1);
  detail::require_nondegenerate(p);
  const T d = a2_denominator(p, b1, b2);
  if (d == 0) throw ZeroDenominator("a2 bound denominator is zero");
  return T(2) * b1 * b1 * b1 / detail::abs_value(d);
}

template <Scalar T>
double bound_a2(const ClassParams<T>& p, const T& b1, const T& b2) {
  detail::require_b1(b1);
  detail::require_nondegenerate(p);
  const T d = a2_denominator(p, b1, b2);
  if (d == 0) throw ZeroDenominator("a2 bound denominator is zero");
  const double b1d = to_double(b1);
  return b1d * std::sqrt(2.0 * b1d) / std::sqrt(std::fabs(to_double(d)));
}

/// The first summand B_1/((γ+2)u_3) of the a_3 bound.
template <Scalar T>
T a3_linear_term(const ClassParams<T>& p, const T& b1) {
  const auto m = detail::require_nondegenerate(p);
  return b1 / ((p.gamma + T(2)) * m.u3);
}

/// B_1/((γ+1)u_2); its square is the second summand of the a_3 bound.
template <Scalar T>
T a3_root_term(const ClassParams<T>& p, const T& b1) {
  const auto m = detail::require_nondegenerate(p);
  return b1 / ((p.gamma + T(1)) * m.u2);
}

template <Scalar T>
T bound_a3(const ClassParams<T>& p, const T& b1, const T& /*b2*/) {
  detail::require_b1(b1);
  const T root = a3_root_term(p, b1);
  return a3_linear_term(p, b1) + root * root;
}

struct BoundResult {
  // Both bounds are set iff `degenerate` is false.
  std::optional<double> a2_bound;
  std::optional<double> a3_bound;
  double denom_value = 0.0;
  bool degenerate = false;
  std::vector<std::string> flags;
  /// Janowski only: the denominator in the form printed for the Janowski closed forms,
  /// (A−B)X − 2(B+1)(γ+1)^2 u_2^2, kept for comparison against the substituted route.
  std::optional<double> printed_denom;
  double b1 = 0.0;
  double b2 = 0.0;

  std::string flags_joined(char sep = ';') const {
    std::string out;
    for (const auto& f : flags) {
      if (!out.empty()) out += sep;
      out += f;
    }
    return out;
  }
};

/// Non-throwing evaluation used by tables: degeneracy becomes flags.
template <Scalar T>
BoundResult evaluate_bounds(const ClassParams<T>& p, const PhiCoefficients<T>& c) {
  p.validate();
  detail::require_b1(c.b1);
  BoundResult r;
  r.b1 = to_double(c.b1);
  r.b2 = to_double(c.b2);
  const auto m = multipliers(p);
  r.denom_value = to_double(a2_denominator(p, c.b1, c.b2));
  if (m.degenerate()) r.flags.emplace_back(flag::degenerate_operator);
  if (a2_denominator(p, c.b1, c.b2) == 0) r.flags.emplace_back(flag::zero_denominator);
  if (m.u2 < 0 || m.u3 < 0) r.flags.emplace_back(flag::negative_multiplier);
  r.degenerate = m.degenerate() || a2_denominator(p, c.b1, c.b2) == 0;
  if (!r.degenerate) {
    r.a2_bound = bound_a2(p, c.b1, c.b2);
    r.a3_bound = to_double(bound_a3(p, c.b1, c.b2));
  }
  return r;
}

template <Scalar T>
BoundResult evaluate_bounds(const ClassParams<T>& p, const PhiSpec<T>& spec) {
  return evaluate_bounds(p, phi_coefficients(spec));
}

/// Throws on degenerate input instead of flagging.
template <Scalar T>
BoundResult require_bounds(const ClassParams<T>& p, const PhiCoefficients<T>& c) {
  auto r = evaluate_bounds(p, c);
  if (!r.degenerate) return r;
  if (multipliers(p).degenerate()) throw DegenerateOperator("operator multipliers vanish (u2 or u3 = 0)");
  throw ZeroDenominator("a2 bound denominator is zero");
}

template <Scalar T>
BoundResult bound_janowski(const ClassParams<T>& p, const T& a, const T& b) {
  const PhiSpec<T> spec = phi::Janowski<T>{a, b};
  auto r = require_bounds(p, phi_coefficients(spec));
  const auto m = multipliers(p);
  const T g1 = p.gamma + T(1);
  r.printed_denom = to_double(T((a - b) * composite_x(p, m) - T(2) * (b + T(1)) * g1 * g1 * m.u2 * m.u2));
  return r;
}

template <Scalar T>
BoundResult bound_order(const ClassParams<T>& p, const T& zeta) {
  const PhiSpec<T> spec = phi::OrderZeta<T>{zeta};
  return require_bounds(p, phi_coefficients(spec));
}

}  // namespace bibaz
