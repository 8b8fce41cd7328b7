#pragma once

// The relaxed extremal problem behind the bounds: maximize |a_2| or |a_3|,
// written through the closed forms of the argument, over Carathéodory
// tuples with |p_k|, |h_k| ≤ 2 and h_1 = −p_1.
//
// Candidates come from three sources, evaluated in this order:
//   1. corners  p_1 ∈ {0, 2, −2},  p_2, h_2 ∈ {2, −2, 2i, −2i}
//   2. a real grid over [−2, 2]^3 in (p_1, p_2, h_2)
//   3. uniform random points of the polydisc
// The argmax is the first candidate reaching the maximum, so corners win ties.
// The winning values and the bound are then recomputed in exact arithmetic
// from the double coordinates, so a tie at the bound reports a zero gap.

#include "bibaz/bounds.hpp"
#include "bibaz/proof.hpp"
#include "bibaz/random.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

namespace bibaz {

enum class Target { A2, A3 };

inline const char* to_string(Target t) { return t == Target::A2 ? "a2" : "a3"; }

struct SearchOptions {
  double resolution = 0.25;
  std::size_t random_draws = 20000;
  std::uint64_t seed = 1;
  bool strict = false;
};

struct ExtremalReport {
  Target target = Target::A2;
  double searched_max = 0;
  double formula_bound = 0;
  CaratheodoryTuple<double> argmax;
  double gap = 0;  // formula_bound − searched_max
  bool attained_on_corner = false;
  std::size_t candidates = 0;
  // strict mode: the same search restricted to the Carathéodory coefficient body
  std::optional<double> strict_max;
  std::optional<CaratheodoryTuple<double>> strict_argmax;
};

/// |a_2| and |a_3| as functions of a tuple, with the parameter-dependent
/// factors hoisted.
class RelaxedObjective {
 public:
  RelaxedObjective(const ClassParams<double>& p, double b1, double b2) {
    const ProofContext<double> ctx(p, b1, b2);
    if (ctx.d2 == 0) throw ZeroDenominator("a2^2 denominator vanishes");
    a2_scale_ = b1 * b1 * b1 / std::fabs(ctx.d2);
    a3_linear_ = b1 / (4.0 * ctx.g2() * ctx.m.u3);
    a3_square_ = b1 * b1 / (8.0 * ctx.g1() * ctx.g1() * ctx.m.u2 * ctx.m.u2);
  }

  double a2(const CaratheodoryTuple<double>& t) const { return std::sqrt(a2_scale_ * abs(t.p2 + t.h2)); }

  double a3(const CaratheodoryTuple<double>& t) const {
    const Complex<double> v =
        Complex<double>(a3_linear_) * (t.p2 - t.h2) + Complex<double>(a3_square_) * (t.p1 * t.p1 + t.h1 * t.h1);
    return abs(v);
  }

  double operator()(Target target, const CaratheodoryTuple<double>& t) const {
    return target == Target::A2 ? a2(t) : a3(t);
  }

 private:
  double a2_scale_ = 0;
  double a3_linear_ = 0;
  double a3_square_ = 0;
};

namespace detail {

/// Rational root of a non-negative rational, if it has one.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  const BigInt n = numerator(q), d = denominator(q);
  const BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

/// |z| for a rational complex z: exact when |z| is rational, else sqrt of the rounded norm.
inline double magnitude(const Complex<Rational>& z) {
  const Rational n = norm(z);
  if (const auto r = rational_sqrt(n)) return to_double(*r);
  return std::sqrt(to_double(n));
}

/// The objective and bound with every double input read as the rational it
/// represents. Unavailable when δ is not an integer.
class ExactObjective {
 public:
  static std::optional<ExactObjective> make(const ClassParams<double>& p, double b1, double b2) {
    const ClassParams<Rational> q{p.k, Rational(p.alpha), Rational(p.beta), Rational(p.lambda), Rational(p.delta),
                                  Rational(p.gamma)};
    try {
      return ExactObjective(ProofContext<Rational>(q, Rational(b1), Rational(b2)));
    } catch (const EngineError&) {
      return std::nullopt;
    }
  }

  double bound(Target target) const {
    const auto& c = ctx_;
    if (target == Target::A3) return to_double(bound_a3(c.params, c.b1, c.b2));
    return std::sqrt(to_double(bound_a2_squared(c.params, c.b1, c.b2)));
  }

  double value(Target target, const CaratheodoryTuple<double>& t) const {
    const auto e = exact(t);
    if (target == Target::A3) {
      const Complex<Rational> v = Complex<Rational>(a3_linear_) * (e.p2 - e.h2) +
                                  Complex<Rational>(a3_square_) * (e.p1 * e.p1 + e.h1 * e.h1);
      return magnitude(v);
    }
    const Rational q = norm(e.p2 + e.h2);
    if (const auto r = rational_sqrt(q)) return std::sqrt(to_double(a2_scale_ * *r));
    return std::sqrt(to_double(a2_scale_) * std::sqrt(to_double(q)));
  }

 private:
  explicit ExactObjective(ProofContext<Rational> ctx) : ctx_(std::move(ctx)) {
    const auto& c = ctx_;
    if (c.d2 == 0) throw ZeroDenominator("a2^2 denominator vanishes");
    a2_scale_ = c.b1 * c.b1 * c.b1 / (c.d2 < 0 ? Rational(-c.d2) : c.d2);
    a3_linear_ = c.b1 / (Rational(4) * c.g2() * c.m.u3);
    a3_square_ = c.b1 * c.b1 / (Rational(8) * c.g1() * c.g1() * c.m.u2 * c.m.u2);
  }

  static Complex<Rational> exact(const Complex<double>& z) { return {Rational(z.re), Rational(z.im)}; }
  static CaratheodoryTuple<Rational> exact(const CaratheodoryTuple<double>& t) {
    return {exact(t.p1), exact(t.p2), exact(t.h1), exact(t.h2)};
  }

  ProofContext<Rational> ctx_;
  Rational a2_scale_, a3_linear_, a3_square_;
};

inline CaratheodoryTuple<double> make_tuple(Complex<double> p1, Complex<double> p2, Complex<double> h2) {
  return {p1, p2, -p1, h2};
}

/// Running maximum with first-found tie-breaking.
struct Best {
  double value = -1;
  CaratheodoryTuple<double> at{};
  bool offer(double v, const CaratheodoryTuple<double>& t) {
    if (v > value) {
      value = v;
      at = t;
      return true;
    }
    return false;
  }
};

/// Strict-body point: p_2 = p_1^2/2 + (2 − |p_1|^2/2) w with |w| ≤ 1.
inline Complex<double> strict_second(Sampler& rng, const Complex<double>& c1) {
  const double room = 2.0 - norm(c1) / 2.0;
  return Complex<double>(0.5) * c1 * c1 + Complex<double>(room) * rng.disc(1.0);
}

template <class Visit>
void enumerate_candidates(const SearchOptions& opt, bool strict, Visit&& visit) {
  const Complex<double> corners_p1[] = {0.0, 2.0, -2.0};
  const Complex<double> corners_2[] = {2.0, -2.0, Complex<double>(0.0, 2.0), Complex<double>(0.0, -2.0)};
  for (const auto& p1 : corners_p1)
    for (const auto& p2 : corners_2)
      for (const auto& h2 : corners_2) visit(make_tuple(p1, p2, h2), true);

  const int steps = static_cast<int>(std::floor(4.0 / opt.resolution + 1e-9));
  auto grid = [&](int i) { return std::min(2.0, -2.0 + i * opt.resolution); };
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; j <= steps; ++j)
      for (int l = 0; l <= steps; ++l) visit(make_tuple(grid(i), grid(j), grid(l)), false);

  Sampler rng(opt.seed, strict ? 1 : 0);
  for (std::size_t n = 0; n < opt.random_draws; ++n) {
    if (strict) {
      const auto p1 = rng.disc(2.0);
      const auto p2 = strict_second(rng, p1);
      const auto h2 = strict_second(rng, -p1);
      visit(make_tuple(p1, p2, h2), false);
    } else {
      visit(make_tuple(rng.disc(2.0), rng.disc(2.0), rng.disc(2.0)), false);
    }
  }
}

}  // namespace detail

/// Maximizes the target over the relaxed set and compares with the bound.
inline ExtremalReport extremal_search(const ClassParams<double>& p, double b1, double b2, Target target,
                                      const SearchOptions& opt = {}) {
  if (!(opt.resolution > 0)) throw InvalidParameter("resolution must be > 0");
  const RelaxedObjective objective(p, b1, b2);
  ExtremalReport r;
  r.target = target;
  r.formula_bound = target == Target::A2 ? bound_a2(p, b1, b2) : bound_a3(p, b1, b2);

  detail::Best best, corner_best;
  detail::enumerate_candidates(opt, false, [&](const CaratheodoryTuple<double>& t, bool corner) {
    ++r.candidates;
    const double v = objective(target, t);
    best.offer(v, t);
    if (corner) corner_best.offer(v, t);
  });
  const auto exact = detail::ExactObjective::make(p, b1, b2);
  auto settle = [&](const detail::Best& b) { return exact ? exact->value(target, b.at) : b.value; };
  if (exact) r.formula_bound = exact->bound(target);
  r.searched_max = settle(best);
  r.argmax = best.at;
  r.gap = r.formula_bound - r.searched_max;
  r.attained_on_corner = settle(corner_best) >= r.searched_max;

  if (opt.strict) {
    detail::Best strict;
    detail::enumerate_candidates(opt, true, [&](const CaratheodoryTuple<double>& t, bool) {
      if (!t.strictly_admissible()) return;
      strict.offer(objective(target, t), t);
    });
    r.strict_max = settle(strict);
    r.strict_argmax = strict.at;
  }
  return r;
}

struct SoundnessReport {
  std::size_t samples = 0;
  double a2_bound = 0;
  double a3_bound = 0;
  double worst_a2_excess = -INFINITY;  // max over samples of |a_2| − bound
  double worst_a3_excess = -INFINITY;
  CaratheodoryTuple<double> worst_a2_tuple{};
  CaratheodoryTuple<double> worst_a3_tuple{};
};

/// Uniform random admissible tuples; records how far |a_2|, |a_3| ever get
/// above the bounds (negative when they never reach them).
inline SoundnessReport soundness_sweep(const ClassParams<double>& p, double b1, double b2, std::size_t samples,
                                       std::uint64_t seed) {
  const RelaxedObjective objective(p, b1, b2);
  SoundnessReport r;
  r.samples = samples;
  r.a2_bound = bound_a2(p, b1, b2);
  r.a3_bound = bound_a3(p, b1, b2);
  Sampler rng(seed, 7);
  for (std::size_t n = 0; n < samples; ++n) {
    const auto t = detail::make_tuple(rng.disc(2.0), rng.disc(2.0), rng.disc(2.0));
    const double e2 = objective.a2(t) - r.a2_bound;
    const double e3 = objective.a3(t) - r.a3_bound;
    if (e2 > r.worst_a2_excess) {
      r.worst_a2_excess = e2;
      r.worst_a2_tuple = t;
    }
    if (e3 > r.worst_a3_excess) {
      r.worst_a3_excess = e3;
      r.worst_a3_tuple = t;
    }
  }
  return r;
}

}  // namespace bibaz
