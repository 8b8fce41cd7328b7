#pragma once

// Seeded sampling helpers. std::mt19937_64's output sequence is fixed by the
// standard, but the <random> distributions are not, so range reduction is
// done here to keep runs byte-identical across standard libraries.

#include "bibaz/complex.hpp"
#include "bibaz/scalar.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace bibaz {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0) : engine_(mix(seed, stream)) {}

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform point of the closed disc |z| ≤ radius.
  Complex<double> disc(double radius) {
    const double r = radius * std::sqrt(unit());
    const double t = 2.0 * M_PI * unit();
    return {r * std::cos(t), r * std::sin(t)};
  }

  /// Rational p/q in [lo, hi] with 1 ≤ q ≤ max_den.
  Rational rational(const Rational& lo, const Rational& hi, int max_den) {
    const auto q = between(1, max_den);
    const Rational span = (hi - lo) * q;
    // numerator offsets 0..floor(span) keep the value inside [lo, hi]
    const auto steps = static_cast<std::int64_t>(boost::multiprecision::numerator(span) /
                                                 boost::multiprecision::denominator(span));
    return lo + make_rational(between(0, steps), q);
  }

  /// Complex rational with both parts drawn from [−radius, radius] and
  /// |z| ≤ radius, by rejection.
  Complex<Rational> rational_disc(const Rational& radius, int max_den) {
    for (;;) {
      Complex<Rational> z(rational(-radius, radius, max_den), rational(-radius, radius, max_den));
      if (norm(z) <= radius * radius) return z;
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over (seed, stream)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace bibaz
