#pragma once

// Parameter grids for bound tables.

#include "bibaz/bounds.hpp"
#include "bibaz/maminda.hpp"
#include "bibaz/parallel.hpp"
#include "bibaz/scalar.hpp"

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bibaz {

/// `start` alone, or `start:stop:steps` with `steps` evenly spaced values
/// including both ends. Endpoints may be written as rationals ("1/3").
struct Range {
  Rational start{0};
  Rational stop{0};
  int steps = 1;

  static Range single(const Rational& v) { return {v, v, 1}; }

  std::vector<Rational> exact_values() const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
      out.push_back(start);
      return out;
    }
    for (int i = 0; i < steps; ++i) out.push_back(start + (stop - start) * i / (steps - 1));
    return out;
  }

  std::vector<double> values() const {
    std::vector<double> out;
    for (const auto& v : exact_values()) out.push_back(to_double(v));
    return out;
  }
};

inline Range parse_range(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t from = 0;
  for (;;) {
    const auto colon = text.find(':', from);
    parts.push_back(text.substr(from, colon == std::string_view::npos ? colon : colon - from));
    if (colon == std::string_view::npos) break;
    from = colon + 1;
  }
  if (parts.size() == 1) return Range::single(parse_rational(parts[0]));
  if (parts.size() != 3) throw InvalidParameter("range must be 'start' or 'start:stop:steps': " + std::string(text));
  Range r{parse_rational(parts[0]), parse_rational(parts[1]), 0};
  const auto s = parts[2];
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), r.steps);
  if (ec != std::errc{} || ptr != s.data() + s.size() || r.steps < 1)
    throw InvalidParameter("range step count must be an integer >= 1: " + std::string(text));
  if (r.steps == 1 && r.start != r.stop) throw InvalidParameter("a 1-step range needs start == stop: " + std::string(text));
  return r;
}

enum class PhiFamily { Generic, Janowski, OrderZeta };

struct GridSpec {
  Range k = Range::single(Rational(0));
  Range alpha = Range::single(Rational(1));
  Range beta = Range::single(Rational(1));
  Range lambda = Range::single(Rational(1));
  Range delta = Range::single(Rational(0));
  Range gamma = Range::single(Rational(0));
  PhiFamily family = PhiFamily::Generic;
  // Generic: (B1, B2); Janowski: (A, B); order ζ: (ζ) with `phi_second` unused.
  Range phi_first = Range::single(Rational(1));
  Range phi_second = Range::single(Rational(0));

  std::size_t size() const {
    std::size_t n = 1;
    for (const Range* r : {&k, &alpha, &beta, &lambda, &delta, &gamma, &phi_first}) n *= static_cast<std::size_t>(r->steps);
    if (family != PhiFamily::OrderZeta) n *= static_cast<std::size_t>(phi_second.steps);
    return n;
  }
};

struct GridPoint {
  ClassParams<double> params;
  PhiSpec<double> phi;
};

struct GridRow {
  GridPoint point;
  BoundResult result;
  bool error = false;
  std::string error_message;
};

namespace grid_detail {

inline std::vector<int> integer_values(const Range& r) {
  std::vector<int> out;
  for (const auto& v : r.exact_values()) {
    if (!is_integer(v)) throw InvalidParameter("k range must hit integers only");
    out.push_back(static_cast<int>(v.convert_to<long long>()));
  }
  return out;
}

inline PhiSpec<double> make_phi(PhiFamily f, double x, double y) {
  switch (f) {
    case PhiFamily::Generic:
      return phi::Generic<double>{x, y};
    case PhiFamily::Janowski:
      return phi::Janowski<double>{x, y};
    case PhiFamily::OrderZeta:
    default:
      return phi::OrderZeta<double>{x};
  }
}

}  // namespace grid_detail

/// All grid points in lexicographic index order (k slowest, the last φ
/// parameter fastest). Throws InvalidParameter if any point is invalid.
inline std::vector<GridPoint> expand_grid(const GridSpec& g) {
  const auto ks = grid_detail::integer_values(g.k);
  const auto as = g.alpha.values(), bs = g.beta.values(), ls = g.lambda.values();
  const auto ds = g.delta.values(), gs = g.gamma.values();
  const auto xs = g.phi_first.values();
  const auto ys = g.family == PhiFamily::OrderZeta ? std::vector<double>{0.0} : g.phi_second.values();
  std::vector<GridPoint> out;
  out.reserve(g.size());
  for (int k : ks)
    for (double a : as)
      for (double b : bs)
        for (double l : ls)
          for (double d : ds)
            for (double c : gs)
              for (double x : xs)
                for (double y : ys) {
                  GridPoint pt{{k, a, b, l, d, c}, grid_detail::make_phi(g.family, x, y)};
                  pt.params.validate();
                  validate(pt.phi);
                  out.push_back(std::move(pt));
                }
  return out;
}

inline GridRow evaluate_point(const GridPoint& pt) {
  GridRow row{pt, {}, false, {}};
  try {
    row.result = evaluate_bounds(pt.params, pt.phi);
  } catch (const EngineError& e) {
    row.error = true;
    row.error_message = e.what();
  }
  return row;
}

inline std::vector<GridRow> evaluate_grid(const GridSpec& g) {
  const auto points = expand_grid(g);
  return parallel_map<GridRow>(points.size(), [&](std::size_t i) { return evaluate_point(points[i]); });
}

}  // namespace bibaz
