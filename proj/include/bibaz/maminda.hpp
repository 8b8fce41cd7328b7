#pragma once

// Ma–Minda targets φ(z) = 1 + B_1 z + B_2 z^2 + ... used as subordination
// targets, and their leading coefficients.

#include "bibaz/errors.hpp"
#include "bibaz/scalar.hpp"
#include "bibaz/series.hpp"

#include <initializer_list>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace bibaz {

template <Scalar T>
struct PhiCoefficients {
  T b1;
  T b2;
};

namespace phi {

/// Arbitrary φ given only by B_1 > 0 and B_2.
template <Scalar T>
struct Generic {
  T b1;
  T b2;
};

/// (1 + A z)/(1 + B z) with −1 ≤ B < A ≤ 1.
template <Scalar T>
struct Janowski {
  T a;
  T b;
};

/// (1 + (1 − 2ζ) z)/(1 − z) with 0 ≤ ζ < 1: real part greater than ζ.
template <Scalar T>
struct OrderZeta {
  T zeta;
};

}  // namespace phi

template <Scalar T>
using PhiSpec = std::variant<phi::Generic<T>, phi::Janowski<T>, phi::OrderZeta<T>>;

template <Scalar T>
void validate(const PhiSpec<T>& spec) {
  struct Checker {
    void operator()(const phi::Generic<T>& g) const {
      if (!(g.b1 > 0)) throw InvalidParameter("Generic phi needs B1 > 0");
    }
    void operator()(const phi::Janowski<T>& j) const {
      if (!(T(-1) <= j.b && j.b < j.a && j.a <= T(1))) throw InvalidParameter("Janowski phi needs -1 <= B < A <= 1");
    }
    void operator()(const phi::OrderZeta<T>& o) const {
      if (!(o.zeta >= 0 && o.zeta < 1)) throw InvalidParameter("order-zeta phi needs 0 <= zeta < 1");
    }
  };
  std::visit(Checker{}, spec);
}

/// Closed forms obtained from the series expansions:
///   Janowski: (A − B, −B(A − B)),  order ζ: (2(1 − ζ), 2(1 − ζ)).
template <Scalar T>
PhiCoefficients<T> phi_coefficients(const PhiSpec<T>& spec) {
  validate(spec);
  struct Extract {
    PhiCoefficients<T> operator()(const phi::Generic<T>& g) const { return {g.b1, g.b2}; }
    PhiCoefficients<T> operator()(const phi::Janowski<T>& j) const {
      T d = j.a - j.b;
      return {d, T(-j.b * d)};
    }
    PhiCoefficients<T> operator()(const phi::OrderZeta<T>& o) const {
      T c = T(2) * (T(1) - o.zeta);
      return {c, c};
    }
  };
  return std::visit(Extract{}, spec);
}

/// Taylor expansion of φ at 0 through `order`. A Generic spec only knows
/// B_1 and B_2, so its higher coefficients are zero.
template <Scalar T>
TruncSeries<T> phi_series(const PhiSpec<T>& spec, int order) {
  if (order < 2) throw SeriesDomainError("phi_series needs order >= 2");
  validate(spec);
  auto poly = [order](std::initializer_list<T> head) {
    std::vector<Complex<T>> c(order + 1);
    std::size_t i = 0;
    for (const T& v : head) c[i++] = Complex<T>(v);
    return TruncSeries<T>(std::move(c));
  };
  return std::visit(
      [&](const auto& v) -> TruncSeries<T> {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, phi::Generic<T>>) {
          return poly({T(1), v.b1, v.b2});
        } else if constexpr (std::is_same_v<V, phi::Janowski<T>>) {
          return divide(poly({T(1), v.a}), poly({T(1), v.b}));
        } else {
          return divide(poly({T(1), T(T(1) - T(2) * v.zeta)}), poly({T(1), T(-1)}));
        }
      },
      spec);
}

template <Scalar T>
std::string family_name(const PhiSpec<T>& spec) {
  switch (spec.index()) {
    case 0: return "generic";
    case 1: return "janowski";
    default: return "zeta";
  }
}

}  // namespace bibaz
