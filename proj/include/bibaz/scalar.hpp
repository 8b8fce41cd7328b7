#pragma once

// Scalar fields the engine computes over: exact rationals and IEEE doubles.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bibaz {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "floating";
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
};

template <class T>
concept Scalar = requires { scalar_traits<T>::exact; };

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

/// Integer power with the 0^0 = 1 convention.
template <Scalar T>
T ipow(const T& base, unsigned exponent) {
  T result(1);
  T b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

inline bool is_integer(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

inline bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

/// Parses "p", "p/q" or a decimal literal ("-0.125", "1e-3") into a rational.
/// Decimals are read exactly as written, not through a double.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) fail();
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt mantissa = 0;
  int frac_digits = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) fail();
  long exponent = -frac_digits;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') fail();
    ++pos;
    std::string rest(text.substr(pos));
    if (rest.empty()) fail();
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(rest, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != rest.size()) fail();
    exponent += e;
  }
  Rational value(mantissa);
  BigInt ten_pow = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    value /= Rational(ten_pow);
  } else {
    value *= Rational(ten_pow);
  }
  return negative ? Rational(-value) : value;
}

}  // namespace bibaz
