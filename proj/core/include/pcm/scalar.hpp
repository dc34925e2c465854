#pragma once

// Numeric modes for the toolkit. Every algorithm is written once against
// the Scalar concept and instantiated for exactly two types: binary64
// floating point and arbitrary-precision rationals.

#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pcm {

using Rational = mpq_class;

enum class NumericMode { Float, Rational };

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar T>
inline constexpr NumericMode mode_of = std::same_as<T, double> ? NumericMode::Float : NumericMode::Rational;

template <Scalar T>
inline constexpr bool is_exact = std::same_as<T, Rational>;

std::string_view to_string(NumericMode mode);
NumericMode parse_numeric_mode(std::string_view text);

/// Lexical class of a number token as it appears in matrix files and on the
/// command line.
enum class TokenKind { Integer, Decimal, Fraction };

/// Classifies `text`; throws std::invalid_argument if it is not a number.
/// Accepted: `[+-]?digits`, decimals with optional fraction part and
/// exponent, and `p/q` with unsigned integers p, q (q > 0).
TokenKind classify_token(std::string_view text);

/// Exact value of a token. Decimal literals are converted exactly
/// ("0.1" is 1/10, not the nearest double).
Rational parse_exact(std::string_view text);

/// Nearest double to a token.
double parse_float(std::string_view text);

template <Scalar T>
T parse_scalar(std::string_view text) {
  if constexpr (std::same_as<T, double>) {
    return parse_float(text);
  } else {
    return parse_exact(text);
  }
}

/// Canonical text: `p/q` (or `p`) for rationals, shortest round-trip decimal
/// for doubles. parse_scalar(to_token(x)) == x in both modes.
std::string to_token(double x);
std::string to_token(const Rational& x);

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

inline double abs_value(double x) { return x < 0 ? -x : x; }
inline Rational abs_value(const Rational& x) { return abs(x); }

template <Scalar T>
T min_value(const T& x, const T& y) {
  return y < x ? T(y) : T(x);
}

template <Scalar T>
T max_value(const T& x, const T& y) {
  return x < y ? T(y) : T(x);
}

}  // namespace pcm
