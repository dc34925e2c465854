#include "pcm/scalar.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <system_error>

namespace pcm {

namespace {

constexpr long kMaxExponent = 4096;

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

std::size_t count_digits(std::string_view text, std::size_t pos) {
  std::size_t n = 0;
  while (pos + n < text.size() && is_digit(text[pos + n])) {
    ++n;
  }
  return n;
}

[[noreturn]] void bad_token(std::string_view text, const char* why) {
  throw std::invalid_argument("invalid number '" + std::string(text) + "': " + why);
}

struct DecimalParts {
  bool negative = false;
  std::string digits;  // integer and fraction digits, concatenated
  long scale = 0;      // value = digits * 10^scale
};

DecimalParts split_decimal(std::string_view text) {
  DecimalParts parts;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    parts.negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t int_len = count_digits(text, pos);
  parts.digits.append(text.substr(pos, int_len));
  pos += int_len;
  std::size_t frac_len = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    frac_len = count_digits(text, pos);
    parts.digits.append(text.substr(pos, frac_len));
    pos += frac_len;
  }
  if (int_len + frac_len == 0) {
    bad_token(text, "no digits");
  }
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    const std::size_t exp_len = count_digits(text, pos);
    if (exp_len == 0) {
      bad_token(text, "empty exponent");
    }
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + exp_len, exponent);
    if (ec != std::errc{} || exponent > kMaxExponent) {
      bad_token(text, "exponent out of range");
    }
    pos += exp_len;
    if (exp_negative) {
      exponent = -exponent;
    }
  }
  if (pos != text.size()) {
    bad_token(text, "trailing characters");
  }
  parts.scale = exponent - static_cast<long>(frac_len);
  return parts;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

std::string_view to_string(NumericMode mode) {
  return mode == NumericMode::Float ? "float" : "rational";
}

NumericMode parse_numeric_mode(std::string_view text) {
  if (text == "float") {
    return NumericMode::Float;
  }
  if (text == "rational") {
    return NumericMode::Rational;
  }
  throw std::invalid_argument("unknown numeric mode '" + std::string(text) + "'");
}

TokenKind classify_token(std::string_view text) {
  if (text.empty()) {
    bad_token(text, "empty");
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::size_t pos = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    const std::size_t p_len = count_digits(text, pos);
    const std::size_t q_len = count_digits(text, slash + 1);
    if (p_len == 0 || pos + p_len != slash || q_len == 0 || slash + 1 + q_len != text.size()) {
      bad_token(text, "expected p/q with integer p and q");
    }
    if (text.substr(slash + 1).find_first_not_of('0') == std::string_view::npos) {
      bad_token(text, "zero denominator");
    }
    return TokenKind::Fraction;
  }
  split_decimal(text);
  const bool plain = text.find_first_of(".eE") == std::string_view::npos;
  return plain ? TokenKind::Integer : TokenKind::Decimal;
}

Rational parse_exact(std::string_view text) {
  if (classify_token(text) == TokenKind::Fraction) {
    const std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!num.empty() && num[0] == '+') {
      num.remove_prefix(1);
    }
    Rational r(mpz_class(std::string(num)), mpz_class(std::string(text.substr(slash + 1))));
    r.canonicalize();
    return r;
  }
  const auto parts = split_decimal(text);
  mpz_class mantissa(parts.digits);
  if (parts.negative) {
    mantissa = -mantissa;
  }
  Rational r;
  if (parts.scale >= 0) {
    r = Rational(mantissa * pow10(static_cast<unsigned long>(parts.scale)));
  } else {
    r = Rational(mantissa, pow10(static_cast<unsigned long>(-parts.scale)));
    r.canonicalize();
  }
  return r;
}

double parse_float(std::string_view text) {
  auto parse_plain = [](std::string_view t) {
    if (!t.empty() && t[0] == '+') {
      t.remove_prefix(1);
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec == std::errc::result_out_of_range) {
      // Overflow or underflow: strtod gives the properly signed inf / 0.
      value = std::strtod(std::string(t).c_str(), nullptr);
    } else if (ec != std::errc{} || ptr != t.data() + t.size()) {
      bad_token(t, "not a decimal literal");
    }
    return value;
  };
  if (classify_token(text) == TokenKind::Fraction) {
    const std::size_t slash = text.find('/');
    return parse_plain(text.substr(0, slash)) / parse_plain(text.substr(slash + 1));
  }
  return parse_plain(text);
}

std::string to_token(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string to_token(const Rational& x) { return x.get_str(); }

}  // namespace pcm
