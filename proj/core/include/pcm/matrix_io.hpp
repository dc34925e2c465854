#pragma once

// Plain-text matrix format:
//
//   # comment
//   3              <- optional dimension line
//   1    2    6
//   1/2  1    3
//   1/6  1/3  1
//
// Tokens are decimal literals or exact fractions p/q. Any fraction makes the
// file prefer rational mode.

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcm/matrix.hpp"
#include "pcm/scalar.hpp"

namespace pcm {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                           what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NumberToken {
  std::string text;
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  TokenKind kind = TokenKind::Integer;
};

struct MatrixText {
  std::vector<std::vector<NumberToken>> rows;

  bool has_fraction() const;
  NumericMode preferred_mode() const {
    return has_fraction() ? NumericMode::Rational : NumericMode::Float;
  }
};

MatrixText parse_matrix_text(std::string_view text);
MatrixText read_matrix_file(const std::filesystem::path& path);

/// Converts tokens to a validated matrix. Validation failures are reported as
/// ParseError at the offending token.
template <Scalar T>
PCMatrix<T> to_matrix(const MatrixText& text, double tol = kDefaultRelativeTolerance);

/// Dimension line followed by n rows of canonical tokens.
template <Scalar T>
std::string format_matrix_text(const PCMatrix<T>& m);

}  // namespace pcm
