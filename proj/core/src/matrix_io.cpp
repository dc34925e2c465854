#include "pcm/matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pcm {

namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v'; }

std::vector<NumberToken> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<NumberToken> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (is_space(line[pos])) {
      ++pos;
      continue;
    }
    if (line[pos] == '#') {
      break;
    }
    const std::size_t start = pos;
    while (pos < line.size() && !is_space(line[pos]) && line[pos] != '#') {
      ++pos;
    }
    NumberToken tok{std::string(line.substr(start, pos - start)), line_no, start + 1};
    try {
      tok.kind = classify_token(tok.text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), tok.line, tok.column);
    }
    out.push_back(std::move(tok));
  }
  return out;
}

}  // namespace

bool MatrixText::has_fraction() const {
  return std::any_of(rows.begin(), rows.end(), [](const auto& row) {
    return std::any_of(row.begin(), row.end(), [](const NumberToken& t) { return t.kind == TokenKind::Fraction; });
  });
}

MatrixText parse_matrix_text(std::string_view text) {
  std::vector<std::vector<NumberToken>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    auto tokens = tokenize_line(text.substr(pos, end - pos), line_no);
    if (!tokens.empty()) {
      lines.push_back(std::move(tokens));
    }
    pos = end + 1;
  }
  if (lines.empty()) {
    throw ParseError("empty matrix", line_no, 1);
  }

  MatrixText out;
  // A lone token on the first line is the dimension; a 1x1 matrix is never valid.
  if (lines.front().size() == 1 && lines.size() > 1) {
    const NumberToken& header = lines.front().front();
    std::size_t n = 0;
    const auto* first = header.text.data();
    const auto* last = first + header.text.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (header.kind != TokenKind::Integer || ec != std::errc{} || ptr != last || n == 0) {
      throw ParseError("dimension line must be a positive integer", header.line, header.column);
    }
    if (lines.size() - 1 != n) {
      const NumberToken& at = lines.back().front();
      throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1),
                       at.line, at.column);
    }
    lines.erase(lines.begin());
  }
  const std::size_t n = lines.size();
  for (const auto& row : lines) {
    if (row.size() != n) {
      const NumberToken& at = row.size() > n ? row[n] : row.back();
      throw ParseError("expected " + std::to_string(n) + " entries per row, found " + std::to_string(row.size()),
                       at.line, at.column);
    }
  }
  out.rows = std::move(lines);
  return out;
}

MatrixText read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open matrix file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

template <Scalar T>
PCMatrix<T> to_matrix(const MatrixText& text, double tol) {
  std::vector<std::vector<T>> values;
  values.reserve(text.rows.size());
  for (const auto& row : text.rows) {
    auto& out = values.emplace_back();
    out.reserve(row.size());
    for (const auto& tok : row) {
      out.push_back(parse_scalar<T>(tok.text));
    }
  }
  try {
    return PCMatrix<T>(values, tol);
  } catch (const InvalidMatrix& e) {
    if (e.row() >= 0 && e.col() >= 0) {
      const NumberToken& at =
          text.rows[static_cast<std::size_t>(e.row())][static_cast<std::size_t>(e.col())];
      throw ParseError(e.what(), at.line, at.column);
    }
    const NumberToken& at = text.rows.front().front();
    throw ParseError(e.what(), at.line, at.column);
  }
}

template <Scalar T>
std::string format_matrix_text(const PCMatrix<T>& m) {
  const std::size_t n = m.size();
  std::vector<std::string> cells(n * n);
  std::size_t width = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cells[i * n + j] = to_token(m(i, j));
      width = std::max(width, cells[i * n + j].size());
    }
  }
  std::string out = std::to_string(n) + "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string& cell = cells[i * n + j];
      out += cell;
      if (j + 1 < n) {
        out.append(width - cell.size() + 1, ' ');
      }
    }
    out += '\n';
  }
  return out;
}

template PCMatrix<double> to_matrix<double>(const MatrixText&, double);
template PCMatrix<Rational> to_matrix<Rational>(const MatrixText&, double);
template std::string format_matrix_text<double>(const PCMatrix<double>&);
template std::string format_matrix_text<Rational>(const PCMatrix<Rational>&);

}  // namespace pcm
