#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcm/scalar.hpp"

namespace pcm {

/// Raised when a grid of numbers cannot be a PC matrix. `row`/`col` locate
/// the offending entry when there is one (0-based), otherwise they are -1.
class InvalidMatrix : public std::invalid_argument {
 public:
  explicit InvalidMatrix(const std::string& what, long row = -1, long col = -1)
      : std::invalid_argument(what), row_(row), col_(col) {}

  long row() const noexcept { return row_; }
  long col() const noexcept { return col_; }

 private:
  long row_;
  long col_;
};

inline constexpr double kDefaultRelativeTolerance = 1e-12;

/// Square n x n grid (n >= 2) of strictly positive ratios, row-major.
/// Reciprocity is recorded at construction, not required.
template <Scalar T>
class PCMatrix {
 public:
  /// Validates `rows`; see validate_pc_matrix.
  explicit PCMatrix(const std::vector<std::vector<T>>& rows, double tol = kDefaultRelativeTolerance);

  std::size_t size() const noexcept { return n_; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  bool is_reciprocal() const noexcept { return reciprocal_; }

  std::vector<std::vector<T>> rows() const;

  /// Same matrix with entry (i, j) replaced; reciprocity is re-evaluated.
  PCMatrix with_entry(std::size_t i, std::size_t j, const T& value,
                      double tol = kDefaultRelativeTolerance) const;

  /// Rows and columns relabelled: result(i, j) = (*this)(perm[i], perm[j]).
  PCMatrix permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const PCMatrix& lhs, const PCMatrix& rhs) {
    return lhs.n_ == rhs.n_ && lhs.entries_ == rhs.entries_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> entries_;
  bool reciprocal_ = false;
};

/// Value triple (a, b, c) = (m_ij, m_ik, m_jk) for i < j < k.
template <Scalar T>
struct Triad {
  std::array<std::size_t, 3> indices{};
  T a;
  T b;
  T c;
};

/// Strictly positive priority weights.
template <Scalar T>
class Weights {
 public:
  explicit Weights(std::vector<T> values);

  std::size_t size() const noexcept { return values_.size(); }
  const T& operator[](std::size_t i) const { return values_[i]; }
  std::span<const T> values() const noexcept { return values_; }

 private:
  std::vector<T> values_;
};

/// Throws InvalidMatrix for empty, non-square, 1x1, or non-positive input.
/// In float mode reciprocity is judged as |m_ij * m_ji - 1| <= tol;
/// in rational mode it is exact and `tol` is ignored.
template <Scalar T>
PCMatrix<T> validate_pc_matrix(const std::vector<std::vector<T>>& raw,
                               double tol = kDefaultRelativeTolerance);

/// m_ij * m_jk == m_ik for all i, j, k. Float mode compares with relative
/// tolerance `tol` against m_ik; rational mode is exact.
template <Scalar T>
bool is_consistent(const PCMatrix<T>& m, double tol = kDefaultRelativeTolerance);

/// All C(n,3) triads in lexicographic order of (i, j, k). Empty for n < 3.
template <Scalar T>
std::vector<Triad<T>> enumerate_triads(const PCMatrix<T>& m);

/// The consistent reciprocal matrix with m_{i,i+1} = ratios[i], filled by
/// chain products. Throws std::invalid_argument on empty or non-positive input.
template <Scalar T>
PCMatrix<T> reconstruct_consistent(std::span<const T> ratios);

/// The superdiagonal (m_{0,1}, ..., m_{n-2,n-1}).
template <Scalar T>
std::vector<T> adjacent_ratios(const PCMatrix<T>& m);

/// m_ij = w_i / w_j.
template <Scalar T>
PCMatrix<T> from_weights(const Weights<T>& w);

std::size_t triad_count(std::size_t n);

}  // namespace pcm
