#include "pcm/matrix.hpp"

#include <algorithm>

namespace pcm {

namespace {

template <Scalar T>
bool reciprocal_pair(const T& x, const T& y, double tol) {
  if constexpr (is_exact<T>) {
    return x * y == 1;
  } else {
    return abs_value(x * y - 1.0) <= tol;
  }
}

template <Scalar T>
bool check_reciprocal(const std::vector<T>& entries, std::size_t n, double tol) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!reciprocal_pair(entries[i * n + j], entries[j * n + i], tol)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

template <Scalar T>
PCMatrix<T>::PCMatrix(const std::vector<std::vector<T>>& rows, double tol) {
  if (rows.empty()) {
    throw InvalidMatrix("empty matrix");
  }
  n_ = rows.size();
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw InvalidMatrix("matrix is not square: row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(n_),
                          static_cast<long>(i));
    }
  }
  if (n_ < 2) {
    throw InvalidMatrix("matrix dimension must be at least 2");
  }
  entries_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const T& v = rows[i][j];
      if (!(v > 0)) {
        throw InvalidMatrix("non-positive entry at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                            static_cast<long>(i), static_cast<long>(j));
      }
      entries_.push_back(v);
    }
  }
  reciprocal_ = check_reciprocal(entries_, n_, tol);
}

template <Scalar T>
std::vector<std::vector<T>> PCMatrix<T>::rows() const {
  std::vector<std::vector<T>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

template <Scalar T>
PCMatrix<T> PCMatrix<T>::with_entry(std::size_t i, std::size_t j, const T& value, double tol) const {
  auto r = rows();
  r.at(i).at(j) = value;
  return PCMatrix(r, tol);
}

template <Scalar T>
PCMatrix<T> PCMatrix<T>::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) {
    throw std::invalid_argument("permutation size does not match matrix dimension");
  }
  PCMatrix out = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out.entries_[i * n_ + j] = entries_[perm[i] * n_ + perm[j]];
    }
  }
  return out;
}

template <Scalar T>
Weights<T>::Weights(std::vector<T> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("empty weight vector");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0)) {
      throw std::invalid_argument("non-positive weight at index " + std::to_string(i));
    }
  }
}

template <Scalar T>
PCMatrix<T> validate_pc_matrix(const std::vector<std::vector<T>>& raw, double tol) {
  return PCMatrix<T>(raw, tol);
}

template <Scalar T>
bool is_consistent(const PCMatrix<T>& m, double tol) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if constexpr (is_exact<T>) {
          if (m(i, j) * m(j, k) != m(i, k)) {
            return false;
          }
        } else {
          if (abs_value(m(i, j) * m(j, k) - m(i, k)) > tol * m(i, k)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

std::size_t triad_count(std::size_t n) {
  return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

template <Scalar T>
std::vector<Triad<T>> enumerate_triads(const PCMatrix<T>& m) {
  const std::size_t n = m.size();
  std::vector<Triad<T>> out;
  out.reserve(triad_count(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        out.push_back(Triad<T>{{i, j, k}, m(i, j), m(i, k), m(j, k)});
      }
    }
  }
  return out;
}

template <Scalar T>
PCMatrix<T> reconstruct_consistent(std::span<const T> ratios) {
  if (ratios.empty()) {
    throw std::invalid_argument("reconstruction needs at least one ratio");
  }
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (!(ratios[i] > 0)) {
      throw std::invalid_argument("non-positive ratio at index " + std::to_string(i));
    }
  }
  const std::size_t n = ratios.size() + 1;
  std::vector<std::vector<T>> rows(n, std::vector<T>(n, T(1)));
  for (std::size_t i = 0; i < n; ++i) {
    T chain(1);
    for (std::size_t j = i + 1; j < n; ++j) {
      chain *= ratios[j - 1];
      rows[i][j] = chain;
      rows[j][i] = T(1) / chain;
    }
  }
  return PCMatrix<T>(rows);
}

template <Scalar T>
std::vector<T> adjacent_ratios(const PCMatrix<T>& m) {
  std::vector<T> out;
  out.reserve(m.size() - 1);
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    out.push_back(m(i, i + 1));
  }
  return out;
}

template <Scalar T>
PCMatrix<T> from_weights(const Weights<T>& w) {
  const std::size_t n = w.size();
  std::vector<std::vector<T>> rows(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = i == j ? T(1) : T(w[i] / w[j]);
    }
  }
  return PCMatrix<T>(rows);
}

#define PCM_INSTANTIATE(T)                                                                  \
  template class PCMatrix<T>;                                                               \
  template class Weights<T>;                                                                \
  template PCMatrix<T> validate_pc_matrix<T>(const std::vector<std::vector<T>>&, double);   \
  template bool is_consistent<T>(const PCMatrix<T>&, double);                               \
  template std::vector<Triad<T>> enumerate_triads<T>(const PCMatrix<T>&);                   \
  template PCMatrix<T> reconstruct_consistent<T>(std::span<const T>);                       \
  template std::vector<T> adjacent_ratios<T>(const PCMatrix<T>&);                           \
  template PCMatrix<T> from_weights<T>(const Weights<T>&);

PCM_INSTANTIATE(double)
PCM_INSTANTIATE(Rational)

#undef PCM_INSTANTIATE

}  // namespace pcm
