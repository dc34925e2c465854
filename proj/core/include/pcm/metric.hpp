#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcm/scalar.hpp"

namespace pcm {

/// Declared upper bound of a distance or deviation. `strict` means the bound
/// is never attained (range [0, value) rather than [0, value]).
template <Scalar T>
struct Bound {
  T value;
  bool strict = false;
};

/// A named distance on the positive reals. The metric axioms are claims,
/// not guarantees; check_metric_axioms is what tests them.
template <Scalar T>
struct MetricFn {
  std::string name;
  std::function<T(const T&, const T&)> eval;
  std::optional<Bound<T>> declared_bound;

  T operator()(const T& x, const T& y) const { return eval(x, y); }
};

// Catalog. All of these reject non-positive arguments with
// std::invalid_argument.

/// 0 if x == y, else 1. Float equality is bitwise value equality.
template <Scalar T>
T discrete_metric(const T& x, const T& y);

/// |x - y|
template <Scalar T>
T euclidean_metric(const T& x, const T& y);

/// |x - y| / (1 + |x - y|)
template <Scalar T>
T d1_metric(const T& x, const T& y);

/// 1 - min(x/y, y/x)
template <Scalar T>
T bounded_ratio_metric(const T& x, const T& y);

/// Catalog names accepted on the command line: discrete, euclidean, d1, ratio.
std::vector<std::string_view> metric_names();

/// Throws std::invalid_argument for an unknown name.
template <Scalar T>
MetricFn<T> named_metric(std::string_view name);

/// (x - y)^2. Not a metric (fails the triangle inequality); used as a negative
/// control for the axiom checker.
template <Scalar T>
MetricFn<T> squared_difference();

void require_positive(std::string_view what, double x);
void require_positive(std::string_view what, const Rational& x);

}  // namespace pcm
