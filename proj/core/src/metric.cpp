#include "pcm/metric.hpp"

#include <stdexcept>

namespace pcm {

void require_positive(std::string_view what, double x) {
  if (!(x > 0)) {
    throw std::invalid_argument(std::string(what) + ": argument must be positive, got " + to_token(x));
  }
}

void require_positive(std::string_view what, const Rational& x) {
  if (sgn(x) <= 0) {
    throw std::invalid_argument(std::string(what) + ": argument must be positive, got " + to_token(x));
  }
}

template <Scalar T>
T discrete_metric(const T& x, const T& y) {
  require_positive("discrete", x);
  require_positive("discrete", y);
  return x == y ? T(0) : T(1);
}

template <Scalar T>
T euclidean_metric(const T& x, const T& y) {
  require_positive("euclidean", x);
  require_positive("euclidean", y);
  return abs_value(T(x - y));
}

template <Scalar T>
T d1_metric(const T& x, const T& y) {
  require_positive("d1", x);
  require_positive("d1", y);
  const T diff = abs_value(T(x - y));
  return diff / (T(1) + diff);
}

template <Scalar T>
T bounded_ratio_metric(const T& x, const T& y) {
  require_positive("ratio", x);
  require_positive("ratio", y);
  return T(1) - min_value<T>(x / y, y / x);
}

std::vector<std::string_view> metric_names() { return {"discrete", "euclidean", "d1", "ratio"}; }

template <Scalar T>
MetricFn<T> named_metric(std::string_view name) {
  if (name == "discrete") {
    return {"discrete", &discrete_metric<T>, Bound<T>{T(1), false}};
  }
  if (name == "euclidean") {
    return {"euclidean", &euclidean_metric<T>, std::nullopt};
  }
  if (name == "d1") {
    return {"d1", &d1_metric<T>, Bound<T>{T(1), true}};
  }
  if (name == "ratio") {
    return {"ratio", &bounded_ratio_metric<T>, Bound<T>{T(1), true}};
  }
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

template <Scalar T>
MetricFn<T> squared_difference() {
  return {"squared-difference",
          [](const T& x, const T& y) {
            const T diff = x - y;
            return T(diff * diff);
          },
          std::nullopt};
}

#define PCM_INSTANTIATE(T)                                      \
  template T discrete_metric<T>(const T&, const T&);            \
  template T euclidean_metric<T>(const T&, const T&);           \
  template T d1_metric<T>(const T&, const T&);                  \
  template T bounded_ratio_metric<T>(const T&, const T&);       \
  template MetricFn<T> named_metric<T>(std::string_view);       \
  template MetricFn<T> squared_difference<T>();

PCM_INSTANTIATE(double)
PCM_INSTANTIATE(Rational)

#undef PCM_INSTANTIATE

}  // namespace pcm
