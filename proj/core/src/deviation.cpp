#include "pcm/deviation.hpp"

#include <cmath>
#include <stdexcept>

namespace pcm {

template <Scalar T>
std::string TriadDeviationFn<T>::origin_label() const {
  return origin == DeviationOrigin::InducedFromMetric ? "induced-from-metric(" + source_metric + ")"
                                                      : "explicit-formula";
}

template <Scalar T>
TriadDeviationFn<T> induce_deviation(const MetricFn<T>& d) {
  TriadDeviationFn<T> td;
  td.name = "td(" + d.name + ")";
  td.eval = [metric = d.eval](const T& a, const T& b, const T& c) { return metric(T(a * c), b); };
  td.origin = DeviationOrigin::InducedFromMetric;
  td.source_metric = d.name;
  td.declared_bound = d.declared_bound;
  return td;
}

template <Scalar T>
MetricFn<T> induce_metric_from_deviation(const TriadDeviationFn<T>& td) {
  return {"induced(" + td.name + ")",
          [dev = td.eval](const T& x, const T& y) { return dev(x, y, T(1)); },
          td.declared_bound};
}

std::string_view to_string(KiiForm form) {
  switch (form) {
    case KiiForm::MinAbs:
      return "min-abs";
    case KiiForm::OneMinusMin:
      return "one-minus-min";
    case KiiForm::Exponential:
      return "exponential";
  }
  return "?";
}

KiiForm parse_kii_form(std::string_view text) {
  for (auto form : {KiiForm::MinAbs, KiiForm::OneMinusMin, KiiForm::Exponential}) {
    if (to_string(form) == text) {
      return form;
    }
  }
  throw std::invalid_argument("unknown Kii form '" + std::string(text) + "'");
}

template <Scalar T>
T kii(const T& a, const T& b, const T& c, KiiForm form) {
  require_positive("Kii", a);
  require_positive("Kii", b);
  require_positive("Kii", c);
  const T ac = a * c;
  switch (form) {
    case KiiForm::MinAbs:
      return min_value<T>(abs_value(T(1 - b / ac)), abs_value(T(1 - ac / b)));
    case KiiForm::OneMinusMin:
      return T(1) - min_value<T>(b / ac, ac / b);
    case KiiForm::Exponential:
      if constexpr (is_exact<T>) {
        throw std::invalid_argument("Kii exponential form has no exact evaluation; use float mode");
      } else {
        return 1.0 - std::exp(-std::abs(std::log(b / ac)));
      }
  }
  throw std::invalid_argument("unknown Kii form");
}

template <Scalar T>
T pl(const T& a, const T& b, const T& c) {
  require_positive("PL", a);
  require_positive("PL", b);
  require_positive("PL", c);
  const T ac = a * c;
  return T(b / ac + ac / b - 2);
}

std::vector<std::string_view> indicator_names() { return {"DI", "EI", "I1", "Kii", "PL"}; }

template <Scalar T>
TriadDeviationFn<T> named_indicator(std::string_view name) {
  auto renamed = [](TriadDeviationFn<T> td, std::string_view n) {
    td.name = std::string(n);
    return td;
  };
  if (name == "DI") {
    return renamed(induce_deviation(named_metric<T>("discrete")), name);
  }
  if (name == "EI") {
    return renamed(induce_deviation(named_metric<T>("euclidean")), name);
  }
  if (name == "I1") {
    return renamed(induce_deviation(named_metric<T>("d1")), name);
  }
  if (name == "Kii") {
    return {"Kii", [](const T& a, const T& b, const T& c) { return kii<T>(a, b, c); },
            DeviationOrigin::ExplicitFormula, "", Bound<T>{T(1), true}};
  }
  if (name == "PL") {
    return {"PL", &pl<T>, DeviationOrigin::ExplicitFormula, "", std::nullopt};
  }
  throw std::invalid_argument("unknown indicator '" + std::string(name) + "'");
}

template <Scalar T>
T evaluate_named(std::string_view name, const Triad<T>& t) {
  return named_indicator<T>(name)(t.a, t.b, t.c);
}

template <Scalar T>
MatrixInconsistency<T> matrix_inconsistency(const PCMatrix<T>& m, const TriadDeviationFn<T>& td) {
  MatrixInconsistency<T> out{T(0), std::nullopt, {}};
  for (const auto& t : enumerate_triads(m)) {
    T value = td(t.a, t.b, t.c);
    // Strict comparison keeps the lexicographically first maximiser.
    if (!out.worst || out.score < value) {
      out.score = value;
      out.worst = t;
    }
    out.per_triad.emplace(t.indices, std::move(value));
  }
  return out;
}

#define PCM_INSTANTIATE(T)                                                                        \
  template struct TriadDeviationFn<T>;                                                            \
  template TriadDeviationFn<T> induce_deviation<T>(const MetricFn<T>&);                           \
  template MetricFn<T> induce_metric_from_deviation<T>(const TriadDeviationFn<T>&);               \
  template T kii<T>(const T&, const T&, const T&, KiiForm);                                       \
  template T pl<T>(const T&, const T&, const T&);                                                 \
  template TriadDeviationFn<T> named_indicator<T>(std::string_view);                              \
  template T evaluate_named<T>(std::string_view, const Triad<T>&);                                \
  template MatrixInconsistency<T> matrix_inconsistency<T>(const PCMatrix<T>&, const TriadDeviationFn<T>&);

PCM_INSTANTIATE(double)
PCM_INSTANTIATE(Rational)

#undef PCM_INSTANTIATE

}  // namespace pcm
