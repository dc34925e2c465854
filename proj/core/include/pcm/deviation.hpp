#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcm/matrix.hpp"
#include "pcm/metric.hpp"
#include "pcm/scalar.hpp"

namespace pcm {

enum class DeviationOrigin { InducedFromMetric, ExplicitFormula };

/// A ternary map on positive reals meant to measure how far (a, b, c) is from
/// satisfying a * c == b.
template <Scalar T>
struct TriadDeviationFn {
  std::string name;
  std::function<T(const T&, const T&, const T&)> eval;
  DeviationOrigin origin = DeviationOrigin::ExplicitFormula;
  std::string source_metric;  // set iff origin == InducedFromMetric
  std::optional<Bound<T>> declared_bound;

  T operator()(const T& a, const T& b, const T& c) const { return eval(a, b, c); }

  /// "induced-from-metric(<name>)" or "explicit-formula".
  std::string origin_label() const;
};

/// (a, b, c) -> d(a * c, b). Named "td(<metric>)"; inherits the bound.
template <Scalar T>
TriadDeviationFn<T> induce_deviation(const MetricFn<T>& d);

/// (x, y) -> td(x, y, 1). Named "induced(<td>)". Whether the result really
/// is a metric depends on td; check it with check_metric_axioms.
template <Scalar T>
MetricFn<T> induce_metric_from_deviation(const TriadDeviationFn<T>& td);

enum class KiiForm {
  MinAbs,       // min(|1 - b/(ac)|, |1 - ac/b|)
  OneMinusMin,  // 1 - min(b/(ac), ac/b)
  Exponential,  // 1 - exp(-|ln(b/(ac))|)
};

std::string_view to_string(KiiForm form);
KiiForm parse_kii_form(std::string_view text);

/// Distance-based triad inconsistency in [0, 1). The exponential form has no
/// exact evaluation and throws std::invalid_argument in rational mode.
template <Scalar T>
T kii(const T& a, const T& b, const T& c, KiiForm form = KiiForm::OneMinusMin);

/// b/(ac) + ac/b - 2. Zero iff ac == b, but unbounded and not a triad
/// deviation (it breaks the generalized triangle inequality).
template <Scalar T>
T pl(const T& a, const T& b, const T& c);

/// DI, EI, I1, Kii, PL.
std::vector<std::string_view> indicator_names();

/// DI, EI and I1 are induced from the discrete, euclidean and d1 metrics;
/// Kii and PL are explicit formulas. Throws std::invalid_argument for an
/// unknown name.
template <Scalar T>
TriadDeviationFn<T> named_indicator(std::string_view name);

template <Scalar T>
T evaluate_named(std::string_view name, const Triad<T>& t);

using IndexTriple = std::array<std::size_t, 3>;

template <Scalar T>
struct MatrixInconsistency {
  T score;                       // max over triads, 0 if there are none
  std::optional<Triad<T>> worst; // lexicographically first argmax
  std::map<IndexTriple, T> per_triad;

  bool no_triads() const { return per_triad.empty(); }
};

template <Scalar T>
MatrixInconsistency<T> matrix_inconsistency(const PCMatrix<T>& m, const TriadDeviationFn<T>& td);

template <Scalar T>
MatrixInconsistency<T> matrix_inconsistency(const PCMatrix<T>& m, std::string_view indicator) {
  return matrix_inconsistency(m, named_indicator<T>(indicator));
}

}  // namespace pcm
