#pragma once

// Randomized and structured falsification of the metric axioms and of the
// triad-deviation conditions:
//
//   zero          td(a,b,c) == 0  <=>  a*c == b
//   commutation   td(a,b,c) == td(b, a*c, 1)
//   gen. triangle td(a, d*e, c) <= td(a,b,c) + td(d,b,e)
//   symmetry      td(a,b,c) == td(c,b,a)
//
// A check never proves anything; it either finds a witness or reports how
// many samples it tried. Witnesses are stored as exact tokens so they can be
// re-evaluated bit-for-bit.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcm/deviation.hpp"
#include "pcm/metric.hpp"
#include "pcm/scalar.hpp"

namespace pcm {

enum class SamplingMode { UniformLog, UniformLinear, StructuredGrid };

std::string_view to_string(SamplingMode mode);
SamplingMode parse_sampling_mode(std::string_view text);

inline constexpr double kDefaultSlack = 1e-12;
/// Float-mode separation margin: x != y only counts when |x - y| >= margin * max(x, y).
inline constexpr double kSeparationMargin = 1e-6;

/// Deterministic sample stream description.
///
/// The stream is the structured probe set (when `structured` is set, or always
/// in StructuredGrid mode) followed by `count` random tuples. In StructuredGrid
/// mode there are no random tuples and `count` caps the probe set instead.
struct SamplePlan {
  std::uint64_t seed = 0;
  std::size_t count = 10000;
  double lo = 1e-3;
  double hi = 1e3;
  SamplingMode mode = SamplingMode::UniformLog;
  // Float-mode slack, scaled by max(1, |lhs|, |rhs|). Rational checks are exact.
  double tolerance = kDefaultSlack;
  bool structured = true;

  /// Throws std::invalid_argument unless 0 < lo < hi, count >= 1, tolerance >= 0.
  void validate() const;
};

struct Witness {
  std::string check;
  std::size_t sample_index = 0;
  std::vector<std::string> args;
  std::string lhs;
  std::string rhs;
};

struct AxiomRecord {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::optional<Witness> first_witness;
};

struct AxiomReport {
  std::string target;
  NumericMode numeric = NumericMode::Float;
  SamplePlan plan;
  std::vector<AxiomRecord> axioms;

  bool passed() const;
  const AxiomRecord* find(std::string_view name) const;
};

enum class DeviationCondition { Zero, Commutation, GeneralizedTriangle, Symmetry };

std::string_view to_string(DeviationCondition c);
DeviationCondition parse_deviation_condition(std::string_view text);

/// Identity, separation, symmetry and triangle inequality, plus the declared
/// bound when there is one. Triangle checks are also broken down by the
/// orderings x<=y<=z, x<=z<=y, y<=x<=z (the remaining three follow by symmetry).
template <Scalar T>
AxiomReport check_metric_axioms(const MetricFn<T>& d, const SamplePlan& plan);

/// zero-forward, zero-reverse, commutation, generalized-triangle and
/// symmetry, plus the declared bound when there is one.
template <Scalar T>
AxiomReport check_deviation_conditions(const TriadDeviationFn<T>& td, const SamplePlan& plan);

/// First violation of `condition` in the plan's sample stream.
template <Scalar T>
std::optional<Witness> find_counterexample(const TriadDeviationFn<T>& td, DeviationCondition condition,
                                           const SamplePlan& plan);

/// Re-runs the single check named in `w` on its stored arguments.
/// True iff the violation reproduces.
template <Scalar T>
bool reproduces(const TriadDeviationFn<T>& td, const Witness& w, double tolerance = kDefaultSlack);

template <Scalar T>
bool reproduces(const MetricFn<T>& d, const Witness& w, double tolerance = kDefaultSlack);

struct ProbePoint {
  std::array<std::string, 3> args;
  std::string value;
  double approx = 0.0;
};

struct BoundEvidence {
  std::vector<ProbePoint> trace;
  std::string max_value;
  double max_approx = 0.0;
  bool exceeds_one = false;
  bool exceeds_million = false;
  bool overflow = false;

  bool unbounded() const { return exceeds_million || overflow; }
};

/// (1, 10^k, 1) for k = 0..k_max.
template <Scalar T>
std::vector<std::array<T, 3>> growth_schedule(int k_max = 12);

/// (10^k, 1, 1) for k = 0..k_max.
template <Scalar T>
std::vector<std::array<T, 3>> reverse_growth_schedule(int k_max = 12);

/// Evaluates td along `schedule`. Float overflow is recorded as evidence of
/// unboundedness. Throws std::invalid_argument for an empty schedule.
template <Scalar T>
BoundEvidence probe_bound(const TriadDeviationFn<T>& td, std::span<const std::array<T, 3>> schedule);

}  // namespace pcm
