#include "pcm/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <stdexcept>

namespace pcm {

std::string_view to_string(SamplingMode mode) {
  switch (mode) {
    case SamplingMode::UniformLog:
      return "uniform-log";
    case SamplingMode::UniformLinear:
      return "uniform-linear";
    case SamplingMode::StructuredGrid:
      return "structured-grid";
  }
  return "?";
}

SamplingMode parse_sampling_mode(std::string_view text) {
  for (auto m : {SamplingMode::UniformLog, SamplingMode::UniformLinear, SamplingMode::StructuredGrid}) {
    if (to_string(m) == text) {
      return m;
    }
  }
  throw std::invalid_argument("unknown sampling mode '" + std::string(text) + "'");
}

void SamplePlan::validate() const {
  if (!(lo > 0)) {
    throw std::invalid_argument("sample domain lower bound must be positive");
  }
  if (!(hi > lo)) {
    throw std::invalid_argument("sample domain upper bound must exceed the lower bound");
  }
  if (count < 1) {
    throw std::invalid_argument("sample count must be at least 1");
  }
  if (!(tolerance >= 0)) {
    throw std::invalid_argument("tolerance must be non-negative");
  }
}

bool AxiomReport::passed() const {
  return std::none_of(axioms.begin(), axioms.end(), [](const AxiomRecord& r) { return r.violations > 0; });
}

const AxiomRecord* AxiomReport::find(std::string_view name) const {
  auto it = std::find_if(axioms.begin(), axioms.end(), [&](const AxiomRecord& r) { return r.name == name; });
  return it == axioms.end() ? nullptr : &*it;
}

std::string_view to_string(DeviationCondition c) {
  switch (c) {
    case DeviationCondition::Zero:
      return "zero";
    case DeviationCondition::Commutation:
      return "commutation";
    case DeviationCondition::GeneralizedTriangle:
      return "generalized-triangle";
    case DeviationCondition::Symmetry:
      return "symmetry";
  }
  return "?";
}

DeviationCondition parse_deviation_condition(std::string_view text) {
  for (auto c : {DeviationCondition::Zero, DeviationCondition::Commutation, DeviationCondition::GeneralizedTriangle,
                 DeviationCondition::Symmetry}) {
    if (to_string(c) == text) {
      return c;
    }
  }
  throw std::invalid_argument("unknown condition '" + std::string(text) +
                              "' (expected zero, commutation, generalized-triangle or symmetry)");
}

namespace {

// ---------------------------------------------------------------------------
// Sample stream

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <Scalar T>
T quantize(double x) {
  if constexpr (is_exact<T>) {
    // Six significant decimal digits, so rational witnesses stay short.
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 5);
    return parse_exact(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
  } else {
    return x;
  }
}

template <Scalar T>
class SampleStream {
 public:
  SampleStream(const SamplePlan& plan, std::size_t arity, std::vector<std::vector<T>> structured)
      : plan_(plan), arity_(arity), rng_(plan.seed) {
    plan.validate();
    const bool use_structured = plan.structured || plan.mode == SamplingMode::StructuredGrid;
    if (use_structured) {
      structured_ = std::move(structured);
      if (plan.mode == SamplingMode::StructuredGrid && structured_.size() > plan.count) {
        structured_.resize(plan.count);
      }
    }
    random_total_ = plan.mode == SamplingMode::StructuredGrid ? 0 : plan.count;
    log_lo_ = std::log(plan.lo);
    log_hi_ = std::log(plan.hi);
  }

  /// Fills `out` with the next tuple; false at end of stream.
  bool next(std::vector<T>& out) {
    if (structured_pos_ < structured_.size()) {
      out = structured_[structured_pos_++];
      ++index_;
      return true;
    }
    if (random_drawn_ >= random_total_) {
      return false;
    }
    out.resize(arity_);
    for (auto& v : out) {
      v = quantize<T>(draw());
    }
    ++random_drawn_;
    ++index_;
    return true;
  }

  /// Stream index of the tuple most recently returned by next().
  std::size_t index() const { return index_ - 1; }

 private:
  double draw() {
    const double u = unit_interval(rng_);
    if (plan_.mode == SamplingMode::UniformLinear) {
      return std::max(plan_.lo, plan_.lo + u * (plan_.hi - plan_.lo));
    }
    return std::exp(log_lo_ + u * (log_hi_ - log_lo_));
  }

  const SamplePlan& plan_;
  std::size_t arity_;
  std::mt19937_64 rng_;
  std::vector<std::vector<T>> structured_;
  std::size_t structured_pos_ = 0;
  std::size_t random_total_ = 0;
  std::size_t random_drawn_ = 0;
  std::size_t index_ = 0;
  double log_lo_ = 0.0;
  double log_hi_ = 0.0;
};

template <Scalar T>
std::vector<T> values_of(std::initializer_list<const char*> tokens) {
  std::vector<T> out;
  for (const char* t : tokens) {
    out.push_back(parse_scalar<T>(t));
  }
  return out;
}

// Every ordering of (1, 2, 3) comes first, so each triangle case is hit, then
// every triple over a small grid that includes ties and reciprocals.
template <Scalar T>
std::vector<std::vector<T>> structured_triples() {
  std::vector<std::vector<T>> out = {
      values_of<T>({"1", "2", "3"}), values_of<T>({"1", "3", "2"}), values_of<T>({"2", "1", "3"}),
      values_of<T>({"3", "2", "1"}), values_of<T>({"2", "3", "1"}), values_of<T>({"3", "1", "2"}),
  };
  const auto grid = values_of<T>({"1/5", "1/4", "1/3", "1/2", "1", "2", "3", "4", "5"});
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      for (const auto& z : grid) {
        out.push_back({x, y, z});
      }
    }
  }
  return out;
}

// (a, b, c, d, e) tuples for the deviation conditions. A known
// generalized-triangle counterexample for PL leads the stream.
template <Scalar T>
std::vector<std::vector<T>> structured_quintuples() {
  std::vector<std::vector<T>> out = {values_of<T>({"1", "3", "5", "1", "2"})};
  const auto grid = values_of<T>({"1/2", "1", "2", "3", "4", "5"});
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      for (const auto& c : grid) {
        for (const auto& d : grid) {
          for (const auto& e : grid) {
            out.push_back({a, b, c, d, e});
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Single checks. Each returns nullopt when the check does not apply to the
// arguments (for example zero-reverse on a consistent triad).

template <Scalar T>
struct Outcome {
  bool violated = false;
  T lhs;
  T rhs;
};

// Absolute slack for values up to 1, relative beyond: one rounding step on
// an unbounded deviation such as |ac - b| is far larger than any fixed
// absolute slack.
inline double scaled_slack(double lhs, double rhs, double slack) {
  return slack * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

template <Scalar T>
bool exceeds(const T& lhs, const T& rhs, double slack) {
  if constexpr (is_exact<T>) {
    return lhs > rhs;
  } else {
    return lhs > rhs + scaled_slack(lhs, rhs, slack);
  }
}

template <Scalar T>
bool differs(const T& lhs, const T& rhs, double slack) {
  if constexpr (is_exact<T>) {
    return lhs != rhs;
  } else {
    return abs_value(lhs - rhs) > scaled_slack(lhs, rhs, slack);
  }
}

template <Scalar T>
bool clearly_distinct(const T& x, const T& y) {
  if constexpr (is_exact<T>) {
    return x != y;
  } else {
    return abs_value(x - y) >= kSeparationMargin * max_value(x, y);
  }
}

template <Scalar T>
std::optional<Outcome<T>> bound_check(const std::optional<Bound<T>>& bound, const T& value) {
  if (!bound) {
    return std::nullopt;
  }
  const bool violated = bound->strict ? !(value < bound->value) : value > bound->value;
  return Outcome<T>{violated, value, bound->value};
}

template <Scalar T>
std::optional<Outcome<T>> deviation_check(const TriadDeviationFn<T>& td, std::string_view check,
                                          std::span<const T> x, double slack) {
  auto need = [&](std::size_t n) {
    if (x.size() != n) {
      throw std::invalid_argument("check '" + std::string(check) + "' expects " + std::to_string(n) + " arguments");
    }
  };
  if (check == "zero-forward") {
    need(3);
    if (x[0] * x[2] != x[1]) {
      return std::nullopt;
    }
    T v = td(x[0], x[1], x[2]);
    return Outcome<T>{differs(v, T(0), slack), v, T(0)};
  }
  if (check == "zero-reverse") {
    need(3);
    if (!clearly_distinct(T(x[0] * x[2]), x[1])) {
      return std::nullopt;
    }
    T v = td(x[0], x[1], x[2]);
    return Outcome<T>{!(v > 0), v, T(0)};
  }
  if (check == "commutation") {
    need(3);
    T lhs = td(x[0], x[1], x[2]);
    T rhs = td(x[1], T(x[0] * x[2]), T(1));
    return Outcome<T>{differs(lhs, rhs, slack), lhs, rhs};
  }
  if (check == "symmetry") {
    need(3);
    T lhs = td(x[0], x[1], x[2]);
    T rhs = td(x[2], x[1], x[0]);
    return Outcome<T>{differs(lhs, rhs, slack), lhs, rhs};
  }
  if (check == "generalized-triangle") {
    need(5);
    T lhs = td(x[0], T(x[3] * x[4]), x[2]);
    T rhs = td(x[0], x[1], x[2]) + td(x[3], x[1], x[4]);
    return Outcome<T>{exceeds(lhs, rhs, slack), lhs, rhs};
  }
  if (check == "bound") {
    need(3);
    return bound_check(td.declared_bound, td(x[0], x[1], x[2]));
  }
  throw std::invalid_argument("unknown deviation check '" + std::string(check) + "'");
}

constexpr std::array<std::string_view, 4> kTriangleCases = {
    "triangle[x<=y<=z]", "triangle[x<=z<=y]", "triangle[y<=x<=z]", "triangle[other]"};

template <Scalar T>
std::size_t triangle_case(const T& x, const T& y, const T& z) {
  if (x <= y && y <= z) {
    return 0;
  }
  if (x <= z && z <= y) {
    return 1;
  }
  if (y <= x && x <= z) {
    return 2;
  }
  return 3;
}

template <Scalar T>
std::optional<Outcome<T>> metric_check(const MetricFn<T>& d, std::string_view check, std::span<const T> x,
                                       double slack) {
  auto need = [&](std::size_t n) {
    if (x.size() != n) {
      throw std::invalid_argument("check '" + std::string(check) + "' expects " + std::to_string(n) + " arguments");
    }
  };
  if (check == "identity") {
    need(1);
    T v = d(x[0], x[0]);
    return Outcome<T>{differs(v, T(0), slack), v, T(0)};
  }
  if (check == "separation") {
    need(2);
    if (!clearly_distinct(x[0], x[1])) {
      return std::nullopt;
    }
    T v = d(x[0], x[1]);
    return Outcome<T>{!(v > 0), v, T(0)};
  }
  if (check == "symmetry") {
    need(2);
    T lhs = d(x[0], x[1]);
    T rhs = d(x[1], x[0]);
    return Outcome<T>{differs(lhs, rhs, slack), lhs, rhs};
  }
  if (check == "triangle" || check.starts_with("triangle[")) {
    need(3);
    if (check != "triangle" && kTriangleCases[triangle_case(x[0], x[1], x[2])] != check) {
      return std::nullopt;
    }
    T lhs = d(x[0], x[2]);
    T rhs = d(x[0], x[1]) + d(x[1], x[2]);
    return Outcome<T>{exceeds(lhs, rhs, slack), lhs, rhs};
  }
  if (check == "bound") {
    need(2);
    return bound_check(d.declared_bound, d(x[0], x[1]));
  }
  throw std::invalid_argument("unknown metric check '" + std::string(check) + "'");
}

// ---------------------------------------------------------------------------
// Report assembly

template <Scalar T>
void tally(AxiomRecord& rec, std::size_t index, std::span<const T> args, const std::optional<Outcome<T>>& out) {
  if (!out) {
    return;
  }
  ++rec.checked;
  if (!out->violated) {
    return;
  }
  ++rec.violations;
  if (!rec.first_witness) {
    Witness w{rec.name, index, {}, to_token(out->lhs), to_token(out->rhs)};
    for (const auto& a : args) {
      w.args.push_back(to_token(a));
    }
    rec.first_witness = std::move(w);
  }
}

AxiomRecord named_record(std::string_view name) {
  AxiomRecord rec;
  rec.name = std::string(name);
  return rec;
}

template <Scalar T>
double slack_for(const SamplePlan& plan) {
  return is_exact<T> ? 0.0 : plan.tolerance;
}

template <Scalar T>
std::vector<T> parse_args(const Witness& w) {
  std::vector<T> out;
  out.reserve(w.args.size());
  for (const auto& a : w.args) {
    out.push_back(parse_scalar<T>(a));
  }
  return out;
}

}  // namespace

template <Scalar T>
AxiomReport check_metric_axioms(const MetricFn<T>& d, const SamplePlan& plan) {
  AxiomReport report{d.name, mode_of<T>, plan, {}};
  for (std::string_view name : {"identity", "separation", "symmetry", "triangle"}) {
    report.axioms.push_back(named_record(name));
  }
  for (auto name : kTriangleCases) {
    report.axioms.push_back(named_record(name));
  }
  if (d.declared_bound) {
    report.axioms.push_back(named_record("bound"));
  }
  auto& identity = report.axioms[0];
  auto& separation = report.axioms[1];
  auto& symmetry = report.axioms[2];
  auto& triangle = report.axioms[3];

  const double slack = slack_for<T>(plan);
  SampleStream<T> stream(plan, 3, structured_triples<T>());
  std::vector<T> s;
  while (stream.next(s)) {
    const std::size_t idx = stream.index();
    const std::span<const T> x(s);
    tally(identity, idx, x.first(1), metric_check(d, "identity", x.first(1), slack));
    tally(separation, idx, x.first(2), metric_check(d, "separation", x.first(2), slack));
    tally(symmetry, idx, x.first(2), metric_check(d, "symmetry", x.first(2), slack));
    const auto tri = metric_check(d, "triangle", x, slack);
    tally(triangle, idx, x, tri);
    tally(report.axioms[4 + triangle_case(s[0], s[1], s[2])], idx, x, tri);
    if (d.declared_bound) {
      tally(report.axioms.back(), idx, x.first(2), metric_check(d, "bound", x.first(2), slack));
    }
  }
  // Case records carry their own check name so their witnesses reproduce.
  for (std::size_t i = 4; i < 8; ++i) {
    if (auto& w = report.axioms[i].first_witness) {
      w->check = report.axioms[i].name;
    }
  }
  return report;
}

template <Scalar T>
AxiomReport check_deviation_conditions(const TriadDeviationFn<T>& td, const SamplePlan& plan) {
  AxiomReport report{td.name, mode_of<T>, plan, {}};
  for (std::string_view name : {"zero-forward", "zero-reverse", "commutation", "generalized-triangle", "symmetry"}) {
    report.axioms.push_back(named_record(name));
  }
  if (td.declared_bound) {
    report.axioms.push_back(named_record("bound"));
  }

  const double slack = slack_for<T>(plan);
  SampleStream<T> stream(plan, 5, structured_quintuples<T>());
  std::vector<T> s;
  std::array<T, 3> consistent;
  while (stream.next(s)) {
    const std::size_t idx = stream.index();
    const std::span<const T> x(s);
    consistent = {s[0], T(s[0] * s[2]), s[2]};
    const std::span<const T> fwd(consistent);
    tally(report.axioms[0], idx, fwd, deviation_check(td, "zero-forward", fwd, slack));
    tally(report.axioms[1], idx, x.first(3), deviation_check(td, "zero-reverse", x.first(3), slack));
    tally(report.axioms[2], idx, x.first(3), deviation_check(td, "commutation", x.first(3), slack));
    tally(report.axioms[3], idx, x, deviation_check(td, "generalized-triangle", x, slack));
    tally(report.axioms[4], idx, x.first(3), deviation_check(td, "symmetry", x.first(3), slack));
    if (td.declared_bound) {
      tally(report.axioms[5], idx, x.first(3), deviation_check(td, "bound", x.first(3), slack));
    }
  }
  return report;
}

template <Scalar T>
std::optional<Witness> find_counterexample(const TriadDeviationFn<T>& td, DeviationCondition condition,
                                           const SamplePlan& plan) {
  const double slack = slack_for<T>(plan);
  SampleStream<T> stream(plan, 5, structured_quintuples<T>());
  std::vector<T> s;
  auto try_check = [&](std::string_view check, std::span<const T> args) -> std::optional<Witness> {
    AxiomRecord rec = named_record(check);
    tally(rec, stream.index(), args, deviation_check(td, check, args, slack));
    return rec.first_witness;
  };
  while (stream.next(s)) {
    const std::span<const T> x(s);
    std::optional<Witness> w;
    switch (condition) {
      case DeviationCondition::Zero: {
        const std::array<T, 3> consistent = {s[0], T(s[0] * s[2]), s[2]};
        w = try_check("zero-forward", consistent);
        if (!w) {
          w = try_check("zero-reverse", x.first(3));
        }
        break;
      }
      case DeviationCondition::Commutation:
        w = try_check("commutation", x.first(3));
        break;
      case DeviationCondition::GeneralizedTriangle:
        w = try_check("generalized-triangle", x);
        break;
      case DeviationCondition::Symmetry:
        w = try_check("symmetry", x.first(3));
        break;
    }
    if (w) {
      return w;
    }
  }
  return std::nullopt;
}

template <Scalar T>
bool reproduces(const TriadDeviationFn<T>& td, const Witness& w, double tolerance) {
  const auto args = parse_args<T>(w);
  const auto out = deviation_check<T>(td, w.check, args, is_exact<T> ? 0.0 : tolerance);
  return out && out->violated && to_token(out->lhs) == w.lhs && to_token(out->rhs) == w.rhs;
}

template <Scalar T>
bool reproduces(const MetricFn<T>& d, const Witness& w, double tolerance) {
  const auto args = parse_args<T>(w);
  const auto out = metric_check<T>(d, w.check, args, is_exact<T> ? 0.0 : tolerance);
  return out && out->violated && to_token(out->lhs) == w.lhs && to_token(out->rhs) == w.rhs;
}

template <Scalar T>
std::vector<std::array<T, 3>> growth_schedule(int k_max) {
  std::vector<std::array<T, 3>> out;
  T power(1);
  for (int k = 0; k <= k_max; ++k) {
    out.push_back({T(1), power, T(1)});
    power *= 10;
  }
  return out;
}

template <Scalar T>
std::vector<std::array<T, 3>> reverse_growth_schedule(int k_max) {
  auto out = growth_schedule<T>(k_max);
  for (auto& p : out) {
    std::swap(p[0], p[1]);
  }
  return out;
}

template <Scalar T>
BoundEvidence probe_bound(const TriadDeviationFn<T>& td, std::span<const std::array<T, 3>> schedule) {
  if (schedule.empty()) {
    throw std::invalid_argument("bound probe needs a non-empty schedule");
  }
  BoundEvidence ev;
  std::optional<T> max;
  const T million(1000000);
  for (const auto& p : schedule) {
    T v = td(p[0], p[1], p[2]);
    ProbePoint point{{to_token(p[0]), to_token(p[1]), to_token(p[2])}, to_token(v), to_double(v)};
    if constexpr (!is_exact<T>) {
      if (!std::isfinite(v)) {
        ev.overflow = true;
        ev.trace.push_back(std::move(point));
        continue;
      }
    }
    ev.exceeds_one = ev.exceeds_one || v > 1;
    ev.exceeds_million = ev.exceeds_million || v > million;
    if (!max || *max < v) {
      max = v;
    }
    ev.trace.push_back(std::move(point));
  }
  if (max) {
    ev.max_value = to_token(*max);
    ev.max_approx = to_double(*max);
  } else {
    ev.max_value = "inf";
    ev.max_approx = HUGE_VAL;
  }
  return ev;
}

#define PCM_INSTANTIATE(T)                                                                                     \
  template AxiomReport check_metric_axioms<T>(const MetricFn<T>&, const SamplePlan&);                          \
  template AxiomReport check_deviation_conditions<T>(const TriadDeviationFn<T>&, const SamplePlan&);           \
  template std::optional<Witness> find_counterexample<T>(const TriadDeviationFn<T>&, DeviationCondition,       \
                                                         const SamplePlan&);                                   \
  template bool reproduces<T>(const TriadDeviationFn<T>&, const Witness&, double);                             \
  template bool reproduces<T>(const MetricFn<T>&, const Witness&, double);                                     \
  template std::vector<std::array<T, 3>> growth_schedule<T>(int);                                              \
  template std::vector<std::array<T, 3>> reverse_growth_schedule<T>(int);                                      \
  template BoundEvidence probe_bound<T>(const TriadDeviationFn<T>&, std::span<const std::array<T, 3>>);

PCM_INSTANTIATE(double)
PCM_INSTANTIATE(Rational)

#undef PCM_INSTANTIATE

}  // namespace pcm
