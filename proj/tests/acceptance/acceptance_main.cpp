// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runs the library in-process and the pcmtool binary as a child.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pcm/deviation.hpp"
#include "pcm/matrix.hpp"
#include "pcm/metric.hpp"
#include "pcm/verify.hpp"
#include "support/oracles.hpp"

#ifndef PCM_TOOL_PATH
#error "PCM_TOOL_PATH must point at the pcmtool binary"
#endif

using pcm::Rational;
using pcm::testing::q;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "\n      failed: " << what;
    }
  }
};

struct ChildResult {
  int status = -1;
  std::string out;
};

ChildResult run_tool(const std::string& args) {
  const std::string cmd = std::string("\"") + PCM_TOOL_PATH + "\" " + args + " 2>/dev/null";
  ChildResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    return r;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    r.out.append(buf, n);
  }
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s >= limit_s) {
    c.expect(false, "took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s");
  }
  char timing[64];
  if (limit_s > 0) {
    std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", s, limit_s);
  } else {
    std::snprintf(timing, sizeof timing, "%.3f s", s);
  }
  std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << timing << ")"
            << c.notes.str() << std::endl;
  failures += c.ok ? 0 : 1;
}

pcm::SamplePlan plan(std::size_t count, std::uint64_t seed) {
  pcm::SamplePlan p;
  p.count = count;
  p.seed = seed;
  return p;
}

void criterion_pl_values(Check& c) {
  const Rational rhs = pcm::pl<Rational>(1, 3, 5) + pcm::pl<Rational>(1, 3, 2);
  const Rational lhs = pcm::pl<Rational>(1, 2, 5);
  c.expect(rhs == q(13, 30), "PL(1,3,5) + PL(1,3,2) == 13/30, got " + pcm::to_token(rhs));
  c.expect(lhs == q(9, 10), "PL(1,2,5) == 9/10, got " + pcm::to_token(lhs));
  c.expect(lhs == pcm::testing::oracle_pl(1, 2, 5), "PL(1,2,5) agrees with oracle");
  c.expect(rhs == pcm::testing::oracle_pl(1, 3, 5) + pcm::testing::oracle_pl(1, 3, 2), "sum agrees with oracle");
  c.expect(lhs > rhs, "generalized triangle violated");
}

void criterion_kii_forms(Check& c) {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  for (int i = 0; i < 1000000; ++i) {
    const double a = pcm::testing::log_uniform(rng, 1e-3, 1e3);
    const double b = pcm::testing::log_uniform(rng, 1e-3, 1e3);
    const double x = pcm::testing::log_uniform(rng, 1e-3, 1e3);
    const double f1 = pcm::kii(a, b, x, pcm::KiiForm::MinAbs);
    const double f2 = pcm::kii(a, b, x, pcm::KiiForm::OneMinusMin);
    const double f3 = pcm::kii(a, b, x, pcm::KiiForm::Exponential);
    worst = std::max({worst, std::abs(f1 - f2), std::abs(f1 - f3), std::abs(f2 - f3)});
  }
  c.notes << "\n      max discrepancy " << worst;
  c.expect(worst <= 1e-12, "three Kii forms agree within 1e-12");
}

template <pcm::Scalar T>
void ratio_metric_in_mode(Check& c) {
  const auto report = pcm::check_metric_axioms(pcm::named_metric<T>("ratio"), plan(100000, 7));
  const std::string mode(pcm::to_string(pcm::mode_of<T>));
  for (const auto& a : report.axioms) {
    c.expect(a.violations == 0, mode + " " + a.name + " has " + std::to_string(a.violations) + " violations");
    c.expect(a.checked > 0, mode + " " + a.name + " never exercised");
  }
  c.notes << "\n      " << mode << ":";
  for (const char* name : {"triangle[x<=y<=z]", "triangle[x<=z<=y]", "triangle[y<=x<=z]"}) {
    const auto* rec = report.find(name);
    c.expect(rec && rec->checked > 0, mode + " " + name + " exercised");
    c.notes << ' ' << name << '=' << (rec ? rec->checked : 0);
  }
  c.expect(report.find("bound") != nullptr, "declared bound checked");
}

void criterion_ratio_metric(Check& c) {
  ratio_metric_in_mode<double>(c);
  ratio_metric_in_mode<Rational>(c);
}

void criterion_named_family(Check& c) {
  for (std::string_view name : pcm::indicator_names()) {
    const auto report = pcm::check_deviation_conditions(pcm::named_indicator<Rational>(name), plan(100000, 11));
    const bool should_pass = name != "PL";
    c.expect(report.passed() == should_pass,
             std::string(name) + (should_pass ? " passes all conditions" : " fails a condition"));
    if (!should_pass) {
      const auto* tri = report.find("generalized-triangle");
      const bool found = tri && tri->first_witness;
      c.expect(found, "PL generalized-triangle witness present");
      if (found) {
        const auto& w = *tri->first_witness;
        c.expect(w.args == std::vector<std::string>{"1", "3", "5", "1", "2"}, "PL witness is (1, 3, 5, 1, 2)");
        c.expect(w.lhs == "9/10" && w.rhs == "13/30", "PL witness values 9/10 > 13/30");
        c.expect(pcm::reproduces(pcm::named_indicator<Rational>("PL"), w), "PL witness reproduces");
      }
    }
  }
}

void criterion_round_trip(Check& c) {
  std::mt19937_64 rng(5);
  for (auto name : pcm::metric_names()) {
    const auto dr = pcm::named_metric<Rational>(name);
    const auto df = pcm::named_metric<double>(name);
    const auto rr = pcm::induce_metric_from_deviation(pcm::induce_deviation(dr));
    const auto rf = pcm::induce_metric_from_deviation(pcm::induce_deviation(df));
    std::size_t exact_miss = 0;
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const auto x = pcm::testing::small_rational(rng, 1000);
      const auto y = pcm::testing::small_rational(rng, 1000);
      exact_miss += rr(x, y) == dr(x, y) ? 0 : 1;
      const double u = pcm::testing::log_uniform(rng, 1e-3, 1e3);
      const double v = pcm::testing::log_uniform(rng, 1e-3, 1e3);
      worst = std::max(worst, std::abs(rf(u, v) - df(u, v)));
    }
    c.expect(exact_miss == 0, std::string(name) + " rational round trip exact");
    c.expect(worst <= 1e-15, std::string(name) + " float round trip within 1e-15");
  }
}

void criterion_growth(Check& c) {
  const auto kii = pcm::named_indicator<Rational>("Kii");
  Rational power = 1;
  for (int k = 0; k <= 12; ++k) {
    const Rational v = kii(1, power, 1);
    c.expect(v == 1 - 1 / power, "Kii(1, 10^" + std::to_string(k) + ", 1) == 1 - 10^-" + std::to_string(k));
    c.expect(v < 1, "Kii stays below 1 at k = " + std::to_string(k));
    power *= 10;
  }
  const auto sched = pcm::growth_schedule<Rational>(12);
  const auto ev = pcm::probe_bound(kii, std::span<const std::array<Rational, 3>>(sched));
  c.expect(ev.trace.size() == 13 && !ev.exceeds_one, "probe_bound on Kii never exceeds 1");
  c.expect(ev.max_value == pcm::to_token(1 - 1 / Rational(1000000000000)), "probe_bound max is 1 - 10^-12");
  const auto pl_sched = pcm::growth_schedule<double>(12);
  const auto pl_ev = pcm::probe_bound(pcm::named_indicator<double>("PL"), std::span<const std::array<double, 3>>(pl_sched));
  c.expect(pl_ev.trace[6].approx < 1e6 && pl_ev.trace[7].approx > 1e6, "PL first exceeds 10^6 at k = 7");
  const double pl7 = pcm::pl<double>(1, 1e7, 1);
  c.notes << "\n      PL(1, 10^7, 1) = " << pcm::to_token(pl7);
  c.expect(pl7 > 1e6, "PL(1, 10^7, 1) > 10^6");
  c.expect(pcm::pl<Rational>(1, 10000000, 1) > 1000000, "PL(1, 10^7, 1) > 10^6 exactly");
}

void criterion_consistent_matrices(Check& c) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> dim(2, 8);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = dim(rng);
    std::vector<Rational> w;
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(pcm::testing::small_rational(rng, 100));
    }
    const auto m = pcm::from_weights(pcm::Weights<Rational>(w));
    c.expect(m.rows() == pcm::testing::oracle_ratio_matrix(w), "from_weights matches w_i / w_j");
    for (auto name : pcm::indicator_names()) {
      c.expect(pcm::matrix_inconsistency(m, name).score == 0, std::string(name) + " score is 0");
    }
    const auto ratios = pcm::adjacent_ratios(m);
    const auto rebuilt = pcm::reconstruct_consistent<Rational>(ratios);
    c.expect(pcm::is_consistent(rebuilt), "reconstruction is consistent");
    c.expect(rebuilt == m, "weights -> ratios -> matrix is exact");
    c.expect(pcm::adjacent_ratios(rebuilt) == ratios, "ratios -> matrix -> ratios is exact");
    if (!c.ok) {
      return;
    }
  }
}

void criterion_negative_control(Check& c) {
  const auto report = pcm::check_metric_axioms(pcm::squared_difference<Rational>(), plan(1000, 3));
  c.expect(!report.passed(), "squared difference is rejected");
  const auto* tri = report.find("triangle");
  const bool found = tri && tri->first_witness;
  c.expect(found, "triangle witness present");
  if (found) {
    const auto& w = *tri->first_witness;
    c.expect(w.args == std::vector<std::string>{"1", "2", "3"}, "witness is (1, 2, 3)");
    c.expect(w.lhs == "4" && w.rhs == "2", "f(1,3) = 4 > f(1,2) + f(2,3) = 2");
  }
  const int pl = run_tool("axioms PL --samples 100000").status;
  const int kii = run_tool("axioms Kii --samples 100000").status;
  c.expect(pl == 1, "pcmtool axioms PL exits 1, got " + std::to_string(pl));
  c.expect(kii == 0, "pcmtool axioms Kii exits 0, got " + std::to_string(kii));
}

void criterion_determinism(Check& c) {
  const std::string args = "axioms Kii --samples 100000 --seed 42 --out structured";
  const auto a = run_tool(args);
  const auto b = run_tool(args);
  c.expect(a.status == 0 && b.status == 0, "both runs exit 0");
  c.expect(!a.out.empty(), "output is non-empty");
  c.expect(a.out == b.out, "outputs are byte-identical");
}

}  // namespace

int main() {
  criterion(1, "PL generalized-triangle counterexample values are exact", 1, criterion_pl_values);
  criterion(2, "Kii forms agree on 10^6 log-uniform triads", 30, criterion_kii_forms);
  criterion(3, "bounded ratio metric satisfies every axiom", 10, criterion_ratio_metric);
  criterion(4, "DI, EI, I1, Kii are deviations and PL is not", 60, criterion_named_family);
  criterion(5, "metric -> deviation -> metric round trip", 0, criterion_round_trip);
  criterion(6, "Kii bounded below 1 along growth, PL unbounded", 1, criterion_growth);
  criterion(7, "consistent matrices score 0 and reconstruct exactly", 0, criterion_consistent_matrices);
  criterion(8, "squared-difference negative control and exit codes", 0, criterion_negative_control);
  criterion(9, "structured axiom report is deterministic", 0, criterion_determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
