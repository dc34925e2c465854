#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcm/classify.hpp"
#include "pcm/deviation.hpp"
#include "pcm/matrix.hpp"
#include "pcm/matrix_io.hpp"
#include "pcm/metric.hpp"
#include "pcm/report.hpp"
#include "pcm/verify.hpp"

namespace pcm::cli {

namespace {

constexpr std::size_t kTextRowCap = 10000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
decltype(auto) with_mode(NumericMode mode, F&& f) {
  if (mode == NumericMode::Rational) {
    return f.template operator()<Rational>();
  }
  return f.template operator()<double>();
}

bool contains(const std::vector<std::string_view>& names, std::string_view name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

void require_indicator(std::string_view name) {
  if (!contains(indicator_names(), name)) {
    throw UsageError("unknown indicator '" + std::string(name) + "' (expected DI, EI, I1, Kii or PL)");
  }
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    s += (i ? ", " : "") + args[i];
  }
  return s + ")";
}

std::string triple(const IndexTriple& idx) {
  return "(" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]) + ")";
}

void print_witness(std::ostream& out, const Witness& w) {
  out << "  witness " << w.check << " #" << w.sample_index << ": args " << join_args(w.args) << "  lhs " << w.lhs
      << "  rhs " << w.rhs << '\n';
}

void print_report(std::ostream& out, const AxiomReport& r, std::string_view kind) {
  const auto& p = r.plan;
  out << "target: " << r.target << " (" << kind << ", " << to_string(r.numeric) << " mode)\n";
  out << "plan: seed=" << p.seed << " count=" << p.count << " domain=[" << to_token(p.lo) << ", " << to_token(p.hi)
      << "] mode=" << to_string(p.mode) << " tolerance=" << to_token(p.tolerance)
      << " structured=" << (p.structured ? "yes" : "no") << '\n';
  out << "  " << std::left << std::setw(24) << "axiom" << std::right << std::setw(10) << "checked" << std::setw(12)
      << "violations" << '\n';
  for (const auto& a : r.axioms) {
    out << "  " << std::left << std::setw(24) << a.name << std::right << std::setw(10) << a.checked << std::setw(12)
        << a.violations << '\n';
  }
  for (const auto& a : r.axioms) {
    if (a.first_witness) {
      print_witness(out, *a.first_witness);
    }
  }
  out << "verdict: " << (r.passed() ? "pass" : "fail") << '\n';
}

std::vector<std::string> split_tokens(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  for (const auto& in : inputs) {
    std::istringstream ss(in);
    std::string tok;
    while (ss >> tok) {
      out.push_back(tok);
    }
  }
  return out;
}

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_indicator(config.indicator);
  if (config.inputs.size() != 1) {
    throw UsageError("analyze takes exactly one matrix file");
  }
  const std::string& path = config.inputs.front();
  MatrixText text;
  try {
    text = read_matrix_file(path);
  } catch (const ParseError& e) {
    err << path << ":" << e.line() << ":" << e.column() << ": " << e.what() << '\n';
    return kUsageError;
  }
  const NumericMode mode = config.mode.value_or(text.preferred_mode());
  return with_mode(mode, [&]<Scalar T>() -> int {
    std::optional<PCMatrix<T>> m;
    try {
      m.emplace(to_matrix<T>(text, config.tolerance));
    } catch (const ParseError& e) {
      err << path << ":" << e.line() << ":" << e.column() << ": " << e.what() << '\n';
      return kUsageError;
    }
    const bool consistent = is_consistent(*m, config.tolerance);
    const auto result = matrix_inconsistency(*m, config.indicator);

    if (config.format == OutputFormat::Structured) {
      emit(out, Json{{"command", "analyze"},
                     {"input", path},
                     {"indicator", config.indicator},
                     {"numeric", to_string(mode)},
                     {"tolerance", to_token(config.tolerance)},
                     {"n", m->size()},
                     {"reciprocal", m->is_reciprocal()},
                     {"consistent", consistent},
                     {"result", to_json(result)}});
      return kSuccess;
    }
    out << "matrix: " << path << " (" << m->size() << "x" << m->size() << ", " << to_string(mode) << " mode)\n";
    out << "reciprocal: " << (m->is_reciprocal() ? "yes" : "no") << '\n';
    out << "consistent: " << (consistent ? "yes" : "no") << '\n';
    out << "indicator: " << config.indicator << '\n';
    if (result.no_triads()) {
      out << "triads: none (no triads)\n";
    } else {
      out << "triads: " << result.per_triad.size() << '\n';
      std::size_t shown = 0;
      for (const auto& [idx, value] : result.per_triad) {
        if (shown++ == kTextRowCap) {
          out << "  ... truncated after " << kTextRowCap << " of " << result.per_triad.size()
              << " triads (use --out structured for all)\n";
          break;
        }
        out << "  " << std::left << std::setw(14) << triple(idx) << ' ' << to_token(value) << '\n';
      }
    }
    out << "score: " << to_token(result.score) << '\n';
    if (result.worst) {
      const auto& w = *result.worst;
      out << "worst: " << triple(w.indices) << " values (" << to_token(w.a) << ", " << to_token(w.b) << ", "
          << to_token(w.c) << ")\n";
    }
    return kSuccess;
  });
}

int cmd_axioms(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.inputs.size() != 1) {
    throw UsageError("axioms takes exactly one target");
  }
  const std::string& target = config.inputs.front();
  const NumericMode mode = config.mode.value_or(NumericMode::Float);
  return with_mode(mode, [&]<Scalar T>() -> int {
    AxiomReport report;
    std::string_view kind;
    if (contains(indicator_names(), target)) {
      report = check_deviation_conditions(named_indicator<T>(target), config.plan);
      kind = "triad deviation";
    } else if (contains(metric_names(), target)) {
      report = check_metric_axioms(named_metric<T>(target), config.plan);
      kind = "metric";
    } else if (target == "squared-difference") {
      report = check_metric_axioms(squared_difference<T>(), config.plan);
      kind = "metric";
    } else {
      throw UsageError("unknown target '" + target +
                       "' (expected DI, EI, I1, Kii, PL, discrete, euclidean, d1, ratio or squared-difference)");
    }
    if (config.format == OutputFormat::Structured) {
      emit(out, to_json(report));
    } else {
      print_report(out, report, kind);
    }
    return report.passed() ? kSuccess : kAxiomFailure;
  });
}

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.inputs.size() != 1) {
    throw UsageError("classify takes exactly one target");
  }
  const std::string& target = config.inputs.front();
  require_indicator(target);
  const NumericMode mode = config.mode.value_or(NumericMode::Float);
  return with_mode(mode, [&]<Scalar T>() -> int {
    const auto c = classify(named_indicator<T>(target), ProbeConfig{config.plan, config.growth_k_max});
    if (config.format == OutputFormat::Structured) {
      emit(out, to_json(c));
      return kSuccess;
    }
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    out << "target: " << c.target << " (" << to_string(mode) << " mode, " << config.plan.count << " samples, seed "
        << config.plan.seed << ")\n";
    out << "deviation: " << yes_no(c.is_deviation) << '\n';
    out << "bounded: " << yes_no(c.is_bounded) << " - " << c.bounded_verdict() << ", max observed "
        << c.max_observed() << '\n';
    out << "indicator: " << yes_no(c.is_indicator) << '\n';
    out << "growth (1, 10^k, 1):\n";
    for (const auto& p : c.growth.trace) {
      out << "  " << std::left << std::setw(24) << ("(" + p.args[0] + ", " + p.args[1] + ", " + p.args[2] + ")")
          << ' ' << p.value << '\n';
    }
    for (const auto& w : c.witnesses) {
      print_witness(out, w);
    }
    return kSuccess;
  });
}

int cmd_reconstruct(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto tokens = split_tokens(config.inputs);
  if (tokens.empty()) {
    throw UsageError("reconstruct needs at least one ratio");
  }
  bool any_fraction = false;
  for (const auto& t : tokens) {
    try {
      any_fraction = any_fraction || classify_token(t) == TokenKind::Fraction;
    } catch (const std::invalid_argument& e) {
      err << "malformed ratio list: " << e.what() << '\n';
      return kUsageError;
    }
  }
  const NumericMode mode =
      config.mode.value_or(any_fraction ? NumericMode::Rational : NumericMode::Float);
  return with_mode(mode, [&]<Scalar T>() -> int {
    std::vector<T> ratios;
    for (const auto& t : tokens) {
      ratios.push_back(parse_scalar<T>(t));
    }
    PCMatrix<T> m = [&] {
      try {
        return reconstruct_consistent<T>(ratios);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("malformed ratio list: ") + e.what());
      }
    }();
    if (config.format == OutputFormat::Structured) {
      Json rows = Json::array();
      for (const auto& row : m.rows()) {
        Json r = Json::array();
        for (const auto& v : row) {
          r.push_back(to_token(v));
        }
        rows.push_back(std::move(r));
      }
      emit(out, Json{{"command", "reconstruct"}, {"numeric", to_string(mode)}, {"n", m.size()}, {"rows", rows}});
    } else {
      out << format_matrix_text(m);
    }
    return kSuccess;
  });
}

int cmd_counterexample(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.inputs.size() != 1) {
    throw UsageError("counterexample takes exactly one target");
  }
  const std::string& target = config.inputs.front();
  require_indicator(target);
  const auto condition = parse_deviation_condition(config.condition);
  const NumericMode mode = config.mode.value_or(NumericMode::Float);
  return with_mode(mode, [&]<Scalar T>() -> int {
    const auto w = find_counterexample(named_indicator<T>(target), condition, config.plan);
    if (config.format == OutputFormat::Structured) {
      emit(out, Json{{"target", target},
                     {"condition", to_string(condition)},
                     {"plan", to_json(config.plan, mode)},
                     {"found", w.has_value()},
                     {"witness", w ? to_json(*w) : Json(nullptr)}});
      return kSuccess;
    }
    out << "target: " << target << ", condition: " << to_string(condition) << '\n';
    if (w) {
      print_witness(out, *w);
    } else {
      out << "no counterexample in " << config.plan.count << " samples (seed " << config.plan.seed << ")\n";
    }
    return kSuccess;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pairwise-comparisons triad inconsistency toolkit", "pcmtool"};
  app.require_subcommand(1);

  RunConfig config;
  std::string mode;
  std::string format = "text";
  std::string sampling = "uniform-log";
  bool no_structured = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "Numeric mode")->check(CLI::IsMember({"rational", "float"}));
    sub->add_option("--out", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", config.plan.count, "Random samples")->capture_default_str();
    sub->add_option("--seed", config.plan.seed, "RNG seed")->capture_default_str();
    sub->add_option("--tol", config.plan.tolerance, "Float-mode slack for inequality checks")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--lo", config.plan.lo, "Lower end of the sample domain")->capture_default_str();
    sub->add_option("--hi", config.plan.hi, "Upper end of the sample domain")->capture_default_str();
    sub->add_option("--sampling", sampling, "Sample distribution")
        ->check(CLI::IsMember({"uniform-log", "uniform-linear", "structured-grid"}));
    sub->add_flag("--no-structured", no_structured, "Skip the structured probe set");
  };

  auto* analyze = app.add_subcommand("analyze", "Triad inconsistency of a matrix file");
  analyze->add_option("matrix-file", config.inputs, "Matrix file")->required();
  analyze->add_option("--indicator", config.indicator, "DI, EI, I1, Kii or PL")->capture_default_str();
  analyze->add_option("--tol", config.tolerance, "Float-mode relative tolerance")->check(CLI::NonNegativeNumber);
  add_common(analyze);

  auto* axioms = app.add_subcommand("axioms", "Check metric axioms or triad-deviation conditions");
  axioms->add_option("target", config.inputs, "Indicator or metric name")->required();
  add_common(axioms);
  add_sampling(axioms);

  auto* classify_cmd = app.add_subcommand("classify", "Deviation / bounded / indicator classification");
  classify_cmd->add_option("target", config.inputs, "Indicator name")->required();
  classify_cmd->add_option("--kmax", config.growth_k_max, "Largest k in the (1, 10^k, 1) schedule")
      ->check(CLI::Range(0, 300));
  add_common(classify_cmd);
  add_sampling(classify_cmd);

  auto* reconstruct = app.add_subcommand("reconstruct", "Consistent matrix from adjacent ratios");
  reconstruct->add_option("ratios", config.inputs, "Ratios m_{i,i+1}")->required();
  add_common(reconstruct);

  auto* counterexample = app.add_subcommand("counterexample", "Search for a violating input");
  counterexample->add_option("target", config.inputs, "Indicator name")->required();
  counterexample->add_option("--condition", config.condition, "zero, commutation, generalized-triangle, symmetry")
      ->required();
  add_common(counterexample);
  add_sampling(counterexample);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  if (!mode.empty()) {
    config.mode = parse_numeric_mode(mode);
  }
  config.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Text;
  config.plan.mode = parse_sampling_mode(sampling);
  config.plan.structured = !no_structured;

  try {
    if (analyze->parsed()) {
      config.command = "analyze";
      return cmd_analyze(config, out, err);
    }
    config.plan.validate();
    if (axioms->parsed()) {
      config.command = "axioms";
      return cmd_axioms(config, out, err);
    }
    if (classify_cmd->parsed()) {
      config.command = "classify";
      return cmd_classify(config, out, err);
    }
    if (reconstruct->parsed()) {
      config.command = "reconstruct";
      return cmd_reconstruct(config, out, err);
    }
    config.command = "counterexample";
    return cmd_counterexample(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace pcm::cli
