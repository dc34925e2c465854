#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pcm/scalar.hpp"
#include "pcm/verify.hpp"

namespace pcm::cli {

enum ExitCode : int { kSuccess = 0, kAxiomFailure = 1, kUsageError = 2 };

enum class OutputFormat { Text, Structured };

struct RunConfig {
  std::string command;              // analyze | axioms | classify | reconstruct | counterexample
  std::vector<std::string> inputs;  // matrix path, target name, or ratio tokens
  std::string indicator = "Kii";
  std::optional<NumericMode> mode;  // unset: inferred from input (analyze, reconstruct) or float
  double tolerance = 1e-12;
  SamplePlan plan;
  std::string condition;
  int growth_k_max = 12;
  OutputFormat format = OutputFormat::Text;
};

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_axioms(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_reconstruct(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_counterexample(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs the selected command.
/// Exit codes: 0 success, 1 axiom failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcm::cli
