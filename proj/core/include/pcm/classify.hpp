#pragma once

#include <string>
#include <vector>

#include "pcm/deviation.hpp"
#include "pcm/verify.hpp"

namespace pcm {

struct ProbeConfig {
  SamplePlan plan;
  int growth_k_max = 12;
};

/// Statistical verdict on where a function sits in the hierarchy
/// deviation > bounded deviation > inconsistency indicator (bounded by 1).
/// Boundedness is judged from growth-schedule evidence only; values above
/// 10^6 (or float overflow) count as evidence of unboundedness.
struct Classification {
  std::string target;
  bool is_deviation = false;
  bool is_bounded = false;
  bool is_indicator = false;
  AxiomReport conditions;
  BoundEvidence growth;          // (1, 10^k, 1)
  BoundEvidence reverse_growth;  // (10^k, 1, 1)
  std::vector<Witness> witnesses;

  std::string bounded_verdict() const { return is_bounded ? "bounded (evidence)" : "unbounded (evidence)"; }
  std::string max_observed() const;
};

template <Scalar T>
Classification classify(const TriadDeviationFn<T>& td, const ProbeConfig& probe);

}  // namespace pcm
