#include "pcm/classify.hpp"

namespace pcm {

std::string Classification::max_observed() const {
  if (growth.overflow || reverse_growth.overflow) {
    return "inf";
  }
  return growth.max_approx >= reverse_growth.max_approx ? growth.max_value : reverse_growth.max_value;
}

template <Scalar T>
Classification classify(const TriadDeviationFn<T>& td, const ProbeConfig& probe) {
  Classification out;
  out.target = td.name;
  out.conditions = check_deviation_conditions(td, probe.plan);
  for (const auto& rec : out.conditions.axioms) {
    if (rec.first_witness) {
      out.witnesses.push_back(*rec.first_witness);
    }
  }
  const auto forward = growth_schedule<T>(probe.growth_k_max);
  const auto reverse = reverse_growth_schedule<T>(probe.growth_k_max);
  out.growth = probe_bound(td, std::span<const std::array<T, 3>>(forward));
  out.reverse_growth = probe_bound(td, std::span<const std::array<T, 3>>(reverse));

  // The declared bound is a claim; a sampled violation withdraws the
  // deviation verdict along with everything else.
  out.is_deviation = out.conditions.passed();
  out.is_bounded = out.is_deviation && !out.growth.unbounded() && !out.reverse_growth.unbounded();
  out.is_indicator = out.is_bounded && !out.growth.exceeds_one && !out.reverse_growth.exceeds_one;
  return out;
}

template Classification classify<double>(const TriadDeviationFn<double>&, const ProbeConfig&);
template Classification classify<Rational>(const TriadDeviationFn<Rational>&, const ProbeConfig&);

}  // namespace pcm
