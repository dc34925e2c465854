#include "pcm/report.hpp"

namespace pcm {

Json to_json(const SamplePlan& plan, NumericMode numeric) {
  return Json{{"seed", plan.seed},
              {"count", plan.count},
              {"domain", {to_token(plan.lo), to_token(plan.hi)}},
              {"mode", to_string(plan.mode)},
              {"tolerance", to_token(plan.tolerance)},
              {"structured", plan.structured},
              {"numeric", to_string(numeric)}};
}

Json to_json(const Witness& w) {
  return Json{{"check", w.check}, {"sample_index", w.sample_index}, {"args", w.args}, {"lhs", w.lhs},
              {"rhs", w.rhs}};
}

Json to_json(const AxiomReport& report) {
  Json axioms = Json::array();
  for (const auto& a : report.axioms) {
    axioms.push_back(Json{{"name", a.name},
                          {"checked", a.checked},
                          {"violations", a.violations},
                          {"witness", a.first_witness ? to_json(*a.first_witness) : Json(nullptr)}});
  }
  return Json{{"target", report.target},
              {"plan", to_json(report.plan, report.numeric)},
              {"axioms", std::move(axioms)},
              {"verdict", report.passed() ? "pass" : "fail"}};
}

Json to_json(const BoundEvidence& ev) {
  Json trace = Json::array();
  for (const auto& p : ev.trace) {
    trace.push_back(Json{{"args", p.args}, {"value", p.value}});
  }
  return Json{{"max", ev.max_value},
              {"exceeds_one", ev.exceeds_one},
              {"exceeds_1e6", ev.exceeds_million},
              {"overflow", ev.overflow},
              {"trace", std::move(trace)}};
}

Json to_json(const Classification& c) {
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses) {
    witnesses.push_back(to_json(w));
  }
  return Json{{"target", c.target},
              {"is_deviation", c.is_deviation},
              {"is_bounded", c.is_bounded},
              {"bounded_verdict", c.bounded_verdict()},
              {"is_indicator", c.is_indicator},
              {"max_observed", c.max_observed()},
              {"growth", to_json(c.growth)},
              {"reverse_growth", to_json(c.reverse_growth)},
              {"witnesses", std::move(witnesses)},
              {"conditions", to_json(c.conditions)}};
}

}  // namespace pcm
