#pragma once

// Structured (JSON) documents for reports. Field names are stable; values
// that are numbers in the toolkit's sense are emitted as exact tokens
// (strings) so rational results survive serialization.

#include <nlohmann/json.hpp>

#include "pcm/classify.hpp"
#include "pcm/deviation.hpp"
#include "pcm/matrix.hpp"
#include "pcm/verify.hpp"

namespace pcm {

using Json = nlohmann::ordered_json;

Json to_json(const SamplePlan& plan, NumericMode numeric);
Json to_json(const Witness& w);
Json to_json(const AxiomReport& report);
Json to_json(const BoundEvidence& ev);
Json to_json(const Classification& c);

template <Scalar T>
Json to_json(const Triad<T>& t) {
  return Json{{"indices", t.indices}, {"values", {to_token(t.a), to_token(t.b), to_token(t.c)}}};
}

template <Scalar T>
Json to_json(const MatrixInconsistency<T>& mi) {
  Json per = Json::array();
  for (const auto& [idx, value] : mi.per_triad) {
    per.push_back(Json{{"indices", idx}, {"value", to_token(value)}});
  }
  return Json{{"score", to_token(mi.score)},
              {"no_triads", mi.no_triads()},
              {"worst", mi.worst ? to_json(*mi.worst) : Json(nullptr)},
              {"per_triad", std::move(per)}};
}

}  // namespace pcm
