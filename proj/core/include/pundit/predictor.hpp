/** Copyright 2026 The Pundit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PUNDIT_PREDICTOR_HPP_
#define PUNDIT_PREDICTOR_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "pundit/abstree.hpp"
#include "pundit/event.hpp"
#include "pundit/lexicon.hpp"
#include "pundit/model.hpp"

namespace pundit {

struct Prediction {
  Event effect;
  NodeId node_id = 0;
  double similarity = 0;
  int support = 0;  // 0 for pure fallback
  double pmci = 0;
  std::string rendered;
  bool pruned = false;
};

struct PredictOptions {
  std::size_t top_n = 10;
  bool include_pruned = false;  // keep pruned items (flagged) in the ranking
};

// "[actor_attr] [actor] will [not] <action> [object_attr] [object]
// [with instrument] [in location]" with absent parts omitted.
std::string render(const Event& e, const Lexicons& lex);

// Every deduplicated candidate effect, ranked and scored; nothing dropped.
std::vector<Prediction> rank_candidates(const Model& model, const Event& cause);

// Ranked predictions for a structured cause. Throws Error("model") when the
// model is untrained.
std::vector<Prediction> predict(const Model& model, const Event& cause, const PredictOptions& opts = {});

// Structures `headline` as a single event with the model's lexicons.
// Throws Error("no action") when that fails.
Event structure_input(const Model& model, std::string_view headline, const Date& date = {});

std::vector<Prediction> predict(const Model& model, std::string_view headline,
                                const PredictOptions& opts = {});

// One-line JSON with keys rendered, effect, node_id, similarity, support,
// pmci, pruned.
std::string prediction_json(const Prediction& p);

}  // namespace pundit

#endif  // PUNDIT_PREDICTOR_HPP_
