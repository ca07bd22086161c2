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

#ifndef PUNDIT_MODEL_HPP_
#define PUNDIT_MODEL_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pundit/abstree.hpp"
#include "pundit/config.hpp"
#include "pundit/event.hpp"
#include "pundit/extractor.hpp"
#include "pundit/kgraph.hpp"
#include "pundit/lexicon.hpp"
#include "pundit/plausibility.hpp"
#include "pundit/ruleset.hpp"

namespace pundit {

inline constexpr int kModelFormatVersion = 1;

// A trained predictor. The ontology and lexicons are embedded so a saved
// model is self-contained; the generalization table is rebuilt on load.
struct Model {
  Config config;
  std::vector<PatternRule> patterns;
  std::shared_ptr<const ConceptGraph> graph = std::make_shared<ConceptGraph>();
  GenPathTable table;
  Lexicons lexicons;
  std::vector<CausalityPair> pairs;
  AbstractionTree tree;
  std::vector<PredicateRule> rules;  // indexed by node id
  PMCIStats stats;
  double threshold = 0;
  std::size_t constant_warnings = 0;  // concept values missing from the ontology

  bool trained() const { return !pairs.empty() && !tree.empty(); }
  std::size_t template_count() const;

  // Canonical single-document JSON; save(load(x)) is byte-identical.
  std::string to_json() const;
  static Model from_json(std::string_view text);

  void save(const std::string& path) const;
  static Model load(const std::string& path);
};

// Concept values unknown to `graph` become lower-cased constants. Returns
// the number of values rewritten.
std::size_t constantize_unknown(std::vector<CausalityPair>& pairs, const ConceptGraph& graph);

// Builds the generalization table, tree, per-node rules, PMCI statistics
// and threshold. Throws Error("train") on zero pairs.
Model train_model(std::vector<CausalityPair> pairs, std::shared_ptr<const ConceptGraph> graph,
                  Lexicons lexicons, const Config& config,
                  std::vector<PatternRule> patterns = default_rules());

}  // namespace pundit

#endif  // PUNDIT_MODEL_HPP_
