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

#ifndef PUNDIT_RULESET_HPP_
#define PUNDIT_RULESET_HPP_

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pundit/abstree.hpp"
#include "pundit/event.hpp"
#include "pundit/kgraph.hpp"

namespace pundit {

// One way of producing an effect slot value: either a literal value, or the
// cause's `source` slot pushed through `path` (empty path = copy).
struct RuleTemplate {
  Slot target = Slot::Action;
  bool literal = false;
  Slot source = Slot::Action;  // used when !literal
  Value value;                 // used when literal
  LabelPath path;
  int support = 1;

  // Ordering key without the support.
  auto key() const { return std::tie(target, literal, source, value, path); }
  bool operator==(const RuleTemplate&) const = default;
};

// The part of a node's rule learned from one member pair: the templates
// that pair exhibits, and its effect for slots those templates leave open.
struct RuleClause {
  std::size_t pair = 0;
  std::vector<std::size_t> templates;  // indices into PredicateRule::templates, ascending
  Event fallback;
  bool operator==(const RuleClause&) const = default;
};

struct PredicateRule {
  std::vector<RuleTemplate> templates;  // sorted by key(); support tallied over members
  std::vector<RuleClause> clauses;      // one per member, in member order
  std::size_t exemplar_pair = 0;        // medoid pair
  Event exemplar;                       // its effect; the sole fallback when clauses is empty

  std::vector<const RuleTemplate*> for_slot(Slot s) const;
  bool operator==(const PredicateRule&) const = default;
};

// All simple undirected label sequences of length <= max_depth from `from`
// to `to`. Equal values give {[]}; other constants give {}.
std::set<LabelPath> find_predicate_paths(const ConceptGraph& graph, const Value& from,
                                         const Value& to, int max_depth);

// Every concept reached from `entity` by following `path` label by label
// (inverse labels walk edges backwards). Empty path gives {entity}.
std::set<Value> follow_path_objects(const ConceptGraph& graph, const Value& entity,
                                    const LabelPath& path);

PredicateRule learn_node_rules(const ATNode& node, const std::vector<CausalityPair>& pairs,
                               const ConceptGraph& graph, int max_depth);

struct RuleCandidate {
  Event effect;
  int support = 0;  // minimum template support; 0 when every slot fell back

  bool operator==(const RuleCandidate&) const = default;
};

// Quantities in an exemplar attribute ("150000") become "[number]".
std::optional<std::string> abstract_attr(const std::optional<std::string>& attr);

// Candidate effects for `e`, clause by clause: each slot takes its
// templates' outputs, or the clause's fallback value when it has no template
// or only templates whose cause slot is absent in `e`. A clause whose
// templates for some slot yield nothing cannot be applied. Per-clause
// cross-products are merged (duplicates keep the higher support) and capped
// at `cap` entries by descending support.
std::vector<RuleCandidate> apply_rule(const PredicateRule& rule, const Event& e,
                                      const ConceptGraph& graph, std::size_t cap = 32);

}  // namespace pundit

#endif  // PUNDIT_RULESET_HPP_
