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

#include "pundit/ruleset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pundit/extractor.hpp"
#include "text_util.hpp"

namespace pundit {

std::vector<const RuleTemplate*> PredicateRule::for_slot(Slot s) const {
  std::vector<const RuleTemplate*> out;
  for (const auto& t : templates) {
    if (t.target == s) out.push_back(&t);
  }
  return out;
}

namespace {

void paths_dfs(const ConceptGraph& graph, ConceptId cur, ConceptId goal, int max_depth,
               LabelPath& path, std::vector<bool>& visited, std::set<LabelPath>& out) {
  for (const auto& [label, next] : graph.adjacency(cur, Direction::Undirected)) {
    if (visited[next]) continue;
    path.push_back(label);
    if (next == goal) {
      out.insert(path);
    } else if (static_cast<int>(path.size()) < max_depth) {
      visited[next] = true;
      paths_dfs(graph, next, goal, max_depth, path, visited, out);
      visited[next] = false;
    }
    path.pop_back();
  }
}

}  // namespace

std::set<LabelPath> find_predicate_paths(const ConceptGraph& graph, const Value& from,
                                         const Value& to, int max_depth) {
  std::set<LabelPath> out;
  if (from == to) {
    out.insert(LabelPath{});
    return out;
  }
  if (!from.is_concept() || !to.is_concept() || max_depth <= 0) return out;
  auto a = graph.find(from.text), b = graph.find(to.text);
  if (!a || !b) return out;
  LabelPath path;
  std::vector<bool> visited(graph.concept_count(), false);
  visited[*a] = true;
  paths_dfs(graph, *a, *b, max_depth, path, visited, out);
  return out;
}

std::set<Value> follow_path_objects(const ConceptGraph& graph, const Value& entity,
                                    const LabelPath& path) {
  if (path.empty()) return {entity};
  if (!entity.is_concept()) return {};
  auto start = graph.find(entity.text);
  if (!start) return {};
  std::vector<ConceptId> frontier{*start};
  for (const LabelRef& l : path) {
    std::vector<ConceptId> next;
    for (ConceptId c : frontier) {
      for (const auto& arc : l.inverse ? graph.in_arcs(c) : graph.out_arcs(c)) {
        if (arc.label == l.id) next.push_back(arc.node);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::set<Value> out;
  for (ConceptId c : frontier) out.insert(Value::of_concept(graph.name(c)));
  return out;
}

PredicateRule learn_node_rules(const ATNode& node, const std::vector<CausalityPair>& pairs,
                               const ConceptGraph& graph, int max_depth) {
  using Key = std::tuple<Slot, Slot, LabelPath>;  // target, source, path
  std::map<Key, int> tally;
  std::vector<std::set<Key>> per_member;
  for (std::size_t m : node.members) {
    const CausalityPair& p = pairs.at(m);
    std::set<Key> found;  // one count per (pair, template)
    for (Slot j : kAllSlots) {
      const OptValue& y = p.effect[j];
      if (!y) continue;
      for (Slot i : kAllSlots) {
        const OptValue& x = p.cause[i];
        if (!x) continue;
        for (auto& path : find_predicate_paths(graph, *x, *y, max_depth)) {
          found.insert({j, i, path});
        }
      }
    }
    for (const auto& k : found) ++tally[k];
    per_member.push_back(std::move(found));
  }
  PredicateRule rule;
  for (const auto& [k, support] : tally) {
    RuleTemplate t;
    t.target = std::get<0>(k);
    t.source = std::get<1>(k);
    t.path = std::get<2>(k);
    t.support = support;
    rule.templates.push_back(std::move(t));
  }
  // tally is keyed in (target, source, path) order, which is key() order for
  // non-literal templates, so indices line up with the map position
  std::map<Key, std::size_t> position;
  for (const auto& [k, support] : tally) position.emplace(k, position.size());
  for (std::size_t i = 0; i < node.members.size(); ++i) {
    RuleClause c;
    c.pair = node.members[i];
    c.fallback = pairs.at(c.pair).effect;
    for (const auto& k : per_member[i]) c.templates.push_back(position.at(k));
    std::sort(c.templates.begin(), c.templates.end());
    rule.clauses.push_back(std::move(c));
  }
  rule.exemplar_pair = node.medoid;
  rule.exemplar = pairs.at(node.medoid).effect;
  return rule;
}

std::optional<std::string> abstract_attr(const std::optional<std::string>& attr) {
  if (!attr) return attr;
  std::istringstream in(*attr);
  std::string word, out;
  while (in >> word) {
    if (!out.empty()) out += ' ';
    out += is_number_token(to_lower(word)) ? "[number]" : word;
  }
  return out;
}

namespace {

struct Choice {
  OptValue value;
  int support = 0;
  bool from_template = false;
};

// Per-slot choices of one clause, or nullopt when the clause cannot apply.
std::optional<std::array<std::vector<Choice>, kSlotCount>> clause_choices(
    const PredicateRule& rule, const std::vector<std::size_t>& templates, const Event& fallback,
    const Event& e, const ConceptGraph& graph, std::size_t cap) {
  std::array<std::vector<Choice>, kSlotCount> choices;
  for (Slot j : kAllSlots) {
    std::map<Value, int> best;
    bool active = false;
    for (std::size_t ti : templates) {
      const RuleTemplate& t = rule.templates.at(ti);
      if (t.target != j) continue;
      if (t.literal) {
        active = true;
        int& s = best[t.value];
        s = std::max(s, t.support);
        continue;
      }
      const OptValue& src = e[t.source];
      if (!src) continue;  // inert, not a failure
      active = true;
      for (const auto& v : follow_path_objects(graph, *src, t.path)) {
        int& s = best[v];
        s = std::max(s, t.support);
      }
    }
    auto& list = choices[index(j)];
    if (!active) {
      list.push_back({fallback[j], 0, false});
      continue;
    }
    if (best.empty()) return std::nullopt;
    for (const auto& [v, s] : best) list.push_back({v, s, true});
    std::stable_sort(list.begin(), list.end(),
                     [](const Choice& a, const Choice& b) { return a.support > b.support; });
    if (list.size() > cap) list.resize(cap);
  }
  return choices;
}

}  // namespace

std::vector<RuleCandidate> apply_rule(const PredicateRule& rule, const Event& e,
                                      const ConceptGraph& graph, std::size_t cap) {
  cap = std::max<std::size_t>(cap, 1);
  std::vector<RuleClause> implicit;
  const std::vector<RuleClause>* clauses = &rule.clauses;
  if (rule.clauses.empty()) {
    RuleClause all;
    all.pair = rule.exemplar_pair;
    all.fallback = rule.exemplar;
    for (std::size_t i = 0; i < rule.templates.size(); ++i) all.templates.push_back(i);
    implicit.push_back(std::move(all));
    clauses = &implicit;
  }

  std::vector<RuleCandidate> out;
  std::map<Event, std::size_t> seen;  // effect -> position in out
  for (const RuleClause& clause : *clauses) {
    auto maybe = clause_choices(rule, clause.templates, clause.fallback, e, graph, cap);
    if (!maybe) continue;
    auto& choices = *maybe;

    // Bound the enumerated product; the lowest-support tails go first.
    constexpr std::size_t kMaxProduct = 1 << 16;
    auto product = [&] {
      std::size_t p = 1;
      for (const auto& l : choices) p *= l.size();
      return p;
    };
    while (product() > kMaxProduct) {
      auto it = std::max_element(choices.begin(), choices.end(),
                                 [](const auto& a, const auto& b) { return a.size() < b.size(); });
      it->resize((it->size() + 1) / 2);
    }

    std::array<std::size_t, kSlotCount> idx{};
    while (true) {
      RuleCandidate c;
      int support = -1;
      for (Slot j : kAllSlots) {
        const Choice& ch = choices[index(j)][idx[index(j)]];
        c.effect[j] = ch.value;
        if (ch.from_template) support = support < 0 ? ch.support : std::min(support, ch.support);
      }
      c.support = std::max(support, 0);
      c.effect.actor_attr = abstract_attr(clause.fallback.actor_attr);
      c.effect.object_attr = abstract_attr(clause.fallback.object_attr);
      c.effect.time = e.time;
      c.effect.polarity = clause.fallback.polarity;
      auto [it, fresh] = seen.emplace(c.effect, out.size());
      if (fresh) {
        out.push_back(std::move(c));
      } else if (out[it->second].support < c.support) {
        out[it->second].support = c.support;
      }

      std::size_t k = kSlotCount;
      while (k-- > 0) {
        if (++idx[k] < choices[k].size()) break;
        idx[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RuleCandidate& a, const RuleCandidate& b) { return a.support > b.support; });
  if (out.size() > cap) out.resize(cap);
  return out;
}

}  // namespace pundit
