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

#include "pundit/model.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json_io.hpp"
#include "text_util.hpp"

namespace pundit {

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string role_list(const std::vector<Slot>& roles) {
  std::string out;
  for (Slot s : roles) {
    if (!out.empty()) out += ',';
    out += slot_name(s);
  }
  return out;
}

Slot slot_from_json(const json& j) {
  if (!j.is_string()) throw Error("format", "slot name must be a string");
  auto s = parse_slot(j.get<std::string>());
  if (!s) throw Error("format", "unknown slot '" + j.get<std::string>() + "'");
  return *s;
}

json lexicons_to_json(const Lexicons& lex) {
  json j = json::object();
  json lemmas = json::array();
  for (const auto& [s, l] : lex.lemmas()) lemmas.push_back({s, l});
  json verbs = json::array();
  for (const auto& v : lex.verbs()) verbs.push_back({v.lemma, v.class_concept, v.frame, role_list(v.roles)});
  json labels = json::array();
  for (const auto& [s, cands] : lex.labels()) labels.push_back({s, cands});
  json glosses = json::array();
  for (const auto& [c, g] : lex.glosses()) glosses.push_back({c, g});
  j["lemmas"] = std::move(lemmas);
  j["verbs"] = std::move(verbs);
  j["locations"] = lex.locations();
  j["glosses"] = std::move(glosses);
  j["labels"] = std::move(labels);
  return j;
}

Lexicons lexicons_from_json(const json& j, const ConceptGraph& graph) {
  Lexicons lex;
  for (const auto& row : require(j, "lemmas")) {
    lex.add_lemma(row.at(0).get<std::string>(), row.at(1).get<std::string>());
  }
  for (const auto& row : require(j, "verbs")) {
    lex.add_verb(make_verb_entry(row.at(0).get<std::string>(), row.at(1).get<std::string>(),
                                 row.at(2).get<std::string>(), row.at(3).get<std::string>()),
                 graph);
  }
  for (const auto& c : require(j, "locations")) lex.add_location(c.get<std::string>());
  for (const auto& row : require(j, "glosses")) {
    lex.add_gloss(row.at(0).get<std::string>(), row.at(1).get<std::string>());
  }
  for (const auto& row : require(j, "labels")) {
    for (const auto& c : row.at(1)) lex.add_label(row.at(0).get<std::string>(), c.get<std::string>());
  }
  return lex;
}

json patterns_to_json(const std::vector<PatternRule>& rules) {
  json out = json::array();
  for (const auto& r : rules) {
    out.push_back({{"priority", r.priority},
                   {"kind", std::string(pattern_kind_name(r.kind))},
                   {"connectors", r.connectors},
                   {"cause", r.cause_capture == 1 ? "s1" : "s2"}});
  }
  return out;
}

std::vector<PatternRule> patterns_from_json(const json& j) {
  std::vector<PatternRule> rules;
  for (const auto& o : j) {
    PatternRule r;
    r.priority = static_cast<int>(require_int(o, "priority"));
    std::string kind = require_string(o, "kind");
    if (kind == "infix") {
      r.kind = PatternKind::Infix;
    } else if (kind == "prefix") {
      r.kind = PatternKind::Prefix;
    } else if (kind == "preventive") {
      r.kind = PatternKind::Preventive;
    } else {
      throw Error("format", "unknown pattern kind '" + kind + "'");
    }
    r.connectors = require(o, "connectors").get<std::vector<std::string>>();
    if (r.connectors.empty()) throw Error("format", "pattern without connectors");
    r.cause_capture = require_string(o, "cause") == "s1" ? 1 : 2;
    r.constraints = default_constraints(r.kind, r.connectors.front());
    rules.push_back(std::move(r));
  }
  sort_rules(rules);
  return rules;
}

json rule_to_json(const PredicateRule& rule, NodeId node, const ConceptGraph& graph) {
  json templates = json::array();
  for (const auto& t : rule.templates) {
    json path = json::array();
    for (const auto& l : t.path) path.push_back(graph.label_text(l));
    json o = {{"target", std::string(slot_name(t.target))}, {"path", path}, {"support", t.support}};
    if (t.literal) {
      o["literal"] = t.value.encode();
    } else {
      o["source"] = std::string(slot_name(t.source));
    }
    templates.push_back(std::move(o));
  }
  json clauses = json::array();
  for (const auto& c : rule.clauses) clauses.push_back({{"pair", c.pair}, {"templates", c.templates}});
  return {{"node", node},
          {"exemplar_pair", rule.exemplar_pair},
          {"templates", templates},
          {"clauses", clauses}};
}

PredicateRule rule_from_json(const json& j, const std::vector<CausalityPair>& pairs,
                             const ConceptGraph& graph) {
  PredicateRule rule;
  rule.exemplar_pair = static_cast<std::size_t>(require_int(j, "exemplar_pair"));
  if (rule.exemplar_pair >= pairs.size()) throw Error("format", "rule exemplar out of range");
  rule.exemplar = pairs[rule.exemplar_pair].effect;
  for (const auto& o : require(j, "templates")) {
    RuleTemplate t;
    t.target = slot_from_json(require(o, "target"));
    if (o.contains("literal")) {
      t.literal = true;
      auto v = Value::decode(require_string(o, "literal"));
      if (!v) throw Error("format", "bad literal template value");
      t.value = *v;
    } else {
      t.source = slot_from_json(require(o, "source"));
    }
    for (const auto& l : require(o, "path")) {
      auto ref = graph.parse_label(l.get<std::string>());
      if (!ref) throw Error("format", "rule path label '" + l.get<std::string>() + "' not in ontology");
      t.path.push_back(*ref);
    }
    t.support = static_cast<int>(require_int(o, "support"));
    if (t.support < 1) throw Error("format", "template support must be positive");
    rule.templates.push_back(std::move(t));
  }
  // clause indices refer to this order
  if (!std::is_sorted(rule.templates.begin(), rule.templates.end(),
                      [](const RuleTemplate& a, const RuleTemplate& b) { return a.key() < b.key(); })) {
    throw Error("format", "rule templates out of order");
  }
  for (const auto& o : require(j, "clauses")) {
    RuleClause c;
    c.pair = static_cast<std::size_t>(require_int(o, "pair"));
    if (c.pair >= pairs.size()) throw Error("format", "rule clause pair out of range");
    c.fallback = pairs[c.pair].effect;
    for (const auto& ti : require(o, "templates")) {
      if (!ti.is_number_unsigned() || ti.get<std::size_t>() >= rule.templates.size())
        throw Error("format", "rule clause template index out of range");
      c.templates.push_back(ti.get<std::size_t>());
    }
    rule.clauses.push_back(std::move(c));
  }
  return rule;
}

}  // namespace

std::size_t Model::template_count() const {
  std::size_t n = 0;
  for (const auto& r : rules) n += r.templates.size();
  return n;
}

std::size_t constantize_unknown(std::vector<CausalityPair>& pairs, const ConceptGraph& graph) {
  std::size_t n = 0;
  auto fix = [&](Event& e) {
    for (Slot s : kAllSlots) {
      OptValue& v = e[s];
      if (v && v->is_concept() && !graph.contains(v->text)) {
        v = Value::constant(to_lower(v->text));
        ++n;
      }
    }
  };
  for (auto& p : pairs) {
    fix(p.cause);
    fix(p.effect);
  }
  return n;
}

Model train_model(std::vector<CausalityPair> pairs, std::shared_ptr<const ConceptGraph> graph,
                  Lexicons lexicons, const Config& config, std::vector<PatternRule> patterns) {
  if (pairs.empty()) throw Error("train", "no training pairs");
  Model m;
  m.config = config;
  sort_rules(patterns);
  m.patterns = std::move(patterns);
  m.graph = std::move(graph);
  m.lexicons = std::move(lexicons);
  m.constant_warnings = constantize_unknown(pairs, *m.graph);
  m.pairs = std::move(pairs);
  m.table = compute_mgen(m.graph, config.max_concept_distance);
  m.tree = build_tree(m.pairs, m.table, config.aggregator);
  m.rules.reserve(m.tree.size());
  for (const auto& node : m.tree.nodes()) {
    m.rules.push_back(learn_node_rules(node, m.pairs, *m.graph, config.max_rule_depth));
  }
  std::vector<Event> events, effects;
  for (const auto& p : m.pairs) {
    events.push_back(p.cause);
    events.push_back(p.effect);
    effects.push_back(p.effect);
  }
  m.stats = PMCIStats::accumulate(events, config.pmci_alpha);
  m.threshold = round_sig12(calibrate_threshold(m.stats, *m.graph, effects,
                                                config.generalization_bound, config.pmci_percentile,
                                                config.isa_label));
  return m;
}

std::string Model::to_json() const {
  json j = json::object();
  j["format_version"] = kModelFormatVersion;
  j["config"] = config.to_map();
  j["patterns"] = patterns_to_json(patterns);

  json triples = json::array();
  for (const auto& t : graph->triples()) triples.push_back({t.source, t.label, t.target});
  j["ontology"] = {{"fingerprint", hex64(graph->fingerprint())}, {"triples", triples}};
  j["lexicons"] = lexicons_to_json(lexicons);

  json pj = json::array();
  for (const auto& p : pairs) pj.push_back(pair_to_json(p));
  j["pairs"] = std::move(pj);

  json nodes = json::array();
  for (const auto& n : tree.nodes()) {
    nodes.push_back({{"id", n.id},
                     {"members", n.members},
                     {"children", n.children},
                     {"medoid", n.medoid},
                     {"height", n.height}});
  }
  j["tree"] = std::move(nodes);

  json rj = json::array();
  for (std::size_t i = 0; i < rules.size(); ++i) rj.push_back(rule_to_json(rules[i], i, *graph));
  j["rules"] = std::move(rj);

  json uni = json::array();
  for (const auto& [rv, c] : stats.unigrams()) {
    uni.push_back({rv.value.encode(), std::string(slot_name(rv.role)), c});
  }
  json pairs_j = json::array();
  for (const auto& [k, c] : stats.pairs()) {
    pairs_j.push_back({k.first.value.encode(), std::string(slot_name(k.first.role)),
                       k.second.value.encode(), std::string(slot_name(k.second.role)), c});
  }
  j["pmci"] = {{"alpha", real_to_json(stats.alpha())},
               {"bound", config.generalization_bound},
               {"total", stats.total()},
               {"threshold", real_to_json(threshold)},
               {"unigrams", uni},
               {"pairs", pairs_j}};
  j["warnings"] = {{"constants", constant_warnings}};
  return j.dump() + "\n";
}

Model Model::from_json(std::string_view text) {
  json j = parse_json(text, "model");
  auto version = require_int(j, "format_version");
  if (version != kModelFormatVersion) {
    throw Error("format", "model format version " + std::to_string(version) + " is not supported (expected " +
                              std::to_string(kModelFormatVersion) + ")");
  }
  try {
    Model m;
    m.config.apply(require(j, "config").get<std::map<std::string, std::string>>());
    m.patterns = patterns_from_json(require(j, "patterns"));

    std::vector<Triple> triples;
    const json& onto = require(j, "ontology");
    for (const auto& t : require(onto, "triples")) {
      triples.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(), t.at(2).get<std::string>()});
    }
    auto graph = std::make_shared<const ConceptGraph>(ConceptGraph::from_triples(std::move(triples)));
    if (hex64(graph->fingerprint()) != require_string(onto, "fingerprint")) {
      throw Error("format", "embedded ontology does not match its fingerprint");
    }
    m.graph = graph;
    m.lexicons = lexicons_from_json(require(j, "lexicons"), *graph);

    for (const auto& p : require(j, "pairs")) m.pairs.push_back(pair_from_json(p));

    std::vector<ATNode> nodes;
    for (const auto& n : require(j, "tree")) {
      ATNode node;
      node.id = static_cast<NodeId>(require_int(n, "id"));
      node.members = require(n, "members").get<std::vector<std::size_t>>();
      node.children = require(n, "children").get<std::vector<NodeId>>();
      node.medoid = static_cast<std::size_t>(require_int(n, "medoid"));
      node.height = static_cast<std::size_t>(require_int(n, "height"));
      nodes.push_back(std::move(node));
    }
    m.tree = AbstractionTree::from_nodes(std::move(nodes));
    if (m.tree.leaf_count() != m.pairs.size()) throw Error("format", "tree leaves do not match pairs");

    const json& rules = require(j, "rules");
    if (rules.size() != m.tree.size()) throw Error("format", "one rule record per tree node expected");
    for (const auto& r : rules) m.rules.push_back(rule_from_json(r, m.pairs, *graph));

    const json& pm = require(j, "pmci");
    std::map<RoleValue, long long> uni;
    for (const auto& row : require(pm, "unigrams")) {
      auto v = Value::decode(row.at(0).get<std::string>());
      if (!v) throw Error("format", "bad pmci value");
      uni[{*v, slot_from_json(row.at(1))}] = row.at(2).get<long long>();
    }
    std::map<PMCIStats::PairKey, long long> pc;
    for (const auto& row : require(pm, "pairs")) {
      auto a = Value::decode(row.at(0).get<std::string>());
      auto b = Value::decode(row.at(2).get<std::string>());
      if (!a || !b) throw Error("format", "bad pmci value");
      pc[{{*a, slot_from_json(row.at(1))}, {*b, slot_from_json(row.at(3))}}] = row.at(4).get<long long>();
    }
    m.stats = PMCIStats::from_counts(std::move(uni), std::move(pc), require_int(pm, "total"),
                                     real_from_json(require(pm, "alpha")));
    m.threshold = real_from_json(require(pm, "threshold"));
    m.constant_warnings = static_cast<std::size_t>(require_int(require(j, "warnings"), "constants"));
    m.table = compute_mgen(m.graph, m.config.max_concept_distance);
    return m;
  } catch (const json::exception& e) {
    throw Error("format", std::string("malformed model: ") + e.what());
  }
}

void Model::save(const std::string& path) const {
  std::string text = to_json();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw LoadError("cannot write model file " + path);
  out << text;
  if (!out) throw LoadError("error writing model file " + path);
}

Model Model::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open model file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace pundit
