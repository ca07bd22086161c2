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

#include "pundit/predictor.hpp"

#include <algorithm>
#include <map>

#include "json_io.hpp"
#include "text_util.hpp"

namespace pundit {

namespace {

std::string display(const Value& v) {
  if (v.is_constant()) return v.text;
  // NorthCarolina -> north carolina, police_officer -> police officer
  std::string s;
  for (std::size_t i = 0; i < v.text.size(); ++i) {
    char c = v.text[i];
    bool upper = c >= 'A' && c <= 'Z';
    if (upper && i > 0 && v.text[i - 1] >= 'a' && v.text[i - 1] <= 'z') s += ' ';
    s += c == '_' ? ' ' : c;
  }
  return to_lower(s);
}

std::string action_surface(const Value& v, const Lexicons& lex) {
  if (v.is_concept()) {
    if (const std::string* s = lex.surface_of_class(v.text)) return *s;
  }
  return display(v);
}

}  // namespace

std::string render(const Event& e, const Lexicons& lex) {
  std::vector<std::string> parts;
  if (e.actor_attr) parts.push_back(*e.actor_attr);
  if (e.actor()) parts.push_back(display(*e.actor()));
  parts.push_back("will");
  if (!e.polarity) parts.push_back("not");
  if (e.action()) parts.push_back(action_surface(*e.action(), lex));
  if (e.object_attr) parts.push_back(*e.object_attr);
  if (e.object()) parts.push_back(display(*e.object()));
  if (e.instrument()) parts.push_back("with " + display(*e.instrument()));
  if (e.location()) parts.push_back("in " + display(*e.location()));
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::vector<Prediction> rank_candidates(const Model& model, const Event& cause) {
  if (!model.trained()) throw Error("model", "model is not trained");
  const Config& cfg = model.config;
  auto candidates = propagate(model.tree, model.pairs, cause, model.table, cfg.aggregator);

  // Identical effects from several nodes keep the best (similarity, support).
  std::vector<Prediction> ranked;
  std::map<Event, std::size_t> seen;
  for (const auto& c : candidates) {
    for (auto& rc : apply_rule(model.rules.at(c.node), cause, *model.graph,
                               static_cast<std::size_t>(cfg.max_effect_candidates))) {
      auto it = seen.find(rc.effect);
      if (it != seen.end()) {
        Prediction& old = ranked[it->second];
        if (c.similarity > old.similarity ||
            (c.similarity == old.similarity && rc.support > old.support)) {
          old.node_id = c.node;
          old.similarity = c.similarity;
          old.support = rc.support;
        }
        continue;
      }
      Prediction p;
      p.effect = rc.effect;
      p.node_id = c.node;
      p.similarity = c.similarity;
      p.support = rc.support;
      p.rendered = render(rc.effect, model.lexicons);
      seen.emplace(rc.effect, ranked.size());
      ranked.push_back(std::move(p));
    }
  }
  std::sort(ranked.begin(), ranked.end(), [](const Prediction& a, const Prediction& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    if (a.support != b.support) return a.support > b.support;
    if (a.rendered != b.rendered) return a.rendered < b.rendered;
    return a.effect < b.effect;
  });

  std::vector<Event> effects;
  effects.reserve(ranked.size());
  for (const auto& p : ranked) effects.push_back(p.effect);
  auto fr = filter(effects, model.threshold, model.stats, *model.graph, cfg.generalization_bound,
                   cfg.isa_label);
  for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i].pmci = fr.scores[i];
  for (std::size_t i : fr.pruned) ranked[i].pruned = true;
  return ranked;
}

std::vector<Prediction> predict(const Model& model, const Event& cause, const PredictOptions& opts) {
  auto ranked = rank_candidates(model, cause);
  std::vector<Prediction> out;
  for (auto& p : ranked) {
    if (out.size() >= opts.top_n) break;
    if (p.pruned && !opts.include_pruned) continue;
    out.push_back(std::move(p));
  }
  return out;
}

Event structure_input(const Model& model, std::string_view headline, const Date& date) {
  StructureContext ctx{std::string(headline), {}};
  Event e = structure_event(headline, date, model.lexicons, *model.graph, ctx);
  apply_single_event_heuristics(e, model.lexicons, *model.graph);
  return e;
}

std::vector<Prediction> predict(const Model& model, std::string_view headline,
                                const PredictOptions& opts) {
  if (!model.trained()) throw Error("model", "model is not trained");
  return predict(model, structure_input(model, headline), opts);
}

std::string prediction_json(const Prediction& p) {
  json j = {{"rendered", p.rendered},
            {"effect", event_to_json(p.effect)},
            {"node_id", p.node_id},
            {"similarity", real_to_json(p.similarity)},
            {"support", p.support},
            {"pmci", real_to_json(p.pmci)},
            {"pruned", p.pruned}};
  return j.dump();
}

}  // namespace pundit
