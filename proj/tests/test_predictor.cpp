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

#include <random>

#include "doctest.h"
#include "pundit/predictor.hpp"
#include "support.hpp"

using namespace pundit;
using testing::ev;

namespace {

Model world_model(const std::string& corpus, Config cfg = {}) {
  auto w = testing::load_world();
  auto pairs = extract_corpus(testing::world_dir() + "/" + corpus, default_rules(), w.lex, *w.graph).pairs;
  REQUIRE(!pairs.empty());
  return train_model(std::move(pairs), w.graph, w.lex, cfg);
}

bool is_prefix(const std::vector<Prediction>& a, const std::vector<Prediction>& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].rendered != b[i].rendered || !(a[i].effect == b[i].effect)) return false;
  return true;
}

}  // namespace

TEST_CASE("render") {
  auto w = testing::load_world();
  auto flee = ev("Escape-51.1", "People");
  flee.actor_attr = "[number]";
  CHECK(render(flee, w.lex) == "[number] people will flee");

  auto play = ev("Play-Class", "Matsui");
  play.polarity = false;
  CHECK(render(play, w.lex) == "matsui will not play");
  CHECK(render(ev("Happen"), Lexicons{}) == "will happen");
  CHECK(render(ev("Send-11.1", "Aid", "", "Truck", "Port-au-Prince"), w.lex) ==
        "aid will send with truck in port-au-prince");
  CHECK(render(ev("k:surge", "UnitedStates"), Lexicons{}) == "united states will surge");
}

TEST_CASE("predict: Louisiana storms") {
  auto m = world_model("louisiana.tsv");
  CHECK(m.tree.size() == 7);
  auto out = predict(m, "Louisiana flood");
  REQUIRE(!out.empty());
  CHECK(out[0].rendered == "[number] people will flee");
  CHECK(out[0].effect.actor() == Value::of_concept("People"));
  CHECK(out[0].effect.actor_attr == std::optional<std::string>("[number]"));
  CHECK(predict(m, "Louisiana flood", {0, false}).empty());
  CHECK_THROWS_AS(predict(m, "the of and"), Error);
}

TEST_CASE("predict: capital and island-to-ocean paths") {
  auto cap = world_model("capital.tsv");
  auto haiti = predict(cap, "Earthquake hits Haiti", {1, false});
  REQUIRE(haiti.size() == 1);
  CHECK(haiti[0].effect.location() == Value::of_concept("Port-au-Prince"));
  CHECK(haiti[0].support == 1);

  auto tsu = world_model("tsunami.tsv");
  auto sol = predict(tsu, "Magnitude 6.5 earthquake rocks the Solomon Islands");
  REQUIRE(!sol.empty());
  CHECK(sol[0].effect.location() == Value::of_concept("PacificOcean"));
  CHECK(sol[0].rendered == "tsunami warning will issue in pacific ocean");
}

TEST_CASE("predict: untrained model") {
  Model m;
  CHECK_THROWS_AS(predict(m, ev("Hit", "Storm")), Error);
}

TEST_CASE("model json: canonical round trip and version check") {
  auto m = world_model("louisiana.tsv");
  auto text = m.to_json();
  auto back = Model::from_json(text);
  CHECK(back.to_json() == text);
  CHECK(back.threshold == m.threshold);
  CHECK(back.rules == m.rules);
  CHECK(back.tree == m.tree);

  auto p1 = predict(m, "Louisiana flood");
  auto p2 = predict(back, "Louisiana flood");
  REQUIRE(p1.size() == p2.size());
  for (std::size_t i = 0; i < p1.size(); ++i) CHECK(prediction_json(p1[i]) == prediction_json(p2[i]));

  auto bumped = text;
  auto at = bumped.find("\"format_version\":1");
  REQUIRE(at != std::string::npos);
  bumped.replace(at, 18, "\"format_version\":2");
  try {
    Model::from_json(bumped);
    FAIL("expected a format error");
  } catch (const Error& e) {
    CHECK(e.kind() == "format");
  }
  CHECK_THROWS_AS(Model::from_json("{"), Error);
  CHECK_THROWS_AS(Model::load("/nonexistent/model.json"), LoadError);
}

TEST_CASE("train: zero pairs and unknown concepts") {
  auto w = testing::load_world();
  CHECK_THROWS_AS(train_model({}, w.graph, w.lex, Config{}), Error);
  std::vector<CausalityPair> pairs{testing::pair_of(ev("Hit-18.1", "Storm", "", "", "Atlantis"),
                                                    ev("Escape-51.1", "People"))};
  auto m = train_model(pairs, w.graph, w.lex, Config{});
  CHECK(m.constant_warnings == 1);
  CHECK(m.pairs[0].cause.location() == Value::constant("atlantis"));
}

TEST_CASE("property: ranking, prefix, determinism, self-consistency") {
  std::mt19937 rng(31337);
  int cases = 0;
  for (int round = 0; round < 25; ++round) {
    auto triples = testing::random_triples(rng, 14, 3, 24);
    for (int i = 0; i < 6; ++i) triples.push_back({"n" + std::to_string(i), "IsA", "n" + std::to_string(i + 6)});
    auto g = std::make_shared<ConceptGraph>(ConceptGraph::from_triples(triples));
    std::vector<std::string> vocab(g->concepts().begin(), g->concepts().end());
    vocab.push_back("k:7");
    std::uniform_int_distribution<std::size_t> np(1, 9);
    std::vector<CausalityPair> pairs;
    for (std::size_t i = np(rng); i > 0; --i)
      pairs.push_back(testing::pair_of(testing::random_event(rng, vocab), testing::random_event(rng, vocab)));
    Config cfg;
    cfg.max_effect_candidates = 1 << 20;
    cfg.aggregator = std::array{Aggregator::Average, Aggregator::Minimum, Aggregator::Maximum}[round % 3];
    auto m = train_model(pairs, g, Lexicons{}, cfg);

    std::vector<Event> causes;
    for (const auto& p : m.pairs) causes.push_back(p.cause);
    for (int i = 0; i < 6; ++i) causes.push_back(testing::random_event(rng, vocab));

    for (std::size_t ci = 0; ci < causes.size(); ++ci, ++cases) {
      const Event& cause = causes[ci];
      auto all = rank_candidates(m, cause);
      if (ci < m.pairs.size()) CHECK(!all.empty());
      auto cands = propagate(m.tree, m.pairs, cause, m.table, cfg.aggregator);
      std::set<NodeId> cand_nodes;
      for (const auto& c : cands) cand_nodes.insert(c.node);
      std::set<Event> effects;
      for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& p = all[i];
        CHECK(cand_nodes.count(p.node_id) == 1);
        CHECK(p.similarity > 0.0);
        CHECK(p.similarity <= 1.0);
        CHECK(p.support >= 0);
        CHECK(p.rendered == render(p.effect, m.lexicons));
        CHECK(effects.insert(p.effect).second);
        if (i > 0) {
          const auto& q = all[i - 1];
          bool ordered = q.similarity > p.similarity ||
                         (q.similarity == p.similarity &&
                          (q.support > p.support || (q.support == p.support && q.rendered <= p.rendered)));
          CHECK(ordered);
        }
      }

      PredictOptions wide{all.size(), true};
      auto full = predict(m, cause, wide);
      CHECK(full.size() == all.size());
      std::size_t n = std::uniform_int_distribution<std::size_t>(0, all.size())(rng);
      CHECK(is_prefix(predict(m, cause, {n, true}), full));
      auto kept = predict(m, cause, {all.size(), false});
      for (const auto& p : kept) CHECK(!p.pruned);
      CHECK(is_prefix(predict(m, cause, {n, false}), kept));
      auto again = predict(m, cause, {10, false});
      auto once = predict(m, cause, {10, false});
      REQUIRE(again.size() == once.size());
      for (std::size_t i = 0; i < once.size(); ++i) CHECK(prediction_json(again[i]) == prediction_json(once[i]));

      if (ci < m.pairs.size()) {
        bool found = false;
        for (const auto& p : all) found = found || p.effect.same_slots(m.pairs[ci].effect);
        CHECK(found);
      }
    }
    CHECK(Model::from_json(m.to_json()).to_json() == m.to_json());
  }
  CHECK(cases >= 200);
}
