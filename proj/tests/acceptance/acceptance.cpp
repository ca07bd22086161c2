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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "pundit/predictor.hpp"
#include "support.hpp"

using namespace pundit;
using testing::ev;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Value c(const std::string& s) { return Value::of_concept(s); }

Outcome mgen_oracle() {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> nn(2, 40), nl(1, 4), ne(0, 120);
  std::size_t checked = 0, bad = 0;
  for (int round = 0; round < 100; ++round) {
    auto triples = testing::random_triples(rng, nn(rng), nl(rng), ne(rng));
    auto g = std::make_shared<ConceptGraph>(ConceptGraph::from_triples(triples));
    auto table = compute_mgen(g, 4);
    const auto& cs = g->concepts();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i; j < cs.size(); ++j, ++checked) {
        auto want = testing::oracle_mgen(triples, cs[i], cs[j], 4);
        auto got = table.find(static_cast<ConceptId>(i), static_cast<ConceptId>(j));
        if (want.has_value() != got.has_value()) ++bad;
        else if (want && want->labels.size() != got->length()) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome paris_london() {
  auto g = std::make_shared<ConceptGraph>(parse_triples(
      "Paris\tCapital-of\tFrance\nFrance\tIn-continent\tEurope\n"
      "London\tCapital-of\tUK\nUK\tIn-continent\tEurope\n"));
  auto p = compute_mgen(g, 4).find(*g->find("Paris"), *g->find("London"));
  if (!p) return {false, "no path"};
  std::vector<std::string> labels;
  for (auto l : p->labels) labels.push_back(g->label_name(l));
  bool ok = labels == std::vector<std::string>{"Capital-of", "In-continent"} && p->length() == 2 &&
            g->name(p->generalizer) == "Europe";
  return {ok, "length " + std::to_string(p->length()) + ", generalizer " + g->name(p->generalizer)};
}

Outcome extraction() {
  auto w = testing::load_world();
  auto rules = default_rules();
  int agree = 0, total = 0;
  auto expect = [&](bool cond) { ++total, agree += cond; };

  auto nj = match_causality("2 New Jersey Police Officers Shot After Pulling Over a Car", rules, w.lex);
  expect(nj && nj->cause == "pulling over a car" && nj->pattern_id == "infix:after");
  auto one = [&](const std::string& h) {
    return extract_lines("2009-04-02\t" + h + "\n", rules, w.lex, *w.graph).pairs;
  };
  expect(one("2 New Jersey Police Officers Shot After Pulling Over a Car").size() == 1);
  expect(one("after 10 years in Lansing, state lawmaker Tom George returns").empty());
  auto nokia = match_causality("Nokia to cut jobs as it tries to catch up to rivals", rules, w.lex);
  expect(nokia && nokia->cause == "it tries to catch up to rivals" && nokia->effect == "nokia to cut jobs");
  expect(one("Nokia to cut jobs as it tries to catch up to rivals").size() == 1);
  expect(one("civil rights photographer unmasked as informer").empty());
  auto storms = extract_corpus(testing::world_dir() + "/louisiana.tsv", rules, w.lex, *w.graph).pairs;
  expect(storms.size() == 4);
  for (const auto& p : storms) expect(p.pattern_id == "infix:as");
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " decisions agree"};
}

Model world_model(const std::string& corpus) {
  auto w = testing::load_world();
  auto pairs = extract_corpus(testing::world_dir() + "/" + corpus, default_rules(), w.lex, *w.graph).pairs;
  return train_model(std::move(pairs), w.graph, w.lex, Config{});
}

Outcome capital() {
  auto m = world_model("capital.tsv");
  auto out = predict(m, "earthquake hits Haiti", {1, false});
  bool ok = out.size() == 1 && out[0].effect.location() == c("Port-au-Prince");
  return {ok, out.empty() ? "no prediction" : "top-1: " + out[0].rendered};
}

Outcome depth_two() {
  auto g = parse_triples("Brooklyn\tborough-of\tNYC\nBloomberg\tmayor-of\tNYC\n");
  auto paths = find_predicate_paths(g, c("Brooklyn"), c("Bloomberg"), 2);
  bool found = paths.size() == 1 && testing::path_strings(g, *paths.begin()) ==
                                        std::vector<std::string>{"borough-of", "inv(mayor-of)"};
  std::vector<CausalityPair> pairs{
      testing::pair_of(ev("Arrest", "", "Suspect", "", "Brooklyn"), ev("Declare", "Bloomberg", "Emergency"))};
  ATNode leaf;
  leaf.members = {0};
  auto rule = learn_node_rules(leaf, pairs, g, 2);
  bool empty = apply_rule(rule, ev("Arrest", "", "Suspect", "", "Baghdad"), g).empty();
  return {found && empty, std::string(found ? "path found" : "path missing") +
                              (empty ? ", Baghdad yields nothing" : ", Baghdad yields candidates")};
}

Outcome louisiana() {
  auto m = world_model("louisiana.tsv");
  auto out = predict(m, "Louisiana flood");
  if (out.empty()) return {false, "no prediction"};
  const auto& e = out[0].effect;
  bool ok = e.action() == c("Escape-51.1") && e.actor() == c("People") &&
            out[0].rendered == "[number] people will flee";
  return {ok, "top-1: " + out[0].rendered};
}

Outcome pruning() {
  auto g = parse_triples("Lightning\tIsA\tNaturalPhenomenon\nPeople\tIsA\tGroup\n");
  std::vector<Event> effects(5, ev("Arrest", "Police", "People"));
  std::vector<Event> corpus = effects;
  corpus.push_back(ev("Riot", "People"));
  corpus.push_back(ev("Strike", "Lightning", "House"));
  corpus.push_back(ev("See", "Man", "Lightning"));
  corpus.push_back(ev("Photograph", "Tourist", "Lightning"));
  auto s = PMCIStats::accumulate(corpus);
  double th = calibrate_threshold(s, g, effects, 2, 5);
  auto r = filter({ev("Arrest", "Police", "Lightning"), ev("Arrest", "Police", "People")}, th, s, g, 2);
  bool ok = r.scores[0] < th && th <= r.scores[1] && r.pruned == std::vector<std::size_t>{0} &&
            r.kept == std::vector<std::size_t>{1};
  std::ostringstream d;
  d << "lightning " << r.scores[0] << " < threshold " << th << " <= people " << r.scores[1];
  return {ok, d.str()};
}

Outcome follow_oracle() {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> nn(2, 40), nl(1, 4), ne(0, 120), len(0, 4);
  int checked = 0, bad = 0;
  for (int round = 0; round < 100; ++round) {
    auto triples = testing::random_triples(rng, nn(rng), nl(rng), ne(rng));
    auto g = ConceptGraph::from_triples(triples);
    if (g.label_count() == 0) continue;
    std::uniform_int_distribution<std::size_t> pn(0, g.concept_count() - 1), pl(0, g.label_count() - 1);
    for (int q = 0; q < 5; ++q, ++checked) {
      const std::string& start = g.concepts()[pn(rng)];
      std::vector<std::string> path;
      for (int i = len(rng); i > 0; --i) {
        std::string l = g.label_name(static_cast<LabelId>(pl(rng)));
        path.push_back(rng() % 2 ? "inv(" + l + ")" : l);
      }
      std::set<Value> want;
      for (const auto& n : testing::oracle_walks(triples, start, path)) want.insert(c(n));
      bad += follow_path_objects(g, c(start), testing::parse_path(g, path)) != want;
    }
  }
  return {bad == 0, std::to_string(checked) + " walks, " + std::to_string(bad) + " mismatches"};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "pundit_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto p = [&](const std::string& n) { return (dir / n).string(); };
  const std::string w = testing::world_dir();
  std::ostringstream sink;
  auto run = [&](std::vector<std::string> args, std::ostream& out) { return cli::run(args, out, sink); };

  bool ok = run({"extract", "--corpus", w + "/louisiana.tsv", "--ontology", w + "/ontology.tsv", "--lexicons",
                 w + "/lexicons", "--out", p("pairs.jsonl")},
                sink) == 0;
  for (const char* m : {"a.json", "b.json"}) {
    ok = ok && run({"train", "--pairs", p("pairs.jsonl"), "--ontology", w + "/ontology.tsv", "--lexicons",
                    w + "/lexicons", "--out", p(m)},
                   sink) == 0;
  }
  bool same_model = ok && testing::slurp(p("a.json")) == testing::slurp(p("b.json"));
  std::ostringstream o1, o2;
  ok = ok && run({"predict", "--model", p("a.json"), "Louisiana flood"}, o1) == 0 &&
       run({"predict", "--model", p("a.json"), "Louisiana flood"}, o2) == 0;
  bool same_out = ok && o1.str() == o2.str() && !o1.str().empty();
  fs::remove_all(dir);
  return {same_model && same_out, std::string(same_model ? "models identical" : "models differ") +
                                      (same_out ? ", predictions identical" : ", predictions differ")};
}

Outcome invariants() {
  std::mt19937 rng(10);
  auto triples = testing::random_triples(rng, 16, 3, 28);
  for (int i = 0; i < 6; ++i) triples.push_back({"n" + std::to_string(i), "IsA", "n" + std::to_string(i + 6)});
  auto g = std::make_shared<ConceptGraph>(ConceptGraph::from_triples(triples));
  auto t = compute_mgen(g, 4);
  std::vector<std::string> vocab(g->concepts().begin(), g->concepts().end());
  vocab.push_back("k:7");
  const std::array<Aggregator, 3> aggs{Aggregator::Average, Aggregator::Minimum, Aggregator::Maximum};

  int symmetry = 0, range = 0, monotone = 0, hac = 0, conserve = 0, bad = 0;
  for (int i = 0; i < 300; ++i) {
    auto a = testing::random_event(rng, vocab), b = testing::random_event(rng, vocab);
    for (auto agg : aggs) {
      double s = event_similarity(t, a, b, agg);
      bad += s != event_similarity(t, b, a, agg);
      bad += !(s > 0 && s <= 1) || event_similarity(t, a, a, agg) != 1.0;
    }
    ++symmetry, ++range;
  }

  std::vector<Event> corpus;
  for (int i = 0; i < 40; ++i) corpus.push_back(testing::random_event(rng, vocab, 0.4));
  auto stats = PMCIStats::accumulate(corpus);
  for (int i = 0; i < 300; ++i, ++monotone) {
    auto e = testing::random_event(rng, vocab, 0.4);
    for (int bnd = 0; bnd < 3; ++bnd)
      bad += event_pmci(stats, *g, e, bnd + 1) < event_pmci(stats, *g, e, bnd);
    auto x = testing::random_event(rng, vocab, 0.0), y = testing::random_event(rng, vocab, 0.0);
    bad += pmci(stats, *x.action(), *y.actor(), Slot::Actor, Slot::Object) !=
           pmci(stats, *y.actor(), *x.action(), Slot::Object, Slot::Actor);
  }

  for (int round = 0; round < 220; ++round, ++hac) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    std::vector<CausalityPair> pairs;
    for (std::size_t i = 0; i < n; ++i)
      pairs.push_back(testing::pair_of(testing::random_event(rng, vocab), testing::random_event(rng, vocab)));
    auto tree = build_tree(pairs, t, aggs[static_cast<std::size_t>(round) % 3]);
    bad += tree.size() != 2 * n - 1 || tree.leaf_count() != n || tree.node(tree.root()).members.size() != n;
    for (const auto& node : tree.nodes()) {
      bad += std::find(node.members.begin(), node.members.end(), node.medoid) == node.members.end();
      if (!node.is_leaf()) {
        auto l = tree.node(node.children[0]).members, r = tree.node(node.children[1]).members;
        bad += l.size() + r.size() != node.members.size();
      }
    }
  }

  double th = calibrate_threshold(stats, *g, corpus, 2, 5);
  for (int i = 0; i < 200; ++i, ++conserve) {
    std::vector<Event> preds;
    for (int k = std::uniform_int_distribution<int>(0, 6)(rng); k > 0; --k)
      preds.push_back(testing::random_event(rng, vocab, 0.4));
    auto r = filter(preds, th, stats, *g, 2);
    std::set<std::size_t> seen(r.kept.begin(), r.kept.end());
    seen.insert(r.pruned.begin(), r.pruned.end());
    bad += r.kept.size() + r.pruned.size() != preds.size() || seen.size() != preds.size() ||
           !std::is_sorted(r.kept.begin(), r.kept.end()) || !std::is_sorted(r.pruned.begin(), r.pruned.end());
  }
  bool enough = symmetry >= 200 && range >= 200 && monotone >= 200 && hac >= 200 && conserve >= 200;
  std::ostringstream d;
  d << "symmetry " << symmetry << ", range " << range << ", monotonicity " << monotone << ", HAC " << hac
    << ", conservation " << conserve << " cases; " << bad << " violations";
  return {enough && bad == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"generalization-path oracle", mgen_oracle},
      {"Paris/London regression", paris_london},
      {"extraction regression", extraction},
      {"CapitalOf rule end-to-end", capital},
      {"depth-2 path and failure", depth_two},
      {"Louisiana end-to-end", louisiana},
      {"PMCI pruning", pruning},
      {"path-following oracle", follow_oracle},
      {"determinism", determinism},
      {"invariant suites", invariants},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << "criterion " << i + 1 << " [PRIMARY] " << (o.ok ? "PASS" : "FAIL") << "  "
              << criteria[i].first << ": " << o.detail << "\n";
  }
  return failed == 0 ? 0 : 1;
}
