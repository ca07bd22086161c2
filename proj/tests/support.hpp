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

#ifndef PUNDIT_TESTS_SUPPORT_HPP_
#define PUNDIT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pundit/event.hpp"
#include "pundit/kgraph.hpp"
#include "pundit/lexicon.hpp"

namespace testing {

inline std::string data_dir() { return PUNDIT_TEST_DATA_DIR; }
inline std::string world_dir() { return data_dir() + "/world"; }

struct World {
  std::shared_ptr<const pundit::ConceptGraph> graph;
  pundit::Lexicons lex;
};

inline World load_world() {
  World w;
  w.graph = std::make_shared<pundit::ConceptGraph>(pundit::load_triples(world_dir() + "/ontology.tsv"));
  w.lex = pundit::Lexicons::load_dir(world_dir() + "/lexicons", *w.graph);
  return w;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "k:foo" is a constant, anything else a concept, "" is absent.
inline pundit::OptValue val(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s.rfind("k:", 0) == 0) return pundit::Value::constant(s.substr(2));
  return pundit::Value::of_concept(s);
}

inline pundit::Event ev(const std::string& action, const std::string& actor = "",
                        const std::string& object = "", const std::string& instrument = "",
                        const std::string& location = "") {
  pundit::Event e;
  e[pundit::Slot::Action] = val(action);
  e[pundit::Slot::Actor] = val(actor);
  e[pundit::Slot::Object] = val(object);
  e[pundit::Slot::Instrument] = val(instrument);
  e[pundit::Slot::Location] = val(location);
  return e;
}

inline pundit::CausalityPair pair_of(pundit::Event c, pundit::Event e, std::string src = "") {
  return {std::move(c), std::move(e), std::move(src), "infix:after"};
}

// Random directed labeled graph over n0..n{nodes-1} with labels l0..l{labels-1}.
inline std::vector<pundit::Triple> random_triples(std::mt19937& rng, int nodes, int labels, int edges) {
  std::uniform_int_distribution<int> node(0, nodes - 1), label(0, labels - 1);
  std::vector<pundit::Triple> out;
  for (int i = 0; i < edges; ++i) {
    out.push_back({"n" + std::to_string(node(rng)), "l" + std::to_string(label(rng)),
                   "n" + std::to_string(node(rng))});
  }
  return out;
}

// ---- oracles --------------------------------------------------------------

// Set of nodes reached from `start` by following `seq` on out-edges, one
// synchronized BFS level per label.
inline std::set<std::string> reach_out(const std::vector<pundit::Triple>& triples,
                                       const std::string& start,
                                       const std::vector<std::string>& seq) {
  std::set<std::string> frontier{start};
  for (const auto& l : seq) {
    std::set<std::string> next;
    for (const auto& t : triples) {
      if (t.label == l && frontier.count(t.source)) next.insert(t.target);
    }
    frontier.swap(next);
    if (frontier.empty()) break;
  }
  return frontier;
}

struct OracleGen {
  std::vector<std::string> labels;
  std::string generalizer;
};

// Brute force: try every label sequence by increasing length, smallest
// sequence first, and take the smallest shared endpoint.
inline std::optional<OracleGen> oracle_mgen(const std::vector<pundit::Triple>& triples,
                                            const std::string& a, const std::string& b, int cap) {
  if (a == b) return OracleGen{{}, a};
  std::set<std::string> label_set;
  for (const auto& t : triples) label_set.insert(t.label);
  std::vector<std::string> labels(label_set.begin(), label_set.end());
  for (int len = 1; len <= cap; ++len) {
    std::vector<std::size_t> idx(len, 0);
    if (labels.empty()) return std::nullopt;
    while (true) {
      std::vector<std::string> seq;
      for (auto i : idx) seq.push_back(labels[i]);
      auto ra = reach_out(triples, a, seq);
      auto rb = reach_out(triples, b, seq);
      for (const auto& x : ra) {
        if (rb.count(x)) return OracleGen{seq, x};
      }
      int pos = len - 1;
      while (pos >= 0 && ++idx[pos] == labels.size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return std::nullopt;
}

// Every walk from `start` whose i-th step matches label i (an "inv(l)" step
// walks an l edge backwards); returns the walk endpoints.
inline std::set<std::string> oracle_walks(const std::vector<pundit::Triple>& triples,
                                          const std::string& start,
                                          const std::vector<std::string>& path) {
  std::set<std::string> ends;
  std::function<void(const std::string&, std::size_t)> walk = [&](const std::string& at,
                                                                   std::size_t step) {
    if (step == path.size()) {
      ends.insert(at);
      return;
    }
    const std::string& l = path[step];
    bool inv = l.rfind("inv(", 0) == 0;
    std::string base = inv ? l.substr(4, l.size() - 5) : l;
    for (const auto& t : triples) {
      if (t.label != base) continue;
      if (!inv && t.source == at) walk(t.target, step + 1);
      if (inv && t.target == at) walk(t.source, step + 1);
    }
  };
  walk(start, 0);
  return ends;
}

inline std::vector<std::string> path_strings(const pundit::ConceptGraph& g, const pundit::LabelPath& p) {
  std::vector<std::string> out;
  for (auto l : p) out.push_back(g.label_text(l));
  return out;
}

inline pundit::LabelPath parse_path(const pundit::ConceptGraph& g, const std::vector<std::string>& p) {
  pundit::LabelPath out;
  for (const auto& s : p) out.push_back(*g.parse_label(s));
  return out;
}

// Random event over a small vocabulary of concepts and constants.
inline pundit::Event random_event(std::mt19937& rng, const std::vector<std::string>& vocab,
                                  double absent = 0.3) {
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::bernoulli_distribution gone(absent);
  pundit::Event e;
  e[pundit::Slot::Action] = val(vocab[pick(rng)]);
  for (auto s : {pundit::Slot::Actor, pundit::Slot::Object, pundit::Slot::Instrument,
                 pundit::Slot::Location}) {
    if (!gone(rng)) e[s] = val(vocab[pick(rng)]);
  }
  return e;
}

}  // namespace testing

#endif  // PUNDIT_TESTS_SUPPORT_HPP_
