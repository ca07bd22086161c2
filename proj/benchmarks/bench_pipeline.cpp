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

#include <benchmark/benchmark.h>

#include <random>

#include "pundit/model.hpp"
#include "pundit/predictor.hpp"

using namespace pundit;

namespace {

std::vector<Triple> graph_triples(int nodes, int labels, int edges, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> n(0, nodes - 1), l(0, labels - 1);
  std::vector<Triple> out;
  for (int i = 0; i < edges; ++i)
    out.push_back({"n" + std::to_string(n(rng)), "l" + std::to_string(l(rng)), "n" + std::to_string(n(rng))});
  return out;
}

Event random_event(std::mt19937& rng, const std::vector<std::string>& vocab) {
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::bernoulli_distribution absent(0.3);
  Event e;
  e[Slot::Action] = Value::of_concept(vocab[pick(rng)]);
  for (Slot s : {Slot::Actor, Slot::Object, Slot::Instrument, Slot::Location})
    if (!absent(rng)) e[s] = Value::of_concept(vocab[pick(rng)]);
  return e;
}

std::vector<CausalityPair> random_pairs(const ConceptGraph& g, std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> vocab(g.concepts().begin(), g.concepts().end());
  std::vector<CausalityPair> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({random_event(rng, vocab), random_event(rng, vocab), "", ""});
  return out;
}

void BM_ComputeMgen(benchmark::State& state) {
  auto nodes = static_cast<int>(state.range(0));
  auto g = std::make_shared<ConceptGraph>(ConceptGraph::from_triples(graph_triples(nodes, 4, nodes * 3, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_mgen(g, 4));
  state.SetComplexityN(nodes);
}
BENCHMARK(BM_ComputeMgen)->Arg(50)->Arg(100)->Arg(200)->Complexity();

void BM_BuildTree(benchmark::State& state) {
  auto g = std::make_shared<ConceptGraph>(ConceptGraph::from_triples(graph_triples(120, 4, 360, 2)));
  auto table = compute_mgen(g, 4);
  auto pairs = random_pairs(*g, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_tree(pairs, table, Aggregator::Average));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTree)->Arg(25)->Arg(50)->Arg(100)->Complexity();

void BM_Predict(benchmark::State& state) {
  auto g = std::make_shared<ConceptGraph>(ConceptGraph::from_triples(graph_triples(120, 4, 360, 4)));
  auto pairs = random_pairs(*g, static_cast<std::size_t>(state.range(0)), 5);
  auto model = train_model(pairs, g, Lexicons{}, Config{});
  std::mt19937 rng(6);
  std::vector<std::string> vocab(g->concepts().begin(), g->concepts().end());
  std::vector<Event> causes;
  for (int i = 0; i < 16; ++i) causes.push_back(random_event(rng, vocab));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(predict(model, causes[i++ % causes.size()]));
}
BENCHMARK(BM_Predict)->Arg(25)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
