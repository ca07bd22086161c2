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

#include "pundit/abstree.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pundit {

namespace {

// Dense symmetric matrix of similarities between training pairs.
class SimMatrix {
 public:
  explicit SimMatrix(std::size_t n) : n_(n), data_(n * n, 1.0) {}
  double operator()(std::size_t a, std::size_t b) const { return data_[a * n_ + b]; }
  void set(std::size_t a, std::size_t b, double v) {
    data_[a * n_ + b] = v;
    data_[b * n_ + a] = v;
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

std::size_t medoid_of(const std::vector<std::size_t>& members, const SimMatrix& cause_sim) {
  std::size_t best = members.front();
  double best_sum = -1;
  for (std::size_t m : members) {
    double sum = 0;
    for (std::size_t o : members) {
      if (o != m) sum += cause_sim(m, o);
    }
    if (sum > best_sum) {
      best_sum = sum;
      best = m;
    }
  }
  return best;
}

}  // namespace

AbstractionTree AbstractionTree::from_nodes(std::vector<ATNode> nodes) {
  if (nodes.empty()) throw Error("format", "abstraction tree has no nodes");
  if (nodes.size() % 2 == 0) throw Error("format", "abstraction tree must have 2n-1 nodes");
  const std::size_t leaves = (nodes.size() + 1) / 2;
  std::vector<int> parent_count(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const ATNode& n = nodes[i];
    if (n.id != i) throw Error("format", "node ids must be consecutive from 0");
    if (i < leaves) {
      if (!n.children.empty() || n.members != std::vector<std::size_t>{i} || n.medoid != i) {
        throw Error("format", "node " + std::to_string(i) + " must be the leaf of pair " +
                                  std::to_string(i));
      }
      continue;
    }
    if (n.children.size() != 2) throw Error("format", "internal node needs two children");
    std::vector<std::size_t> merged;
    for (NodeId c : n.children) {
      if (c >= i) throw Error("format", "child ids must precede their parent");
      ++parent_count[c];
      const auto& cm = nodes[c].members;
      merged.insert(merged.end(), cm.begin(), cm.end());
    }
    std::sort(merged.begin(), merged.end());
    if (merged != n.members) throw Error("format", "node members must be the union of its children");
    if (!std::binary_search(n.members.begin(), n.members.end(), n.medoid)) {
      throw Error("format", "medoid must be a member");
    }
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (parent_count[i] != 1) throw Error("format", "every non-root node needs one parent");
  }
  AbstractionTree t;
  t.nodes_ = std::move(nodes);
  return t;
}

std::size_t choose_medoid(const std::vector<std::size_t>& members,
                          const std::vector<CausalityPair>& pairs, const GenPathTable& table,
                          Aggregator agg) {
  if (members.empty()) throw Error("build", "medoid of an empty member set");
  std::size_t best = members.front();
  double best_sum = -1;
  for (std::size_t m : members) {
    double sum = 0;
    for (std::size_t o : members) {
      if (o != m) sum += event_similarity(table, pairs[m].cause, pairs[o].cause, agg);
    }
    if (sum > best_sum) {
      best_sum = sum;
      best = m;
    }
  }
  return best;
}

AbstractionTree build_tree(const std::vector<CausalityPair>& pairs, const GenPathTable& table,
                           Aggregator agg) {
  const std::size_t n = pairs.size();
  if (n == 0) throw Error("build", "cannot build an abstraction tree from zero pairs");

  SimMatrix pair_sim(n), cause_sim(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      pair_sim.set(a, b, pair_similarity(table, pairs[a], pairs[b], agg));
      cause_sim.set(a, b, event_similarity(table, pairs[a].cause, pairs[b].cause, agg));
    }
  }

  std::vector<ATNode> nodes;
  nodes.reserve(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) nodes.push_back({i, {i}, {}, i, 0});

  // Active clusters ordered by their smallest member index; scanning i < j
  // in this order breaks similarity ties by (min member, next min member).
  std::vector<NodeId> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  std::size_t step = 0;
  while (active.size() > 1) {
    std::size_t bi = 0, bj = 1;
    double best = -1;
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        double s = pair_sim(nodes[active[i]].medoid, nodes[active[j]].medoid);
        if (s > best) {
          best = s;
          bi = i;
          bj = j;
        }
      }
    }
    ATNode merged;
    merged.id = nodes.size();
    merged.children = {active[bi], active[bj]};
    const auto& ma = nodes[active[bi]].members;
    const auto& mb = nodes[active[bj]].members;
    merged.members.reserve(ma.size() + mb.size());
    std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged.members));
    merged.medoid = medoid_of(merged.members, cause_sim);
    merged.height = ++step;
    active[bi] = merged.id;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
    nodes.push_back(std::move(merged));
  }
  return AbstractionTree::from_nodes(std::move(nodes));
}

std::vector<Candidate> propagate(const AbstractionTree& tree, const std::vector<CausalityPair>& pairs,
                                 const Event& e, const GenPathTable& table, Aggregator agg) {
  std::vector<Candidate> out;
  if (tree.empty()) return out;
  std::vector<double> sim(tree.size(), -1.0);
  auto similarity = [&](NodeId id) {
    if (sim[id] < 0) sim[id] = event_similarity(table, e, pairs.at(tree.node(id).medoid).cause, agg);
    return sim[id];
  };
  std::set<NodeId> emitted;
  auto emit = [&](NodeId id) {
    if (emitted.insert(id).second) out.push_back({id, similarity(id)});
  };

  std::deque<NodeId> queue{tree.root()};
  while (!queue.empty()) {
    NodeId id = queue.front();
    queue.pop_front();
    const ATNode& node = tree.node(id);
    if (node.is_leaf()) {
      emit(id);
      continue;
    }
    for (NodeId child : node.children) {
      if (similarity(id) > similarity(child)) {
        emit(id);
      } else {
        queue.push_back(child);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.node < b.node;
  });
  return out;
}

}  // namespace pundit
