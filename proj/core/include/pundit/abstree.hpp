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

#ifndef PUNDIT_ABSTREE_HPP_
#define PUNDIT_ABSTREE_HPP_

#include <cstddef>
#include <vector>

#include "pundit/config.hpp"
#include "pundit/event.hpp"
#include "pundit/kgraph.hpp"

namespace pundit {

using NodeId = std::size_t;

struct ATNode {
  NodeId id = 0;
  std::vector<std::size_t> members;  // pair indices, ascending
  std::vector<NodeId> children;      // empty for leaves, else exactly two
  std::size_t medoid = 0;            // pair index of the representative cause
  std::size_t height = 0;            // merge step that created the node; leaves are 0

  bool is_leaf() const { return children.empty(); }
  bool operator==(const ATNode&) const = default;
};

// HAC dendrogram over training pairs. Leaf i holds pair i; merged nodes get
// ids n, n+1, ... in merge order, so the root is the last node.
class AbstractionTree {
 public:
  AbstractionTree() = default;

  // Validates structure (leaf/merge shape, member unions, medoid membership)
  // and throws Error("format") on violation.
  static AbstractionTree from_nodes(std::vector<ATNode> nodes);

  const std::vector<ATNode>& nodes() const { return nodes_; }
  const ATNode& node(NodeId id) const { return nodes_.at(id); }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  NodeId root() const { return nodes_.size() - 1; }
  std::size_t leaf_count() const { return (nodes_.size() + 1) / 2; }

  bool operator==(const AbstractionTree&) const = default;

 private:
  std::vector<ATNode> nodes_;
};

// Member whose cause has the highest summed similarity to the other members'
// causes; ties go to the lowest pair index.
std::size_t choose_medoid(const std::vector<std::size_t>& members,
                          const std::vector<CausalityPair>& pairs, const GenPathTable& table,
                          Aggregator agg);

// Agglomerative clustering with medoid-to-medoid pair similarity as linkage.
// Throws Error("build") on empty input.
AbstractionTree build_tree(const std::vector<CausalityPair>& pairs, const GenPathTable& table,
                           Aggregator agg);

struct Candidate {
  NodeId node = 0;
  double similarity = 0;

  bool operator==(const Candidate&) const = default;
};

// Breadth-first descent from the root: a node more similar to `e` than one of
// its children is emitted instead of exploring that child; leaves reached are
// emitted. Sorted by similarity descending, then node id.
std::vector<Candidate> propagate(const AbstractionTree& tree, const std::vector<CausalityPair>& pairs,
                                 const Event& e, const GenPathTable& table, Aggregator agg);

}  // namespace pundit

#endif  // PUNDIT_ABSTREE_HPP_
