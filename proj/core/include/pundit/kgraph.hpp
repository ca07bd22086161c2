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

#ifndef PUNDIT_KGRAPH_HPP_
#define PUNDIT_KGRAPH_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pundit/types.hpp"

namespace pundit {

using ConceptId = std::uint32_t;
using LabelId = std::uint32_t;

struct Triple {
  std::string source;
  std::string label;
  std::string target;

  auto operator<=>(const Triple&) const = default;
};

// A label as seen during undirected traversal: the stored label, or its
// synthetic inverse (followed from target back to source).
struct LabelRef {
  LabelId id = 0;
  bool inverse = false;

  LabelRef inv() const { return {id, !inverse}; }
  auto operator<=>(const LabelRef&) const = default;
};

using LabelPath = std::vector<LabelRef>;

enum class Direction { Out, In, Undirected };

// Directed labeled multigraph over string concept ids. Concept and label ids
// are assigned in lexicographic order of their names, so comparing ids
// compares names. Immutable once built.
class ConceptGraph {
 public:
  struct Arc {
    LabelId label;
    ConceptId node;
    auto operator<=>(const Arc&) const = default;
  };
  struct Edge {
    ConceptId source;
    LabelId label;
    ConceptId target;
    auto operator<=>(const Edge&) const = default;
  };

  ConceptGraph() = default;

  // Duplicates are dropped. Labels of the form "inv(...)" are reserved and
  // rejected with pundit::Error("load", ...).
  static ConceptGraph from_triples(std::vector<Triple> triples);

  std::size_t concept_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t label_count() const { return labels_.size(); }

  std::optional<ConceptId> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }
  const std::string& name(ConceptId id) const { return names_[id]; }
  const std::vector<std::string>& concepts() const { return names_; }

  std::optional<LabelId> find_label(std::string_view name) const;
  const std::string& label_name(LabelId id) const { return labels_[id]; }

  // "l" or "inv(l)".
  std::string label_text(LabelRef l) const;
  std::optional<LabelRef> parse_label(std::string_view text) const;
  std::string path_text(const LabelPath& path) const;

  std::span<const Arc> out_arcs(ConceptId c) const;
  std::span<const Arc> in_arcs(ConceptId c) const;
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Triple> triples() const;

  // Neighbors of `c` as (label, neighbor) in (label, neighbor) order; in-arcs
  // are reported under the inverse label. Unknown concepts have none.
  std::vector<std::pair<LabelRef, ConceptId>> adjacency(ConceptId c, Direction dir) const;
  std::vector<std::pair<std::string, std::string>> adjacency(std::string_view c,
                                                             Direction dir) const;

  // Stable FNV-1a digest of the canonical triple list.
  std::uint64_t fingerprint() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ConceptId> index_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, LabelId> label_index_;
  std::vector<Edge> edges_;
  // CSR adjacency, sorted by (label, node).
  std::vector<std::size_t> out_offsets_, in_offsets_;
  std::vector<Arc> out_arcs_, in_arcs_;
};

// Reads `source<TAB>label<TAB>target` lines; '#' lines and blank lines are
// skipped. Throws LoadError naming the line on malformed input.
ConceptGraph load_triples(const std::string& path);
ConceptGraph parse_triples(std::string_view text, const std::string& origin = "<memory>");

// Minimal generalization path of a concept pair: following `labels` from
// either concept along out-edges reaches `generalizer`.
struct GenPath {
  ConceptId generalizer = 0;
  std::vector<LabelId> labels;

  std::size_t length() const { return labels.size(); }
  bool operator==(const GenPath&) const = default;
};

class GenPathTable {
 public:
  GenPathTable() = default;

  // For a == b returns the empty path generalized at a itself.
  std::optional<GenPath> find(ConceptId a, ConceptId b) const;

  std::size_t size() const { return entries_.size(); }
  int cap() const { return cap_; }
  int max_length() const { return max_length_; }
  const ConceptGraph& graph() const { return *graph_; }

  struct Entry {
    ConceptId a, b;  // a < b
    GenPath path;
  };
  // Entries ordered by (a, b).
  std::vector<Entry> entries() const;

 private:
  friend GenPathTable compute_mgen(std::shared_ptr<const ConceptGraph>, int);

  static std::uint64_t key(ConceptId a, ConceptId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
  }

  std::shared_ptr<const ConceptGraph> graph_ = std::make_shared<ConceptGraph>();
  std::unordered_map<std::uint64_t, GenPath> entries_;
  int cap_ = 4;
  int max_length_ = 0;
};

// All-pairs minimal generalization paths up to `cap` labels. Among equally
// short paths the smallest label sequence (then generalizer) is kept.
GenPathTable compute_mgen(std::shared_ptr<const ConceptGraph> graph, int cap = 4);

// Concept distance. Constants (and concept ids unknown to the graph) compare
// by equality: 0 or k. Related concepts give their path length, otherwise k.
// k is the table's cap.
int dist_gen(const GenPathTable& table, const Value& a, const Value& b);

// Level i holds the concepts reachable from level i-1 by one `isa_label`
// edge; level 0 is {o}. Values absent from the graph yield {o} only.
std::vector<std::vector<Value>> isa_generalizations(const ConceptGraph& graph, const Value& o,
                                                    int bound, std::string_view isa_label);

}  // namespace pundit

#endif  // PUNDIT_KGRAPH_HPP_
