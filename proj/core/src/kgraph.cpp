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

#include "pundit/kgraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "text_util.hpp"

namespace pundit {

namespace {

bool is_reserved_label(std::string_view l) {
  return l.size() >= 5 && l.substr(0, 4) == "inv(" && l.back() == ')';
}

void build_csr(std::size_t n, const std::vector<ConceptGraph::Edge>& edges, bool outgoing,
               std::vector<std::size_t>& offsets, std::vector<ConceptGraph::Arc>& arcs) {
  offsets.assign(n + 1, 0);
  for (const auto& e : edges) ++offsets[(outgoing ? e.source : e.target) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  arcs.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : edges) {
    ConceptId from = outgoing ? e.source : e.target;
    ConceptId to = outgoing ? e.target : e.source;
    arcs[cursor[from]++] = {e.label, to};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(arcs.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
              arcs.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
  }
}

}  // namespace

ConceptGraph ConceptGraph::from_triples(std::vector<Triple> triples) {
  ConceptGraph g;
  std::vector<std::string> names, labels;
  for (const auto& t : triples) {
    if (is_reserved_label(t.label)) {
      throw Error("load", "label '" + t.label + "' uses the reserved inv(...) form");
    }
    names.push_back(t.source);
    names.push_back(t.target);
    labels.push_back(t.label);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  g.names_ = std::move(names);
  g.labels_ = std::move(labels);
  for (ConceptId i = 0; i < g.names_.size(); ++i) g.index_.emplace(g.names_[i], i);
  for (LabelId i = 0; i < g.labels_.size(); ++i) g.label_index_.emplace(g.labels_[i], i);

  g.edges_.reserve(triples.size());
  for (const auto& t : triples) {
    g.edges_.push_back({g.index_.at(t.source), g.label_index_.at(t.label), g.index_.at(t.target)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  build_csr(g.names_.size(), g.edges_, true, g.out_offsets_, g.out_arcs_);
  build_csr(g.names_.size(), g.edges_, false, g.in_offsets_, g.in_arcs_);
  return g;
}

std::optional<ConceptId> ConceptGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<LabelId> ConceptGraph::find_label(std::string_view name) const {
  auto it = label_index_.find(std::string(name));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::string ConceptGraph::label_text(LabelRef l) const {
  const std::string& base = labels_.at(l.id);
  return l.inverse ? "inv(" + base + ")" : base;
}

std::optional<LabelRef> ConceptGraph::parse_label(std::string_view text) const {
  bool inverse = is_reserved_label(text);
  if (inverse) text = text.substr(4, text.size() - 5);
  auto id = find_label(text);
  if (!id) return std::nullopt;
  return LabelRef{*id, inverse};
}

std::string ConceptGraph::path_text(const LabelPath& path) const {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ", ";
    out += label_text(path[i]);
  }
  return out + "]";
}

std::span<const ConceptGraph::Arc> ConceptGraph::out_arcs(ConceptId c) const {
  if (c >= names_.size()) return {};
  return {out_arcs_.data() + out_offsets_[c], out_offsets_[c + 1] - out_offsets_[c]};
}

std::span<const ConceptGraph::Arc> ConceptGraph::in_arcs(ConceptId c) const {
  if (c >= names_.size()) return {};
  return {in_arcs_.data() + in_offsets_[c], in_offsets_[c + 1] - in_offsets_[c]};
}

std::vector<Triple> ConceptGraph::triples() const {
  std::vector<Triple> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({names_[e.source], labels_[e.label], names_[e.target]});
  return out;
}

std::vector<std::pair<LabelRef, ConceptId>> ConceptGraph::adjacency(ConceptId c,
                                                                    Direction dir) const {
  std::vector<std::pair<LabelRef, ConceptId>> out;
  if (dir != Direction::In) {
    for (const Arc& a : out_arcs(c)) out.push_back({LabelRef{a.label, false}, a.node});
  }
  if (dir != Direction::Out) {
    for (const Arc& a : in_arcs(c)) out.push_back({LabelRef{a.label, true}, a.node});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::string, std::string>> ConceptGraph::adjacency(std::string_view c,
                                                                         Direction dir) const {
  std::vector<std::pair<std::string, std::string>> out;
  auto id = find(c);
  if (!id) return out;
  for (const auto& [l, n] : adjacency(*id, dir)) out.emplace_back(label_text(l), names_[n]);
  return out;
}

std::uint64_t ConceptGraph::fingerprint() const {
  std::uint64_t h = fnv1a("");
  for (const auto& e : edges_) {
    h = fnv1a(names_[e.source], h);
    h = fnv1a("\t", h);
    h = fnv1a(labels_[e.label], h);
    h = fnv1a("\t", h);
    h = fnv1a(names_[e.target], h);
    h = fnv1a("\n", h);
  }
  return h;
}

ConceptGraph parse_triples(std::string_view text, const std::string& origin) {
  std::vector<Triple> triples;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    strip_cr(line);
    if (is_blank_or_comment(line)) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw LoadError(origin, lineno,
                      "expected 3 TAB-separated fields, got " + std::to_string(fields.size()));
    }
    for (const auto& f : fields) {
      if (f.empty()) throw LoadError(origin, lineno, "empty field");
    }
    if (is_reserved_label(fields[1])) {
      throw LoadError(origin, lineno, "label '" + fields[1] + "' uses the reserved inv(...) form");
    }
    triples.push_back({fields[0], fields[1], fields[2]});
  }
  return ConceptGraph::from_triples(std::move(triples));
}

ConceptGraph load_triples(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open ontology file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_triples(ss.str(), path);
}

std::optional<GenPath> GenPathTable::find(ConceptId a, ConceptId b) const {
  if (a == b) return GenPath{a, {}};
  auto it = entries_.find(key(a, b));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<GenPathTable::Entry> GenPathTable::entries() const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [k, p] : entries_) {
    out.push_back({static_cast<ConceptId>(k >> 32), static_cast<ConceptId>(k & 0xffffffffu), p});
  }
  std::sort(out.begin(), out.end(),
            [](const Entry& x, const Entry& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return out;
}

// Backward dynamic programme over path length. A pair (x, y) has a
// generalization path of length d+1 starting with label l iff x -l-> a and
// y -l-> b for some pair (a, b) whose minimal path has length d (pairs (c, c)
// seed length 0). Every pair of length d+1 is reached from the length-d
// frontier, so processing levels in order finalizes each pair at its minimal
// length. Keeping the smallest (labels, generalizer) per pair at every level
// yields the smallest overall, because the comparison is lexicographic with
// the new first label in front.
GenPathTable compute_mgen(std::shared_ptr<const ConceptGraph> graph, int cap) {
  GenPathTable table;
  table.graph_ = graph;
  table.cap_ = cap;
  const ConceptGraph& g = *graph;

  struct Frontier {
    ConceptId a, b;
    GenPath path;
  };
  std::vector<Frontier> frontier;
  frontier.reserve(g.concept_count());
  for (ConceptId c = 0; c < g.concept_count(); ++c) frontier.push_back({c, c, GenPath{c, {}}});

  auto better = [](const GenPath& x, const GenPath& y) {
    if (x.labels != y.labels) return x.labels < y.labels;
    return x.generalizer < y.generalizer;
  };

  for (int depth = 1; depth <= cap && !frontier.empty(); ++depth) {
    std::unordered_map<std::uint64_t, GenPath> next;
    for (const Frontier& f : frontier) {
      auto ia = g.in_arcs(f.a);
      auto ib = g.in_arcs(f.b);
      std::size_t i = 0, j = 0;
      while (i < ia.size() && j < ib.size()) {
        if (ia[i].label < ib[j].label) {
          ++i;
          continue;
        }
        if (ib[j].label < ia[i].label) {
          ++j;
          continue;
        }
        LabelId l = ia[i].label;
        std::size_t i_end = i, j_end = j;
        while (i_end < ia.size() && ia[i_end].label == l) ++i_end;
        while (j_end < ib.size() && ib[j_end].label == l) ++j_end;
        for (std::size_t x = i; x < i_end; ++x) {
          for (std::size_t y = j; y < j_end; ++y) {
            ConceptId u = ia[x].node, v = ib[y].node;
            if (u == v) continue;
            std::uint64_t k = GenPathTable::key(u, v);
            if (table.entries_.count(k)) continue;
            GenPath cand{f.path.generalizer, {}};
            cand.labels.reserve(f.path.labels.size() + 1);
            cand.labels.push_back(l);
            cand.labels.insert(cand.labels.end(), f.path.labels.begin(), f.path.labels.end());
            auto [it, inserted] = next.try_emplace(k, cand);
            if (!inserted && better(cand, it->second)) it->second = std::move(cand);
          }
        }
        i = i_end;
        j = j_end;
      }
    }
    frontier.clear();
    frontier.reserve(next.size());
    for (auto& [k, p] : next) {
      frontier.push_back({static_cast<ConceptId>(k >> 32), static_cast<ConceptId>(k & 0xffffffffu), p});
      table.entries_.emplace(k, std::move(p));
    }
    if (!next.empty()) table.max_length_ = depth;
  }
  return table;
}

int dist_gen(const GenPathTable& table, const Value& a, const Value& b) {
  const int k = table.cap();
  const ConceptGraph& g = table.graph();
  auto ida = a.is_concept() ? g.find(a.text) : std::nullopt;
  auto idb = b.is_concept() ? g.find(b.text) : std::nullopt;
  if (ida && idb) {
    auto p = table.find(*ida, *idb);
    return p ? static_cast<int>(p->length()) : k;
  }
  if (!ida && !idb) return a.text == b.text ? 0 : k;
  return k;
}

std::vector<std::vector<Value>> isa_generalizations(const ConceptGraph& graph, const Value& o,
                                                    int bound, std::string_view isa_label) {
  std::vector<std::vector<Value>> levels(static_cast<std::size_t>(std::max(bound, 0)) + 1);
  levels[0].push_back(o);
  auto id = o.is_concept() ? graph.find(o.text) : std::nullopt;
  auto isa = graph.find_label(isa_label);
  if (!id || !isa) return levels;

  std::vector<ConceptId> current{*id};
  for (int level = 1; level <= bound; ++level) {
    std::vector<ConceptId> next;
    for (ConceptId c : current) {
      for (const auto& arc : graph.out_arcs(c)) {
        if (arc.label == *isa) next.push_back(arc.node);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (ConceptId c : next) levels[static_cast<std::size_t>(level)].push_back(Value::of_concept(graph.name(c)));
    current = std::move(next);
  }
  return levels;
}

}  // namespace pundit
