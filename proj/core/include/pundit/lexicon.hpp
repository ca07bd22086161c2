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

#ifndef PUNDIT_LEXICON_HPP_
#define PUNDIT_LEXICON_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pundit/kgraph.hpp"
#include "pundit/types.hpp"

namespace pundit {

// One verb-table row: lemma -> verb-class concept plus a syntactic frame
// such as "NP1 V NP2" whose NP positions map, in order, onto `roles`.
struct VerbEntry {
  std::string lemma;
  std::string class_concept;
  std::string frame;
  std::vector<Slot> roles;

  // Roles of the NP positions before / after the V token.
  std::vector<Slot> pre_roles() const;
  std::vector<Slot> post_roles() const;

  bool operator==(const VerbEntry&) const = default;
};

// Small file-provided lexical resources. All surface keys are lower case;
// multi-word surfaces ("north carolina") are allowed.
class Lexicons {
 public:
  Lexicons() = default;

  // Reads lemmas.tsv, verbs.tsv, locations.txt, glosses.tsv and labels.tsv
  // from `dir`; absent files are treated as empty. Verb classes must be
  // concepts of `graph`.
  static Lexicons load_dir(const std::string& dir, const ConceptGraph& graph);

  void add_lemma(std::string surface, std::string lemma);
  // Throws Error("load") if the class is not a concept of `graph`.
  void add_verb(VerbEntry entry, const ConceptGraph& graph);
  void add_location(std::string cid);
  void add_gloss(std::string cid, std::string gloss);
  void add_label(std::string surface, std::string cid);

  std::string lemma(std::string_view surface) const;
  const VerbEntry* verb(std::string_view lemma) const;
  bool is_location(std::string_view cid) const { return locations_.count(std::string(cid)) > 0; }
  const std::string* gloss(std::string_view cid) const;
  const std::vector<std::string>* label_candidates(std::string_view surface) const;

  // First lemma (in file order) whose class is `class_concept`.
  const std::string* surface_of_class(std::string_view class_concept) const;

  // True if some lexicon knows `surface` as a (possibly multi-word) key.
  bool knows_phrase(std::string_view surface) const;
  std::size_t max_phrase_tokens() const { return max_phrase_tokens_; }

  const std::map<std::string, std::string>& lemmas() const { return lemmas_; }
  const std::vector<VerbEntry>& verbs() const { return verbs_; }
  const std::set<std::string>& locations() const { return locations_; }
  const std::map<std::string, std::string>& glosses() const { return glosses_; }
  const std::map<std::string, std::vector<std::string>>& labels() const { return labels_; }

  bool empty() const {
    return lemmas_.empty() && verbs_.empty() && locations_.empty() && glosses_.empty() &&
           labels_.empty();
  }

  bool operator==(const Lexicons& o) const {
    return lemmas_ == o.lemmas_ && verbs_ == o.verbs_ && locations_ == o.locations_ &&
           glosses_ == o.glosses_ && labels_ == o.labels_;
  }

 private:
  void note_phrase(std::string_view surface);

  std::map<std::string, std::string> lemmas_;
  std::vector<VerbEntry> verbs_;
  std::map<std::string, std::size_t> verb_index_;
  std::set<std::string> locations_;
  std::map<std::string, std::string> glosses_;
  std::map<std::string, std::vector<std::string>> labels_;
  std::size_t max_phrase_tokens_ = 1;
};

// Parses "NP1 V NP2" style frames with a comma-separated role list.
VerbEntry make_verb_entry(std::string lemma, std::string class_concept, std::string frame,
                          std::string_view role_list);

}  // namespace pundit

#endif  // PUNDIT_LEXICON_HPP_
