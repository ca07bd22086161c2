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

#include "pundit/lexicon.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "text_util.hpp"

namespace pundit {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string normalize_key(std::string_view s) {
  auto words = split_ws(to_lower(s));
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

bool frame_has_v(const std::vector<std::string>& toks) {
  return std::count(toks.begin(), toks.end(), "V") == 1;
}

// Calls fn(fields, lineno) for every data line of an optional file.
template <typename Fn>
void for_each_row(const std::filesystem::path& file, std::size_t expected, Fn fn) {
  if (!std::filesystem::exists(file)) return;
  std::ifstream in(file);
  if (!in) throw LoadError("cannot open lexicon file " + file.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (is_blank_or_comment(line)) continue;
    auto fields = split_tabs(line);
    if (fields.size() != expected) {
      throw LoadError(file.string(), lineno,
                      "expected " + std::to_string(expected) + " TAB-separated fields, got " +
                          std::to_string(fields.size()));
    }
    for (const auto& f : fields) {
      if (trim(f).empty()) throw LoadError(file.string(), lineno, "empty field");
    }
    try {
      fn(fields, lineno);
    } catch (const LoadError&) {
      throw;
    } catch (const Error& e) {
      throw LoadError(file.string(), lineno, e.what());
    }
  }
}

}  // namespace

std::vector<Slot> VerbEntry::pre_roles() const {
  auto toks = split_ws(frame);
  std::vector<Slot> out;
  std::size_t np = 0;
  for (const auto& t : toks) {
    if (t == "V") break;
    out.push_back(roles.at(np++));
  }
  return out;
}

std::vector<Slot> VerbEntry::post_roles() const {
  auto toks = split_ws(frame);
  std::vector<Slot> out;
  std::size_t np = 0;
  bool after = false;
  for (const auto& t : toks) {
    if (t == "V") {
      after = true;
      continue;
    }
    if (after) out.push_back(roles.at(np));
    ++np;
  }
  return out;
}

VerbEntry make_verb_entry(std::string lemma, std::string class_concept, std::string frame,
                          std::string_view role_list) {
  VerbEntry e{normalize_key(lemma), std::move(class_concept), std::move(frame), {}};
  auto toks = split_ws(e.frame);
  if (!frame_has_v(toks)) throw Error("load", "frame '" + e.frame + "' needs exactly one V");
  std::size_t nps = 0;
  for (const auto& t : toks) {
    if (t == "V") continue;
    if (t.size() < 3 || t.substr(0, 2) != "NP") {
      throw Error("load", "frame token '" + t + "' is neither V nor NPn");
    }
    ++nps;
  }
  std::string roles(role_list);
  std::size_t start = 0;
  while (!roles.empty() && start <= roles.size()) {
    std::size_t comma = roles.find(',', start);
    std::string name = trim(roles.substr(start, comma == std::string::npos ? comma : comma - start));
    auto slot = parse_slot(name);
    if (!slot || *slot == Slot::Action) throw Error("load", "bad role '" + name + "'");
    e.roles.push_back(*slot);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (e.roles.size() != nps) {
    throw Error("load", "frame '" + e.frame + "' has " + std::to_string(nps) + " NPs but " +
                            std::to_string(e.roles.size()) + " roles");
  }
  return e;
}

void Lexicons::note_phrase(std::string_view surface) {
  max_phrase_tokens_ = std::max(max_phrase_tokens_, split_ws(surface).size());
}

void Lexicons::add_lemma(std::string surface, std::string lemma) {
  auto key = normalize_key(surface);
  note_phrase(key);
  lemmas_[key] = normalize_key(lemma);
}

void Lexicons::add_verb(VerbEntry entry, const ConceptGraph& graph) {
  if (!graph.contains(entry.class_concept)) {
    throw Error("load", "verb '" + entry.lemma + "': class '" + entry.class_concept +
                            "' is not a concept of the ontology");
  }
  note_phrase(entry.lemma);
  if (verb_index_.count(entry.lemma)) {
    verbs_[verb_index_[entry.lemma]] = std::move(entry);
    return;
  }
  verb_index_[entry.lemma] = verbs_.size();
  verbs_.push_back(std::move(entry));
}

void Lexicons::add_location(std::string cid) { locations_.insert(trim(cid)); }

void Lexicons::add_gloss(std::string cid, std::string gloss) {
  glosses_[trim(cid)] = std::move(gloss);
}

void Lexicons::add_label(std::string surface, std::string cid) {
  auto key = normalize_key(surface);
  note_phrase(key);
  auto& list = labels_[key];
  cid = trim(cid);
  if (std::find(list.begin(), list.end(), cid) == list.end()) list.push_back(std::move(cid));
  std::sort(list.begin(), list.end());
}

std::string Lexicons::lemma(std::string_view surface) const {
  auto it = lemmas_.find(std::string(surface));
  return it == lemmas_.end() ? std::string(surface) : it->second;
}

const VerbEntry* Lexicons::verb(std::string_view lemma) const {
  auto it = verb_index_.find(std::string(lemma));
  return it == verb_index_.end() ? nullptr : &verbs_[it->second];
}

const std::string* Lexicons::gloss(std::string_view cid) const {
  auto it = glosses_.find(std::string(cid));
  return it == glosses_.end() ? nullptr : &it->second;
}

const std::vector<std::string>* Lexicons::label_candidates(std::string_view surface) const {
  auto it = labels_.find(std::string(surface));
  return it == labels_.end() ? nullptr : &it->second;
}

const std::string* Lexicons::surface_of_class(std::string_view class_concept) const {
  for (const auto& v : verbs_) {
    if (v.class_concept == class_concept) return &v.lemma;
  }
  return nullptr;
}

bool Lexicons::knows_phrase(std::string_view surface) const {
  std::string key(surface);
  return lemmas_.count(key) || verb_index_.count(key) || labels_.count(key);
}

Lexicons Lexicons::load_dir(const std::string& dir, const ConceptGraph& graph) {
  namespace fs = std::filesystem;
  fs::path root(dir);
  if (!fs::is_directory(root)) throw LoadError("lexicon directory not found: " + dir);
  Lexicons lex;
  for_each_row(root / "lemmas.tsv", 2, [&](const auto& f, std::size_t) { lex.add_lemma(f[0], f[1]); });
  for_each_row(root / "verbs.tsv", 4, [&](const auto& f, std::size_t) {
    lex.add_verb(make_verb_entry(f[0], trim(f[1]), f[2], f[3]), graph);
  });
  for_each_row(root / "locations.txt", 1, [&](const auto& f, std::size_t) { lex.add_location(f[0]); });
  for_each_row(root / "glosses.tsv", 2, [&](const auto& f, std::size_t) { lex.add_gloss(f[0], f[1]); });
  for_each_row(root / "labels.tsv", 2, [&](const auto& f, std::size_t) { lex.add_label(f[0], f[1]); });
  return lex;
}

}  // namespace pundit
