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

#include "pundit/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "text_util.hpp"

namespace pundit {

std::string_view pattern_kind_name(PatternKind k) {
  switch (k) {
    case PatternKind::Infix: return "infix";
    case PatternKind::Prefix: return "prefix";
    case PatternKind::Preventive: return "preventive";
  }
  return "infix";
}

std::string PatternRule::id() const {
  return std::string(pattern_kind_name(kind)) + ":" + (connectors.empty() ? "" : connectors.front());
}

namespace {

const std::set<std::string> kQuestionWords = {"when", "how", "where"};
const std::set<std::string> kArticles = {"a", "an", "the"};
const std::set<std::string> kAuxiliaries = {"be",    "is",    "are",   "was",   "were",  "been",
                                            "being", "am",    "have",  "has",   "had",   "do",
                                            "does",  "did",   "will",  "would", "can",   "could",
                                            "may",   "might", "shall", "should", "must", "get"};
const std::set<std::string> kFillers = {"to", "still", "just", "also", "not", "reportedly",
                                        "now", "again", "nearly", "almost"};
const std::set<std::string> kPrepositions = {
    "in",   "at",      "on",      "near",   "into",    "onto",   "from",   "for",
    "of",   "with",    "by",      "to",     "across",  "against", "during", "through",
    "toward", "towards", "under", "over",   "amid",    "inside", "outside", "off", "around"};
const std::set<std::string> kParticles = {"up", "down", "out", "off", "over", "away", "back"};
const std::set<std::string> kNumberWords = {
    "one",      "two",      "three",    "four",    "five",     "six",     "seven",
    "eight",    "nine",     "ten",      "eleven",  "twelve",   "twenty",  "dozen",
    "dozens",   "hundred",  "hundreds", "thousand", "thousands", "million", "millions",
    "billion",  "billions", "scores"};
const std::set<std::string> kPronouns = {"he",  "she", "it",   "they", "him",  "her",
                                         "them", "his", "its",  "their", "himself", "herself",
                                         "itself", "themselves"};
const std::set<std::string> kReflexives = {"himself", "herself", "itself", "themselves"};

struct Token {
  std::string text;
  bool comma_after = false;
};

bool strip_utf8_quote_front(std::string& s) {
  static const char* quotes[] = {"\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x98", "\xE2\x80\x99"};
  for (const char* q : quotes) {
    if (s.rfind(q, 0) == 0) {
      s.erase(0, 3);
      return true;
    }
  }
  return false;
}

bool strip_utf8_quote_back(std::string& s) {
  static const char* quotes[] = {"\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x98", "\xE2\x80\x99"};
  for (const char* q : quotes) {
    if (s.size() >= 3 && s.compare(s.size() - 3, 3, q) == 0) {
      s.erase(s.size() - 3);
      return true;
    }
  }
  return false;
}

Token normalize_raw(std::string_view raw) {
  Token tok;
  std::string s = to_lower(raw);
  static const std::string lead = "\"'([{";
  static const std::string trail = "\"')]},;:!?";
  bool changed = true;
  while (changed && !s.empty()) {
    changed = false;
    if (lead.find(s.front()) != std::string::npos) {
      s.erase(0, 1);
      changed = true;
    } else if (strip_utf8_quote_front(s)) {
      changed = true;
    }
  }
  changed = true;
  while (changed && !s.empty()) {
    changed = false;
    if (trail.find(s.back()) != std::string::npos) {
      if (s.back() == ',') tok.comma_after = true;
      s.pop_back();
      changed = true;
    } else if (strip_utf8_quote_back(s)) {
      changed = true;
    } else if (s.back() == '.' && s.find('.') == s.size() - 1) {
      // a lone trailing period ends the sentence; "u.s." keeps its dots
      s.pop_back();
      changed = true;
    }
  }
  for (const char* poss : {"'s", "\xE2\x80\x99s"}) {
    std::string_view p(poss);
    if (s.size() > p.size() && s.compare(s.size() - p.size(), p.size(), p) == 0) {
      s.erase(s.size() - p.size());
    }
  }
  tok.text = std::move(s);
  return tok;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (in >> raw) {
    Token t = normalize_raw(raw);
    if (t.text.empty()) {
      if (t.comma_after && !out.empty()) out.back().comma_after = true;
      continue;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string join(const std::vector<std::string>& toks, std::size_t b, std::size_t e) {
  std::string out;
  for (std::size_t i = b; i < e; ++i) {
    if (i > b) out += ' ';
    out += toks[i];
  }
  return out;
}

std::vector<std::string> split_alternatives(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t bar = s.find('|', start);
    auto piece = trim(s.substr(start, bar == std::string_view::npos ? bar : bar - start));
    auto toks = normalize_tokens(piece);
    if (!toks.empty()) out.push_back(join(toks, 0, toks.size()));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

// A token span resolved against the lexicons.
struct Chunk {
  std::string surface;
  std::string lemma;
};

std::vector<Chunk> chunk_tokens(const std::vector<std::string>& toks, const Lexicons& lex) {
  std::vector<Chunk> out;
  std::size_t i = 0;
  while (i < toks.size()) {
    std::size_t len = std::min(lex.max_phrase_tokens(), toks.size() - i);
    for (; len > 1; --len) {
      if (lex.knows_phrase(join(toks, i, i + len))) break;
    }
    std::string surface = join(toks, i, i + len);
    out.push_back({surface, lex.lemma(surface)});
    i += len;
  }
  return out;
}

const VerbEntry* verb_of(const Chunk& c, const Lexicons& lex) {
  if (const VerbEntry* v = lex.verb(c.lemma)) return v;
  return lex.verb(c.surface);
}

bool has_verb(const std::vector<std::string>& toks, std::size_t b, std::size_t e, const Lexicons& lex) {
  std::vector<std::string> span(toks.begin() + static_cast<std::ptrdiff_t>(b),
                                toks.begin() + static_cast<std::ptrdiff_t>(e));
  for (const auto& c : chunk_tokens(span, lex)) {
    if (verb_of(c, lex)) return true;
  }
  return false;
}

bool contains(const std::vector<std::string>& list, const std::string& word) {
  return std::find(list.begin(), list.end(), word) != list.end();
}

bool constraints_hold(const PatternConstraints& c, const std::vector<std::string>& toks,
                      std::size_t s1b, std::size_t s1e, std::size_t s2b, std::size_t s2e,
                      const Lexicons& lex) {
  if (contains(c.s1_forbidden_leading, toks[s1b])) return false;
  if (contains(c.s2_forbidden_leading, toks[s2b])) return false;
  for (std::size_t i = s1b; i < s1e; ++i) {
    if (contains(c.s1_forbidden_words, toks[i])) return false;
  }
  if (c.s1_no_leading_number && is_number_token(toks[s1b])) return false;
  if (c.s2_requires_verb && !has_verb(toks, s2b, s2e, lex)) return false;
  if (c.no_extra_verbs && (has_verb(toks, s1b, s1e, lex) || has_verb(toks, s2b, s2e, lex))) {
    return false;
  }
  return true;
}

std::optional<CausalMatch> try_rule(const PatternRule& rule, const std::vector<Token>& tokens,
                                    const Lexicons& lex) {
  std::vector<std::string> toks;
  toks.reserve(tokens.size());
  for (const auto& t : tokens) toks.push_back(t.text);
  const std::size_t n = toks.size();

  auto make = [&](std::size_t s1b, std::size_t s1e, std::size_t s2b, std::size_t s2e) {
    CausalMatch m;
    std::string s1 = join(toks, s1b, s1e), s2 = join(toks, s2b, s2e);
    m.cause = rule.cause_capture == 1 ? s1 : s2;
    m.effect = rule.cause_capture == 1 ? s2 : s1;
    m.pattern_id = rule.id();
    m.cause_capture = rule.cause_capture;
    m.preventive = rule.kind == PatternKind::Preventive;
    return m;
  };

  for (const auto& alt : rule.connectors) {
    auto conn = normalize_tokens(alt);
    const std::size_t len = conn.size();
    if (len == 0 || len >= n) continue;
    if (rule.kind == PatternKind::Prefix) {
      if (!std::equal(conn.begin(), conn.end(), toks.begin())) continue;
      for (std::size_t j = len; j + 1 < n; ++j) {
        if (!tokens[j].comma_after) continue;
        if (constraints_hold(rule.constraints, toks, len, j + 1, j + 1, n, lex)) {
          return make(len, j + 1, j + 1, n);
        }
        break;  // only the first comma splits the captures
      }
      continue;
    }
    for (std::size_t pos = 1; pos + len < n; ++pos) {
      if (!std::equal(conn.begin(), conn.end(), toks.begin() + static_cast<std::ptrdiff_t>(pos))) {
        continue;
      }
      if (constraints_hold(rule.constraints, toks, 0, pos, pos + len, n, lex)) {
        return make(0, pos, pos + len, n);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> normalize_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : tokenize(text)) out.push_back(std::move(t.text));
  return out;
}

bool is_number_token(std::string_view token) {
  if (token.empty()) return false;
  if (kNumberWords.count(std::string(token))) return true;
  if (token == "[number]") return true;
  bool digit = false;
  for (char c : token) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c != ',' && c != '.') {
      return false;
    }
  }
  return digit;
}

PatternConstraints default_constraints(PatternKind kind, std::string_view connector) {
  PatternConstraints c;
  const std::vector<std::string> qwords(kQuestionWords.begin(), kQuestionWords.end());
  if (connector == "after") {
    if (kind == PatternKind::Prefix) {
      c.s1_no_leading_number = true;
    } else {
      c.s1_forbidden_leading = qwords;
      c.s2_forbidden_leading = {"all", "hours", "minutes", "years", "long", "decades"};
    }
  } else if (connector == "as") {
    c.s2_requires_verb = true;
  } else if (connector == "lead to" || connector == "leads to" || connector == "led to" ||
             connector == "cause" || connector == "causes" || connector == "caused") {
    c.s1_forbidden_words = qwords;
    c.s1_forbidden_leading = {"study", "studies"};
    c.no_extra_verbs = true;
  } else {
    // causal prepositions, "because", preventive connectors
    c.s1_forbidden_leading = qwords;
  }
  return c;
}

std::vector<PatternRule> default_rules() {
  auto rule = [](int prio, PatternKind kind, std::string connectors, int cause) {
    PatternRule r;
    r.priority = prio;
    r.kind = kind;
    r.connectors = split_alternatives(connectors);
    r.cause_capture = cause;
    r.constraints = default_constraints(kind, r.connectors.front());
    return r;
  };
  return {
      rule(1, PatternKind::Infix, "lead to|leads to|led to|cause|causes|caused", 1),
      rule(2, PatternKind::Infix, "because of", 2),
      rule(3, PatternKind::Infix, "due to", 2),
      rule(4, PatternKind::Infix, "because", 2),
      rule(5, PatternKind::Prefix, "after", 1),
      rule(6, PatternKind::Infix, "after", 2),
      rule(7, PatternKind::Infix, "as", 2),
      rule(8, PatternKind::Preventive, "despite", 2),
  };
}

void sort_rules(std::vector<PatternRule>& rules) {
  std::sort(rules.begin(), rules.end(),
            [](const PatternRule& a, const PatternRule& b) { return a.priority < b.priority; });
  for (std::size_t i = 1; i < rules.size(); ++i) {
    if (rules[i].priority == rules[i - 1].priority) {
      throw Error("config", "duplicate pattern priority " + std::to_string(rules[i].priority));
    }
  }
}

std::vector<PatternRule> load_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open pattern file " + path);
  std::vector<PatternRule> rules;
  std::set<int> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (is_blank_or_comment(line)) continue;
    auto f = split_tabs(line);
    if (f.size() != 4) throw LoadError(path, lineno, "expected priority<TAB>kind<TAB>connector<TAB>direction");
    PatternRule r;
    try {
      std::size_t used = 0;
      r.priority = std::stoi(f[0], &used);
      if (used != f[0].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw LoadError(path, lineno, "bad priority '" + f[0] + "'");
    }
    if (!seen.insert(r.priority).second) {
      throw LoadError(path, lineno, "duplicate priority " + f[0]);
    }
    if (f[1] == "infix") {
      r.kind = PatternKind::Infix;
    } else if (f[1] == "prefix") {
      r.kind = PatternKind::Prefix;
    } else if (f[1] == "preventive") {
      r.kind = PatternKind::Preventive;
    } else {
      throw LoadError(path, lineno, "unknown pattern kind '" + f[1] + "'");
    }
    r.connectors = split_alternatives(f[2]);
    if (r.connectors.empty()) throw LoadError(path, lineno, "empty connector");
    if (f[3] == "s1") {
      r.cause_capture = 1;
    } else if (f[3] == "s2") {
      r.cause_capture = 2;
    } else {
      throw LoadError(path, lineno, "direction must be s1 or s2");
    }
    r.constraints = default_constraints(r.kind, r.connectors.front());
    rules.push_back(std::move(r));
  }
  sort_rules(rules);
  return rules;
}

std::optional<CausalMatch> match_causality(std::string_view headline,
                                           const std::vector<PatternRule>& rules,
                                           const Lexicons& lex) {
  auto tokens = tokenize(headline);
  if (tokens.size() < 3) return std::nullopt;
  std::vector<const PatternRule*> ordered;
  for (const auto& r : rules) ordered.push_back(&r);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const PatternRule* a, const PatternRule* b) { return a->priority < b->priority; });
  for (const PatternRule* r : ordered) {
    if (auto m = try_rule(*r, tokens, lex)) return m;
  }
  return std::nullopt;
}

namespace {

std::map<std::string, double> bag_of_words(std::string_view text) {
  std::map<std::string, double> bag;
  for (const auto& t : normalize_tokens(text)) bag[t] += 1.0;
  return bag;
}

double cosine(const std::map<std::string, double>& a, const std::map<std::string, double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (const auto& [w, c] : a) {
    na += c * c;
    auto it = b.find(w);
    if (it != b.end()) dot += c * it->second;
  }
  for (const auto& [w, c] : b) nb += c * c;
  if (na == 0 || nb == 0) return 0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

class Structurer {
 public:
  Structurer(const Lexicons& lex, const ConceptGraph& graph, const StructureContext& ctx,
             std::string_view fragment)
      : lex_(lex), graph_(graph) {
    std::string_view context = !ctx.body.empty() ? std::string_view(ctx.body)
                               : !ctx.headline.empty() ? std::string_view(ctx.headline)
                                                       : fragment;
    context_bag_ = bag_of_words(context);
  }

  // Graph concept for a chunk, disambiguated by gloss overlap.
  std::optional<std::string> resolve(const Chunk& c) const {
    const std::vector<std::string>* cands = lex_.label_candidates(c.surface);
    if (!cands) cands = lex_.label_candidates(c.lemma);
    if (!cands) return std::nullopt;
    std::optional<std::string> best;
    double best_score = -1;
    for (const auto& id : *cands) {  // sorted, so ties keep the smallest id
      if (!graph_.contains(id)) continue;
      const std::string* g = lex_.gloss(id);
      double score = g ? cosine(bag_of_words(*g), context_bag_) : 0.0;
      if (score > best_score) {
        best_score = score;
        best = id;
      }
    }
    return best;
  }

  struct Phrase {
    OptValue head;
    bool head_is_location = false;
    std::optional<std::string> attr;
    std::vector<Value> locations;  // location modifiers other than the head
  };

  Phrase analyze(const std::vector<Chunk>& chunks) const {
    struct Item {
      const Chunk* chunk;
      std::optional<std::string> cid;
      bool number;
    };
    std::vector<Item> items;
    for (const auto& c : chunks) {
      if (kArticles.count(c.surface) || kAuxiliaries.count(c.surface) || kFillers.count(c.surface)) {
        continue;
      }
      bool number = is_number_token(c.surface);
      items.push_back({&c, number ? std::nullopt : resolve(c), number});
    }
    Phrase p;
    std::optional<std::size_t> head;
    for (std::size_t i = items.size(); i-- > 0;) {
      if (items[i].cid) {
        head = i;
        break;
      }
    }
    if (!head) {
      for (std::size_t i = items.size(); i-- > 0;) {
        if (!items[i].number) {
          head = i;
          break;
        }
      }
    }
    std::string attr;
    auto add_attr = [&](const std::string& s) {
      if (!attr.empty()) attr += ' ';
      attr += s;
    };
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Item& it = items[i];
      if (head && i == *head) continue;
      if (it.cid) {
        if (lex_.is_location(*it.cid)) p.locations.push_back(Value::of_concept(*it.cid));
        continue;
      }
      if (!head || i < *head) add_attr(it.chunk->surface);
    }
    if (head) {
      const Item& h = items[*head];
      if (h.cid) {
        p.head = Value::of_concept(*h.cid);
        p.head_is_location = lex_.is_location(*h.cid);
      } else {
        p.head = Value::constant(to_lower(h.chunk->lemma));
      }
    }
    if (!attr.empty()) p.attr = attr;
    return p;
  }

  // Splits a region at prepositions: segment 0 is the bare NP, later
  // segments carry their preposition.
  static std::vector<std::pair<std::string, std::vector<Chunk>>> segments(
      const std::vector<Chunk>& region) {
    std::vector<std::pair<std::string, std::vector<Chunk>>> out;
    out.push_back({"", {}});
    for (const auto& c : region) {
      if (kPrepositions.count(c.surface)) {
        out.push_back({c.surface, {}});
      } else {
        out.back().second.push_back(c);
      }
    }
    return out;
  }

  Event run(std::string_view text, const Date& date) const {
    auto chunks = chunk_tokens(normalize_tokens(text), lex_);
    Event e;
    e.time = date;

    std::optional<std::size_t> verb_at;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      if (!verb_of(chunks[i], lex_)) continue;
      bool aux = kAuxiliaries.count(chunks[i].surface) || kAuxiliaries.count(chunks[i].lemma);
      if (!aux) {
        verb_at = i;
        break;
      }
      if (!verb_at) verb_at = i;
    }
    // An auxiliary only stands as the verb when nothing else qualifies.
    if (verb_at && (kAuxiliaries.count(chunks[*verb_at].lemma))) {
      for (std::size_t i = *verb_at + 1; i < chunks.size(); ++i) {
        if (verb_of(chunks[i], lex_) && !kAuxiliaries.count(chunks[i].lemma)) {
          verb_at = i;
          break;
        }
      }
    }

    std::vector<Chunk> pre, post;
    const VerbEntry* verb = nullptr;
    std::vector<Slot> pre_roles{Slot::Actor}, post_roles{Slot::Object};
    bool nominal = false;

    if (!verb_at) {
      auto first = std::find_if(chunks.begin(), chunks.end(),
                                [](const Chunk& c) { return !kArticles.count(c.surface); });
      if (first == chunks.end() || !is_number_token(first->surface)) {
        throw Error("no action", "no verb-table entry in '" + std::string(text) + "'");
      }
      const VerbEntry* be = lex_.verb("be");
      e[Slot::Action] = be ? Value::of_concept(be->class_concept) : Value::constant("be");
      pre.assign(chunks.begin(), first + 1);
      post.assign(first + 1, chunks.end());
    } else {
      verb = verb_of(chunks[*verb_at], lex_);
      e[Slot::Action] = Value::of_concept(verb->class_concept);
      if (auto r = verb->pre_roles(); !r.empty()) pre_roles = r;
      post_roles = verb->post_roles();
      bool last_content = true;
      for (std::size_t i = *verb_at + 1; i < chunks.size(); ++i) {
        if (!kArticles.count(chunks[i].surface) && !kFillers.count(chunks[i].surface)) {
          last_content = false;
        }
      }
      // Headline noun compounds ("louisiana flood"): the verb word is also a
      // concept and closes the fragment, so it heads the subject phrase.
      nominal = last_content && *verb_at > 0 && resolve(chunks[*verb_at]).has_value();
      if (nominal) {
        pre.assign(chunks.begin(), chunks.begin() + static_cast<std::ptrdiff_t>(*verb_at) + 1);
      } else {
        pre.assign(chunks.begin(), chunks.begin() + static_cast<std::ptrdiff_t>(*verb_at));
        std::size_t i = *verb_at + 1;
        // phrasal particle directly after the verb ("pulling over a car")
        if (i + 1 < chunks.size() && kParticles.count(chunks[i].surface) &&
            !kPrepositions.count(chunks[i + 1].surface)) {
          ++i;
        }
        post.assign(chunks.begin() + static_cast<std::ptrdiff_t>(i), chunks.end());
      }
    }

    std::vector<Value> loose_locations;
    auto fill_location = [&](const Value& v) {
      if (!e[Slot::Location]) e[Slot::Location] = v;
    };
    auto place = [&](const Phrase& p, std::optional<Slot> role) {
      for (const auto& l : p.locations) loose_locations.push_back(l);
      if (!role) return;
      if (*role == Slot::Object && p.head && p.head_is_location && !e[Slot::Location] &&
          !e[Slot::Object]) {
        e[Slot::Location] = p.head;
        if (p.attr) e.object_attr = p.attr;
        return;
      }
      if (p.head && !e[*role]) e[*role] = p.head;
      if (p.attr) {
        if (*role == Slot::Actor && !e.actor_attr) e.actor_attr = p.attr;
        if (*role == Slot::Object && !e.object_attr) e.object_attr = p.attr;
      }
    };
    auto prepositional = [&](const std::string& prep, const std::vector<Chunk>& np) {
      if (np.empty()) return;
      Phrase p = analyze(np);
      if (prep == "with") {
        if (p.head && !e[Slot::Instrument]) e[Slot::Instrument] = p.head;
        return;
      }
      if (p.head && p.head_is_location) fill_location(*p.head);
      for (const auto& l : p.locations) fill_location(l);
    };

    auto pre_segments = segments(pre);
    auto post_segments = segments(post);
    for (std::size_t i = 1; i < pre_segments.size(); ++i) {
      prepositional(pre_segments[i].first, pre_segments[i].second);
    }
    for (std::size_t i = 1; i < post_segments.size(); ++i) {
      prepositional(post_segments[i].first, post_segments[i].second);
    }
    if (!pre_segments[0].second.empty()) place(analyze(pre_segments[0].second), pre_roles.back());
    if (!post_segments[0].second.empty()) {
      std::optional<Slot> role;
      if (!post_roles.empty()) role = post_roles.front();
      place(analyze(post_segments[0].second), role);
    }
    for (const auto& l : loose_locations) fill_location(l);
    return e;
  }

 private:
  const Lexicons& lex_;
  const ConceptGraph& graph_;
  std::map<std::string, double> context_bag_;
};

bool is_pronoun(const OptValue& v) {
  return v && v->is_constant() && kPronouns.count(v->text);
}

Value people_value(const Lexicons& lex, const ConceptGraph& graph) {
  if (const auto* cands = lex.label_candidates("people")) {
    for (const auto& id : *cands) {
      if (graph.contains(id)) return Value::of_concept(id);
    }
  }
  return Value::constant("people");
}

void resolve_pronouns(Event& e, const Event& sibling) {
  for (Slot s : {Slot::Actor, Slot::Object, Slot::Instrument, Slot::Location}) {
    if (!is_pronoun(e[s])) continue;
    bool reflexive = kReflexives.count(e[s]->text) > 0;
    if (reflexive && s != Slot::Actor && e.actor() && !is_pronoun(e.actor())) {
      e[s] = e.actor();
    } else if (sibling.actor() && !is_pronoun(sibling.actor())) {
      e[s] = sibling.actor();
    }
  }
}

}  // namespace

Event structure_event(std::string_view text, const Date& date, const Lexicons& lex,
                      const ConceptGraph& graph, const StructureContext& context) {
  if (trim(text).empty()) throw Error("no action", "empty fragment");
  return Structurer(lex, graph, context, text).run(text, date);
}

void apply_single_event_heuristics(Event& e, const Lexicons& lex, const ConceptGraph& graph) {
  if (e.actor() || !e.actor_attr) return;
  auto words = normalize_tokens(*e.actor_attr);
  if (!words.empty() && is_number_token(words.front())) e[Slot::Actor] = people_value(lex, graph);
}

void apply_heuristics(Event& cause, Event& effect, const CausalMatch& match, const Lexicons& lex,
                      const ConceptGraph& graph) {
  resolve_pronouns(cause, effect);
  resolve_pronouns(effect, cause);

  // Missing context: the second fragment borrows the first one's subject.
  // A post-verb location counts as context ("earthquake hits turkey").
  Event& second = match.cause_capture == 2 ? cause : effect;
  const Event& first = match.cause_capture == 2 ? effect : cause;
  if (!second.object() && !second.location() && first.actor() && first.actor()->is_concept() &&
      second.actor() != first.actor()) {
    second[Slot::Object] = first.actor();
  }

  apply_single_event_heuristics(cause, lex, graph);
  apply_single_event_heuristics(effect, lex, graph);

  if (match.preventive) effect.polarity = false;
}

std::string ExtractionReport::table() const {
  std::ostringstream out;
  out << "lines\t" << lines << "\n";
  out << "unmatched\t" << unmatched << "\n";
  out << "malformed\t" << malformed << "\n";
  std::set<std::string> ids;
  for (const auto& [k, v] : matched) ids.insert(k);
  if (!ids.empty()) out << "pattern\tmatched\textracted\tdropped\n";
  auto get = [](const std::map<std::string, std::size_t>& m, const std::string& k) {
    auto it = m.find(k);
    return it == m.end() ? std::size_t{0} : it->second;
  };
  for (const auto& id : ids) {
    out << id << "\t" << get(matched, id) << "\t" << get(extracted, id) << "\t"
        << get(dropped_by_pattern, id) << "\n";
  }
  for (const auto& [kind, n] : dropped_by_error) out << "dropped[" << kind << "]\t" << n << "\n";
  return out.str();
}

ExtractionResult extract_lines(std::string_view corpus_text, const std::vector<PatternRule>& rules,
                               const Lexicons& lex, const ConceptGraph& graph) {
  ExtractionResult result;
  auto& rep = result.report;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < corpus_text.size()) {
    std::size_t nl = corpus_text.find('\n', pos);
    std::string line(corpus_text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    pos = nl == std::string_view::npos ? corpus_text.size() : nl + 1;
    ++lineno;
    strip_cr(line);
    if (is_blank_or_comment(line)) continue;
    ++rep.lines;
    auto f = split_tabs(line);
    std::optional<Date> date;
    if (f.size() == 2 || f.size() == 3) date = Date::parse(trim(f[0]));
    if (!date || trim(f[1]).empty()) {
      ++rep.malformed;
      rep.malformed_lines.push_back(lineno);
      continue;
    }
    const std::string& headline = f[1];
    auto m = match_causality(headline, rules, lex);
    if (!m) {
      ++rep.unmatched;
      continue;
    }
    ++rep.matched[m->pattern_id];
    StructureContext ctx{headline, f.size() == 3 ? f[2] : std::string()};
    try {
      Event cause = structure_event(m->cause, *date, lex, graph, ctx);
      Event effect = structure_event(m->effect, *date, lex, graph, ctx);
      apply_heuristics(cause, effect, *m, lex, graph);
      result.pairs.push_back({std::move(cause), std::move(effect), headline, m->pattern_id});
      ++rep.extracted[m->pattern_id];
    } catch (const Error& err) {
      ++rep.dropped_by_error[err.kind()];
      ++rep.dropped_by_pattern[m->pattern_id];
    }
  }
  return result;
}

ExtractionResult extract_corpus(const std::string& path, const std::vector<PatternRule>& rules,
                                const Lexicons& lex, const ConceptGraph& graph) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open corpus file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return extract_lines(ss.str(), rules, lex, graph);
}

}  // namespace pundit
