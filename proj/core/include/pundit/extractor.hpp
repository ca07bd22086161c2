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

#ifndef PUNDIT_EXTRACTOR_HPP_
#define PUNDIT_EXTRACTOR_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pundit/event.hpp"
#include "pundit/kgraph.hpp"
#include "pundit/lexicon.hpp"

namespace pundit {

enum class PatternKind {
  Infix,       // [s1] connector [s2]
  Prefix,      // connector [s1], [s2]
  Preventive,  // [s1] connector [s2]; the effect is negated
};

std::string_view pattern_kind_name(PatternKind k);

// Syntactic constraints on the two captures of a pattern.
struct PatternConstraints {
  std::vector<std::string> s1_forbidden_leading;
  std::vector<std::string> s2_forbidden_leading;
  std::vector<std::string> s1_forbidden_words;  // anywhere in s1
  bool s1_no_leading_number = false;
  bool s2_requires_verb = false;
  bool no_extra_verbs = false;  // neither capture may contain a verb

  bool operator==(const PatternConstraints&) const = default;
};

struct PatternRule {
  int priority = 0;  // lower is tried first
  PatternKind kind = PatternKind::Infix;
  std::vector<std::string> connectors;  // lower-case alternatives, e.g. "lead to"
  int cause_capture = 2;                // 1 or 2
  PatternConstraints constraints;

  // "<kind>:<first connector>", e.g. "infix:as".
  std::string id() const;

  bool operator==(const PatternRule&) const = default;
};

// Constraint preset for a connector, following the usual headline rules:
// "after" (both forms), "as", the causal prepositions, and the periphrastic
// "lead to" / "cause" family.
PatternConstraints default_constraints(PatternKind kind, std::string_view connector);

// The built-in eight rules ordered by priority.
std::vector<PatternRule> default_rules();

// `priority<TAB>kind<TAB>connector[|connector...]<TAB>s1|s2` lines. Throws
// LoadError on malformed lines or duplicate priorities.
std::vector<PatternRule> load_pattern_file(const std::string& path);

// Sorts by priority; throws Error("config") on duplicate priorities.
void sort_rules(std::vector<PatternRule>& rules);

struct CausalMatch {
  std::string cause;  // normalized capture text
  std::string effect;
  std::string pattern_id;
  int cause_capture = 2;
  bool preventive = false;
};

// Lower-cased tokens with edge punctuation removed.
std::vector<std::string> normalize_tokens(std::string_view text);
bool is_number_token(std::string_view token);

// First rule (by priority) whose pattern matches with all constraints
// satisfied. Verb constraints consult the verb table of `lex`.
std::optional<CausalMatch> match_causality(std::string_view headline,
                                           const std::vector<PatternRule>& rules,
                                           const Lexicons& lex);

struct StructureContext {
  std::string headline;  // full headline, used for disambiguation
  std::string body;      // article body; preferred over the headline when set
};

// Headline fragment -> Event. Throws Error("no action") when no verb-table
// entry is found (a bare leading number falls back to the "be" action).
Event structure_event(std::string_view text, const Date& date, const Lexicons& lex,
                      const ConceptGraph& graph, const StructureContext& context = {});

// Missing-context, numeric-subject, pronoun and negation fixes on an
// extracted pair, in that order of concern (pronouns are resolved first).
void apply_heuristics(Event& cause, Event& effect, const CausalMatch& match, const Lexicons& lex,
                      const ConceptGraph& graph);

// Applies only the single-event fixes (numeric subject) used when an input
// headline is structured for prediction.
void apply_single_event_heuristics(Event& e, const Lexicons& lex, const ConceptGraph& graph);

struct ExtractionReport {
  std::size_t lines = 0;
  std::size_t unmatched = 0;
  std::size_t malformed = 0;
  std::vector<std::size_t> malformed_lines;
  std::map<std::string, std::size_t> matched;             // pattern id -> lines matched
  std::map<std::string, std::size_t> extracted;           // pattern id -> pairs kept
  std::map<std::string, std::size_t> dropped_by_pattern;  // pattern id -> pairs dropped
  std::map<std::string, std::size_t> dropped_by_error;    // error kind -> pairs dropped

  std::string table() const;
};

struct ExtractionResult {
  std::vector<CausalityPair> pairs;
  ExtractionReport report;
};

// `YYYY-MM-DD<TAB>headline[<TAB>body]` per line; output preserves input order.
ExtractionResult extract_lines(std::string_view corpus_text, const std::vector<PatternRule>& rules,
                               const Lexicons& lex, const ConceptGraph& graph);
ExtractionResult extract_corpus(const std::string& path, const std::vector<PatternRule>& rules,
                                const Lexicons& lex, const ConceptGraph& graph);

}  // namespace pundit

#endif  // PUNDIT_EXTRACTOR_HPP_
