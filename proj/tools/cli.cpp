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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pundit/abstree.hpp"
#include "pundit/config.hpp"
#include "pundit/event.hpp"
#include "pundit/extractor.hpp"
#include "pundit/kgraph.hpp"
#include "pundit/lexicon.hpp"
#include "pundit/model.hpp"
#include "pundit/predictor.hpp"

namespace pundit::cli {

namespace {

std::string fixed(double v, int digits = 6) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Soft failures surface as exit code 1 instead of 2.
struct SoftFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigFlags {
  std::string config_file;
  std::optional<std::string> aggregator, isa_label;
  std::optional<int> k, max_rule_depth, bound, max_candidates;
  std::optional<double> alpha, percentile;

  void attach(CLI::App* app) {
    app->add_option("--config", config_file, "TAB-separated key/value config file (overrides PUNDIT_CONFIG)");
    app->add_option("--agg", aggregator, "similarity aggregator: average|min|max");
    app->add_option("--max-rule-depth", max_rule_depth, "longest predicate path in rules");
    app->add_option("--k", k, "distance of unrelated values and generalization path cap");
    app->add_option("--alpha", alpha, "PMCI add-alpha smoothing constant");
    app->add_option("--bound", bound, "IsA generalization levels for PMCI");
    app->add_option("--percentile", percentile, "PMCI threshold percentile of training effects");
    app->add_option("--max-candidates", max_candidates, "cap on candidate effects per rule");
    app->add_option("--isa-label", isa_label, "taxonomy label of the ontology");
  }

  // Built-in defaults, then the config file, then flags.
  Config resolve() const {
    Config cfg;
    std::string file = config_file;
    if (file.empty()) {
      if (const char* env = std::getenv("PUNDIT_CONFIG"); env && *env) file = env;
    }
    if (!file.empty()) cfg.apply(Config::read_file(file));
    if (aggregator) cfg.set("aggregator", *aggregator);
    if (isa_label) cfg.set("isa_label", *isa_label);
    if (k) cfg.set("max_concept_distance", std::to_string(*k));
    if (max_rule_depth) cfg.set("max_rule_depth", std::to_string(*max_rule_depth));
    if (bound) cfg.set("generalization_bound", std::to_string(*bound));
    if (max_candidates) cfg.set("max_effect_candidates", std::to_string(*max_candidates));
    if (alpha) cfg.set("pmci_alpha", format_double(*alpha));
    if (percentile) cfg.set("pmci_percentile", format_double(*percentile));
    return cfg;
  }

  static std::string format_double(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
  }
};

std::vector<PatternRule> load_patterns(const std::string& path) {
  return path.empty() ? default_rules() : load_pattern_file(path);
}

int cmd_extract(const std::string& corpus, const std::string& ontology, const std::string& lexicons,
                const std::string& out_path, const std::string& patterns, std::ostream& err) {
  auto graph = load_triples(ontology);
  auto lex = Lexicons::load_dir(lexicons, graph);
  auto rules = load_patterns(patterns);
  auto result = extract_corpus(corpus, rules, lex, graph);
  write_pairs_file(out_path, result.pairs);
  err << result.report.table();
  err << "pairs\t" << result.pairs.size() << "\n";
  return kExitOk;
}

int cmd_train(const std::string& pairs_path, const std::string& ontology, const std::string& lexicons,
              const std::string& out_path, const std::string& patterns, const Config& cfg,
              std::ostream& out, std::ostream& err) {
  auto graph = std::make_shared<const ConceptGraph>(load_triples(ontology));
  Lexicons lex = lexicons.empty() ? Lexicons() : Lexicons::load_dir(lexicons, *graph);
  auto pairs = read_pairs_file(pairs_path);
  if (pairs.empty()) throw Error("train", "pairs file " + pairs_path + " holds no pairs");
  Model model = train_model(std::move(pairs), graph, std::move(lex), cfg, load_patterns(patterns));
  model.save(out_path);
  if (model.constant_warnings > 0) {
    err << "warning: " << model.constant_warnings
        << " concept value(s) absent from the ontology were treated as constants\n";
  }
  out << "pairs\t" << model.pairs.size() << "\n";
  out << "nodes\t" << model.tree.size() << "\n";
  out << "rule_templates\t" << model.template_count() << "\n";
  out << "threshold\t" << fixed(model.threshold) << "\n";
  out << "constant_warnings\t" << model.constant_warnings << "\n";
  return kExitOk;
}

Date latest_date(const Model& model) {
  Date d;
  for (const auto& p : model.pairs) d = std::max(d, p.cause.time);
  return d;
}

int cmd_predict(const std::string& model_path, const std::string& headline, std::size_t top,
                bool show_pruned, bool as_json, std::ostream& out) {
  Model model = Model::load(model_path);
  Event cause;
  try {
    cause = structure_input(model, headline, latest_date(model));
  } catch (const Error& e) {
    if (e.kind() == "no action") throw SoftFailure(std::string("cannot structure headline: ") + e.what());
    throw;
  }
  PredictOptions opts;
  opts.top_n = top;
  opts.include_pruned = show_pruned;
  for (const auto& p : predict(model, cause, opts)) {
    if (as_json) {
      out << prediction_json(p) << "\n";
      continue;
    }
    out << fixed(p.similarity) << "  " << p.support << "  " << p.rendered;
    if (p.pruned) out << "  [pruned pmci=" << fixed(p.pmci, 4) << "]";
    out << "\n";
  }
  return kExitOk;
}

std::string pair_text(const CausalityPair& p, const Lexicons& lex) {
  return render(p.cause, lex) + "  =>  " + render(p.effect, lex);
}

int cmd_inspect(const std::string& model_path, std::optional<std::size_t> node_id, std::ostream& out) {
  Model model = Model::load(model_path);
  const auto& graph = *model.graph;
  if (!node_id) {
    out << "pairs\t" << model.pairs.size() << "\tnodes\t" << model.tree.size() << "\tthreshold\t"
        << fixed(model.threshold) << "\n";
    out << "id\tsize\theight\tmedoid\n";
    for (const auto& n : model.tree.nodes()) {
      out << n.id << "\t" << n.members.size() << "\t" << n.height << "\t"
          << pair_text(model.pairs[n.medoid], model.lexicons) << "\n";
    }
    return kExitOk;
  }
  if (*node_id >= model.tree.size()) {
    throw Error("usage", "node " + std::to_string(*node_id) + " does not exist (model has " +
                             std::to_string(model.tree.size()) + " nodes)");
  }
  const ATNode& n = model.tree.node(*node_id);
  const PredicateRule& rule = model.rules[n.id];
  out << "node\t" << n.id << "\n";
  out << "height\t" << n.height << "\n";
  out << "children\t";
  for (std::size_t i = 0; i < n.children.size(); ++i) out << (i ? "," : "") << n.children[i];
  out << "\n";
  out << "medoid\t" << n.medoid << "\t" << pair_text(model.pairs[n.medoid], model.lexicons) << "\n";
  out << "members\n";
  for (std::size_t m : n.members) out << "  " << m << "\t" << model.pairs[m].source << "\n";
  out << "rules\n";
  out << "  #\ttarget\tsource\tpath\tsupport\n";
  for (Slot s : kAllSlots) {
    auto ts = rule.for_slot(s);
    if (ts.empty()) {
      out << "  -\t" << slot_name(s) << "\tNULL\t-\t-\n";
      continue;
    }
    for (const RuleTemplate* t : ts) {
      out << "  " << (t - rule.templates.data()) << "\t" << slot_name(t->target) << "\t"
          << (t->literal ? "literal:" + t->value.encode() : "cause." + std::string(slot_name(t->source)))
          << "\t" << (t->path.empty() ? std::string("[]") : graph.path_text(t->path)) << "\t" << t->support
          << "\n";
    }
  }
  out << "clauses\n";
  out << "  pair\ttemplates\tfallback\n";
  for (const auto& c : rule.clauses) {
    out << "  " << c.pair << "\t";
    for (std::size_t i = 0; i < c.templates.size(); ++i) out << (i ? "," : "") << c.templates[i];
    if (c.templates.empty()) out << "-";
    out << "\t" << render(c.fallback, model.lexicons) << "\n";
  }
  out << "exemplar\t" << render(rule.exemplar, model.lexicons) << "\n";
  return kExitOk;
}

int cmd_eval(const std::string& model_path, const std::string& pairs_path, const std::string& ontology,
             std::size_t top, std::ostream& out, std::ostream& err) {
  Model model = Model::load(model_path);
  auto pairs = read_pairs_file(pairs_path);
  if (pairs.empty()) throw Error("eval", "pairs file " + pairs_path + " holds no pairs");
  if (!ontology.empty()) {
    auto g = load_triples(ontology);
    if (g.fingerprint() != model.graph->fingerprint()) {
      err << "warning: ontology " << ontology << " differs from the one the model was trained on\n";
    }
  }
  double rr_sum = 0;
  std::size_t hit1 = 0, hit3 = 0, candidates = 0, pruned = 0;
  for (const auto& p : pairs) {
    auto ranked = rank_candidates(model, p.cause);
    candidates += ranked.size();
    std::size_t rank = 0, position = 0;
    for (const auto& pred : ranked) {
      if (pred.pruned) {
        ++pruned;
        continue;
      }
      ++position;
      if (position > top) continue;
      if (rank == 0 && pred.effect.same_slots(p.effect)) rank = position;
    }
    if (rank > 0) rr_sum += 1.0 / static_cast<double>(rank);
    if (rank == 1) ++hit1;
    if (rank >= 1 && rank <= 3) ++hit3;
  }
  const double n = static_cast<double>(pairs.size());
  out << "pairs\t" << pairs.size() << "\n";
  out << "mrr\t" << fixed(rr_sum / n) << "\n";
  out << "hit@1\t" << fixed(static_cast<double>(hit1) / n) << "\n";
  out << "hit@3\t" << fixed(static_cast<double>(hit3) / n) << "\n";
  out << "pruned_fraction\t"
      << fixed(candidates ? static_cast<double>(pruned) / static_cast<double>(candidates) : 0.0) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pundit: causal event prediction from news headlines", "pundit"};
  app.require_subcommand(1);

  std::string corpus, ontology, lexicons, out_path, patterns, pairs_path, model_path, headline;
  std::size_t top = 10;
  bool show_pruned = false, as_json = false;
  std::optional<std::size_t> node_id;
  ConfigFlags flags;

  auto* extract = app.add_subcommand("extract", "mine cause/effect pairs from a dated headline corpus");
  extract->add_option("--corpus", corpus, "YYYY-MM-DD<TAB>headline[<TAB>body] lines")->required();
  extract->add_option("--ontology", ontology, "source<TAB>label<TAB>target triples")->required();
  extract->add_option("--lexicons", lexicons, "directory of lexicon files")->required();
  extract->add_option("--out", out_path, "pairs file to write")->required();
  extract->add_option("--patterns", patterns, "pattern override file");

  auto* train = app.add_subcommand("train", "build a prediction model from extracted pairs");
  train->add_option("--pairs", pairs_path, "pairs file")->required();
  train->add_option("--ontology", ontology, "triples file")->required();
  train->add_option("--out", out_path, "model file to write")->required();
  train->add_option("--lexicons", lexicons, "lexicon directory used to structure prediction input");
  train->add_option("--patterns", patterns, "pattern override file");
  flags.attach(train);

  auto* predict_cmd = app.add_subcommand("predict", "predict effects of a headline");
  predict_cmd->add_option("--model", model_path, "model file")->required();
  predict_cmd->add_option("headline", headline, "headline text")->required();
  predict_cmd->add_option("--top", top, "number of predictions");
  predict_cmd->add_flag("--show-pruned", show_pruned, "also list predictions removed by PMCI filtering");
  predict_cmd->add_flag("--json", as_json, "one JSON object per prediction");

  auto* inspect = app.add_subcommand("inspect", "dump the abstraction tree or one node's rules");
  inspect->add_option("--model", model_path, "model file")->required();
  inspect->add_option("--node", node_id, "node id");

  auto* eval = app.add_subcommand("eval", "rank metrics of a model on held-out pairs");
  eval->add_option("--model", model_path, "model file")->required();
  eval->add_option("--pairs", pairs_path, "pairs file")->required();
  eval->add_option("--ontology", ontology, "ontology to compare against the model's");
  eval->add_option("--top", top, "rank cut-off");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << "\n";
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    err << "run 'pundit --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (*extract) return cmd_extract(corpus, ontology, lexicons, out_path, patterns, err);
    if (*train) return cmd_train(pairs_path, ontology, lexicons, out_path, patterns, flags.resolve(), out, err);
    if (*predict_cmd) return cmd_predict(model_path, headline, top, show_pruned, as_json, out);
    if (*inspect) return cmd_inspect(model_path, node_id, out);
    if (*eval) return cmd_eval(model_path, pairs_path, ontology, top, out, err);
  } catch (const SoftFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitSoftFailure;
  } catch (const Error& e) {
    err << "error (" << e.kind() << "): " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pundit::cli
