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

#include "pundit/config.hpp"

#include <charconv>
#include <fstream>

#include "pundit/types.hpp"
#include "text_util.hpp"

namespace pundit {

std::string_view aggregator_name(Aggregator a) {
  switch (a) {
    case Aggregator::Average: return "average";
    case Aggregator::Minimum: return "minimum";
    case Aggregator::Maximum: return "maximum";
  }
  return "average";
}

Aggregator parse_aggregator(std::string_view name) {
  if (name == "average" || name == "avg") return Aggregator::Average;
  if (name == "minimum" || name == "min") return Aggregator::Minimum;
  if (name == "maximum" || name == "max") return Aggregator::Maximum;
  throw Error("config", "unknown aggregator '" + std::string(name) + "'");
}

namespace {

int to_int(std::string_view key, std::string_view v, int min) {
  int out = 0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size() || out < min) {
    throw Error("config", "bad integer for " + std::string(key) + ": '" + std::string(v) + "'");
  }
  return out;
}

double to_double(std::string_view key, std::string_view v, double min, double max) {
  std::string s(v);
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || !(out >= min && out <= max)) {
    throw Error("config", "bad number for " + std::string(key) + ": '" + s + "'");
  }
  return out;
}

}  // namespace

void Config::set(std::string_view key, std::string_view value) {
  if (key == "max_concept_distance") {
    max_concept_distance = to_int(key, value, 1);
  } else if (key == "isa_label") {
    if (value.empty()) throw Error("config", "isa_label must not be empty");
    isa_label = std::string(value);
  } else if (key == "max_rule_depth") {
    max_rule_depth = to_int(key, value, 0);
  } else if (key == "aggregator") {
    aggregator = parse_aggregator(value);
  } else if (key == "pmci_alpha") {
    pmci_alpha = to_double(key, value, 1e-12, 1e9);  // zero would leave log(0)
  } else if (key == "generalization_bound") {
    generalization_bound = to_int(key, value, 0);
  } else if (key == "pmci_percentile") {
    pmci_percentile = to_double(key, value, 0.0, 100.0);
  } else if (key == "max_effect_candidates") {
    max_effect_candidates = to_int(key, value, 1);
  } else {
    throw Error("config", "unknown config key '" + std::string(key) + "'");
  }
}

void Config::apply(const std::map<std::string, std::string>& kv) {
  for (const auto& [k, v] : kv) set(k, v);
}

std::map<std::string, std::string> Config::to_map() const {
  return {
      {"aggregator", std::string(aggregator_name(aggregator))},
      {"generalization_bound", std::to_string(generalization_bound)},
      {"isa_label", isa_label},
      {"max_concept_distance", std::to_string(max_concept_distance)},
      {"max_effect_candidates", std::to_string(max_effect_candidates)},
      {"max_rule_depth", std::to_string(max_rule_depth)},
      {"pmci_alpha", format_real(pmci_alpha)},
      {"pmci_percentile", format_real(pmci_percentile)},
  };
}

std::map<std::string, std::string> Config::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (is_blank_or_comment(line)) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw LoadError(path, lineno, "expected key<TAB>value");
    }
    out[fields[0]] = fields[1];
  }
  return out;
}

}  // namespace pundit
