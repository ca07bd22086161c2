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

#ifndef PUNDIT_CONFIG_HPP_
#define PUNDIT_CONFIG_HPP_

#include <map>
#include <string>
#include <string_view>

namespace pundit {

enum class Aggregator { Average, Minimum, Maximum };

std::string_view aggregator_name(Aggregator a);
// Accepts "average"/"avg", "minimum"/"min", "maximum"/"max".
Aggregator parse_aggregator(std::string_view name);

struct Config {
  int max_concept_distance = 4;   // k: distance for unrelated values and the path cap
  std::string isa_label = "IsA";  // taxonomy label used by plausibility
  int max_rule_depth = 2;
  Aggregator aggregator = Aggregator::Average;
  double pmci_alpha = 1.0;
  int generalization_bound = 2;
  double pmci_percentile = 5.0;
  int max_effect_candidates = 32;  // cross-product cap in rule application

  // Applies `key -> value` overrides; unknown keys and unparsable values
  // raise pundit::Error("config", ...).
  void apply(const std::map<std::string, std::string>& kv);
  void set(std::string_view key, std::string_view value);

  std::map<std::string, std::string> to_map() const;

  // TAB-separated key/value lines, '#' comments.
  static std::map<std::string, std::string> read_file(const std::string& path);

  bool operator==(const Config&) const = default;
};

}  // namespace pundit

#endif  // PUNDIT_CONFIG_HPP_
