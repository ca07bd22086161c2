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

#ifndef PUNDIT_PLAUSIBILITY_HPP_
#define PUNDIT_PLAUSIBILITY_HPP_

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "pundit/event.hpp"
#include "pundit/kgraph.hpp"

namespace pundit {

struct RoleValue {
  Value value;
  Slot role = Slot::Action;

  auto operator<=>(const RoleValue&) const = default;
};

// Role-tagged co-occurrence counts over a set of events.
class PMCIStats {
 public:
  using PairKey = std::pair<RoleValue, RoleValue>;  // first < second

  PMCIStats() = default;
  explicit PMCIStats(double alpha) : alpha_(alpha) {}

  static PMCIStats accumulate(const std::vector<Event>& events, double alpha = 1.0);
  void add(const Event& e);

  long long unigram(const RoleValue& rv) const;
  long long pair_count(const RoleValue& a, const RoleValue& b) const;
  long long total() const { return total_; }
  double alpha() const { return alpha_; }

  const std::map<RoleValue, long long>& unigrams() const { return unigrams_; }
  const std::map<PairKey, long long>& pairs() const { return pairs_; }

  // Rebuilds stats from persisted counts.
  static PMCIStats from_counts(std::map<RoleValue, long long> unigrams,
                               std::map<PairKey, long long> pairs, long long total, double alpha);

  bool operator==(const PMCIStats&) const = default;

 private:
  static PairKey ordered(const RoleValue& a, const RoleValue& b);

  std::map<RoleValue, long long> unigrams_;
  std::map<PairKey, long long> pairs_;
  long long total_ = 0;
  double alpha_ = 1.0;
};

// log p(o1@r1, o2@r2) / (p(o1@r1) p(o2@r2)) with add-alpha smoothing
// p(x) = (count + alpha) / (total + alpha * V), V = distinct keys of that map.
double pmci(const PMCIStats& stats, const Value& o1, const Value& o2, Slot r1, Slot r2);

// Mean over unordered pairs of present slots of the best pmci across the
// slots' IsA generalizations up to `bound` levels. Generalizations never seen
// in the slot's role are skipped. +inf with < 2 slots.
double event_pmci(const PMCIStats& stats, const ConceptGraph& graph, const Event& e, int bound,
                  std::string_view isa_label = "IsA");

// Nearest-rank percentile of a non-empty sample.
double nearest_rank_percentile(std::vector<double> values, double q);

// q-th percentile of the finite event_pmci scores of `effects` (-inf when
// none is finite). Throws Error("calibration") on empty input.
double calibrate_threshold(const PMCIStats& stats, const ConceptGraph& graph,
                           const std::vector<Event>& effects, int bound, double percentile,
                           std::string_view isa_label = "IsA");

struct FilterResult {
  std::vector<std::size_t> kept;    // indices into the input, order kept
  std::vector<std::size_t> pruned;
  std::vector<double> scores;       // per input item
};

// Keeps events scoring >= threshold (both compared at 12 significant digits).
FilterResult filter(const std::vector<Event>& predictions, double threshold, const PMCIStats& stats,
                    const ConceptGraph& graph, int bound, std::string_view isa_label = "IsA");

}  // namespace pundit

#endif  // PUNDIT_PLAUSIBILITY_HPP_
