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

#include "pundit/plausibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "text_util.hpp"

namespace pundit {

PMCIStats::PairKey PMCIStats::ordered(const RoleValue& a, const RoleValue& b) {
  return a < b ? PairKey{a, b} : PairKey{b, a};
}

PMCIStats PMCIStats::accumulate(const std::vector<Event>& events, double alpha) {
  PMCIStats s(alpha);
  for (const auto& e : events) s.add(e);
  return s;
}

void PMCIStats::add(const Event& e) {
  std::vector<RoleValue> present;
  for (Slot r : kAllSlots) {
    if (e[r]) present.push_back({*e[r], r});
  }
  for (const auto& rv : present) ++unigrams_[rv];
  for (std::size_t i = 0; i < present.size(); ++i) {
    for (std::size_t j = i + 1; j < present.size(); ++j) ++pairs_[ordered(present[i], present[j])];
  }
  ++total_;
}

long long PMCIStats::unigram(const RoleValue& rv) const {
  auto it = unigrams_.find(rv);
  return it == unigrams_.end() ? 0 : it->second;
}

long long PMCIStats::pair_count(const RoleValue& a, const RoleValue& b) const {
  auto it = pairs_.find(ordered(a, b));
  return it == pairs_.end() ? 0 : it->second;
}

PMCIStats PMCIStats::from_counts(std::map<RoleValue, long long> unigrams,
                                 std::map<PairKey, long long> pairs, long long total, double alpha) {
  PMCIStats s(alpha);
  s.unigrams_ = std::move(unigrams);
  for (auto& [k, v] : pairs) s.pairs_[ordered(k.first, k.second)] += v;
  s.total_ = total;
  return s;
}

double pmci(const PMCIStats& stats, const Value& o1, const Value& o2, Slot r1, Slot r2) {
  if (stats.total() == 0) return 0.0;
  const double a = stats.alpha();
  const double n = static_cast<double>(stats.total());
  RoleValue x{o1, r1}, y{o2, r2};
  auto smoothed = [&](long long count, std::size_t keys) {
    return (static_cast<double>(count) + a) / (n + a * static_cast<double>(keys));
  };
  double px = smoothed(stats.unigram(x), stats.unigrams().size());
  double py = smoothed(stats.unigram(y), stats.unigrams().size());
  double pxy = smoothed(stats.pair_count(x, y), stats.pairs().size());
  return std::log(pxy / (px * py));
}

double event_pmci(const PMCIStats& stats, const ConceptGraph& graph, const Event& e, int bound,
                  std::string_view isa_label) {
  std::vector<std::pair<Slot, std::vector<Value>>> gens;
  for (Slot r : kAllSlots) {
    if (!e[r]) continue;
    // Smoothing gives a never-seen value the highest possible pmci, so a
    // generalization only counts once it was observed in this role.
    std::vector<Value> all{*e[r]};
    auto levels = isa_generalizations(graph, *e[r], bound, isa_label);
    for (std::size_t l = 1; l < levels.size(); ++l) {
      for (auto& v : levels[l]) {
        if (stats.unigram({v, r}) > 0) all.push_back(std::move(v));
      }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    gens.emplace_back(r, std::move(all));
  }
  if (gens.size() < 2) return std::numeric_limits<double>::infinity();
  double sum = 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& gi : gens[i].second) {
        for (const auto& gj : gens[j].second) {
          best = std::max(best, pmci(stats, gi, gj, gens[i].first, gens[j].first));
        }
      }
      sum += best;
      ++count;
    }
  }
  return sum / static_cast<double>(count);
}

double nearest_rank_percentile(std::vector<double> values, double q) {
  if (values.empty()) throw Error("calibration", "percentile of an empty sample");
  std::sort(values.begin(), values.end());
  double rank = std::ceil(q / 100.0 * static_cast<double>(values.size()));
  auto r = static_cast<std::size_t>(std::clamp(rank, 1.0, static_cast<double>(values.size())));
  return values[r - 1];
}

double calibrate_threshold(const PMCIStats& stats, const ConceptGraph& graph,
                           const std::vector<Event>& effects, int bound, double percentile,
                           std::string_view isa_label) {
  if (effects.empty()) throw Error("calibration", "no training effects to calibrate on");
  std::vector<double> scores;
  for (const auto& e : effects) {
    double s = event_pmci(stats, graph, e, bound, isa_label);
    if (std::isfinite(s)) scores.push_back(s);
  }
  if (scores.empty()) return -std::numeric_limits<double>::infinity();
  return nearest_rank_percentile(std::move(scores), percentile);
}

FilterResult filter(const std::vector<Event>& predictions, double threshold, const PMCIStats& stats,
                    const ConceptGraph& graph, int bound, std::string_view isa_label) {
  FilterResult r;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    double s = event_pmci(stats, graph, predictions[i], bound, isa_label);
    r.scores.push_back(s);
    // thresholds are persisted at 12 significant digits
    (round_sig12(s) >= round_sig12(threshold) ? r.kept : r.pruned).push_back(i);
  }
  return r;
}

}  // namespace pundit
