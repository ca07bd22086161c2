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

#include "pundit/event.hpp"

#include <algorithm>
#include <fstream>

#include "json_io.hpp"
#include "text_util.hpp"

namespace pundit {

std::size_t Event::present_slots() const {
  return static_cast<std::size_t>(
      std::count_if(slots.begin(), slots.end(), [](const OptValue& v) { return v.has_value(); }));
}

int slot_distance(const GenPathTable& table, const OptValue& x, const OptValue& y) {
  if (!x && !y) return 0;
  if (!x || !y) return table.cap();
  return dist_gen(table, *x, *y);
}

double event_distance(const GenPathTable& table, const Event& a, const Event& b, Aggregator agg) {
  const double k = table.cap();
  std::array<double, kSlotCount> d{};
  for (Slot s : kAllSlots) d[index(s)] = slot_distance(table, a[s], b[s]) / k;
  switch (agg) {
    case Aggregator::Minimum: return *std::min_element(d.begin(), d.end());
    case Aggregator::Maximum: return *std::max_element(d.begin(), d.end());
    case Aggregator::Average: break;
  }
  double sum = 0;
  for (double v : d) sum += v;
  return sum / static_cast<double>(kSlotCount);
}

double event_similarity(const GenPathTable& table, const Event& a, const Event& b, Aggregator agg) {
  return 1.0 / (1.0 + event_distance(table, a, b, agg));
}

double pair_similarity(const GenPathTable& table, const CausalityPair& a, const CausalityPair& b,
                       Aggregator agg) {
  double c = event_similarity(table, a.cause, b.cause, agg);
  double e = event_similarity(table, a.effect, b.effect, agg);
  switch (agg) {
    case Aggregator::Minimum: return std::min(c, e);
    case Aggregator::Maximum: return std::max(c, e);
    case Aggregator::Average: break;
  }
  return (c + e) / 2.0;
}

std::string encode_event(const Event& e) { return event_to_json(e).dump(); }

Event decode_event(std::string_view text) {
  return event_from_json(parse_json(text, "event"));
}

std::string encode_pair(const CausalityPair& p) { return pair_to_json(p).dump(); }

CausalityPair decode_pair(std::string_view text) {
  return pair_from_json(parse_json(text, "pair"));
}

std::vector<CausalityPair> read_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open pairs file " + path);
  std::vector<CausalityPair> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (is_blank_or_comment(line)) continue;
    try {
      out.push_back(decode_pair(line));
    } catch (const Error& err) {
      throw LoadError(path, lineno, err.what());
    }
  }
  return out;
}

void write_pairs_file(const std::string& path, const std::vector<CausalityPair>& pairs) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("io", "cannot write pairs file " + path);
  for (const auto& p : pairs) out << encode_pair(p) << '\n';
  if (!out) throw Error("io", "write failed for " + path);
}

}  // namespace pundit
