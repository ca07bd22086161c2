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

#ifndef PUNDIT_EVENT_HPP_
#define PUNDIT_EVENT_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pundit/config.hpp"
#include "pundit/kgraph.hpp"
#include "pundit/types.hpp"

namespace pundit {

// Structured news event. The action slot is always filled for events that
// come out of extraction or prediction; the four object roles may be absent.
struct Event {
  std::array<OptValue, kSlotCount> slots;
  std::optional<std::string> actor_attr;
  std::optional<std::string> object_attr;
  Date time;
  bool polarity = true;

  const OptValue& operator[](Slot s) const { return slots[index(s)]; }
  OptValue& operator[](Slot s) { return slots[index(s)]; }

  const OptValue& action() const { return (*this)[Slot::Action]; }
  const OptValue& actor() const { return (*this)[Slot::Actor]; }
  const OptValue& object() const { return (*this)[Slot::Object]; }
  const OptValue& instrument() const { return (*this)[Slot::Instrument]; }
  const OptValue& location() const { return (*this)[Slot::Location]; }

  std::size_t present_slots() const;

  // Equality over the five role slots only.
  bool same_slots(const Event& other) const { return slots == other.slots; }

  bool operator==(const Event&) const = default;
  auto operator<=>(const Event&) const = default;
};

struct CausalityPair {
  Event cause;
  Event effect;
  std::string source;
  std::string pattern_id;

  bool operator==(const CausalityPair&) const = default;
};

// Absent/absent is 0, one-sided absence is k, otherwise dist_gen.
int slot_distance(const GenPathTable& table, const OptValue& x, const OptValue& y);

// Aggregated slot distance, each slot normalized by k into [0, 1].
double event_distance(const GenPathTable& table, const Event& a, const Event& b, Aggregator agg);

// 1 / (1 + event_distance). Time, polarity and attributes do not count.
double event_similarity(const GenPathTable& table, const Event& a, const Event& b, Aggregator agg);

// agg(similarity of causes, similarity of effects).
double pair_similarity(const GenPathTable& table, const CausalityPair& a, const CausalityPair& b,
                       Aggregator agg);

// Canonical single-line JSON (sorted keys, absent slots as null, values
// prefixed "c:" for concepts and "k:" for constants).
std::string encode_event(const Event& e);
Event decode_event(std::string_view json);

std::string encode_pair(const CausalityPair& p);
CausalityPair decode_pair(std::string_view json);

// One encoded pair per line.
std::vector<CausalityPair> read_pairs_file(const std::string& path);
void write_pairs_file(const std::string& path, const std::vector<CausalityPair>& pairs);

}  // namespace pundit

#endif  // PUNDIT_EVENT_HPP_
