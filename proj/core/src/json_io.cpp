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

#include "json_io.hpp"

#include <cmath>
#include <limits>

#include "text_util.hpp"

namespace pundit {

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error("format", "malformed " + std::string(what) + " JSON: " + e.what());
  }
}

json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return round_sig12(v);
}

double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw Error("format", "expected a number, got " + j.dump());
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object()) throw Error("format", "expected a JSON object, got " + obj.dump());
  auto it = obj.find(key);
  if (it == obj.end()) throw Error("format", std::string("missing key '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_string()) throw Error("format", std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

long long require_int(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_number_integer()) throw Error("format", std::string("key '") + key + "' must be an integer");
  return v.get<long long>();
}

json value_to_json(const OptValue& v) {
  if (!v) return nullptr;
  return v->encode();
}

OptValue value_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_string()) throw Error("format", "slot value must be a string or null");
  auto v = Value::decode(j.get<std::string>());
  if (!v) throw Error("format", "slot value '" + j.get<std::string>() + "' lacks a c:/k: prefix");
  return v;
}

json event_to_json(const Event& e) {
  json j = json::object();
  for (Slot s : kAllSlots) j[std::string(slot_name(s))] = value_to_json(e[s]);
  j["actor_attr"] = e.actor_attr ? json(*e.actor_attr) : json(nullptr);
  j["object_attr"] = e.object_attr ? json(*e.object_attr) : json(nullptr);
  j["time"] = e.time.iso();
  j["polarity"] = e.polarity;
  return j;
}

Event event_from_json(const json& j) {
  if (!j.is_object()) throw Error("format", "event must be a JSON object");
  Event e;
  for (Slot s : kAllSlots) {
    auto it = j.find(std::string(slot_name(s)));
    if (it != j.end()) e[s] = value_from_json(*it);
  }
  if (!e.action()) throw Error("format", "event has no action");
  for (auto [key, field] : {std::pair{"actor_attr", &e.actor_attr}, std::pair{"object_attr", &e.object_attr}}) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) continue;
    if (!it->is_string()) throw Error("format", std::string(key) + " must be a string or null");
    *field = it->get<std::string>();
  }
  auto date = Date::parse(require_string(j, "time"));
  if (!date) throw Error("format", "invalid event time '" + require_string(j, "time") + "'");
  e.time = *date;
  if (auto it = j.find("polarity"); it != j.end()) {
    if (!it->is_boolean()) throw Error("format", "polarity must be a boolean");
    e.polarity = it->get<bool>();
  }
  return e;
}

json pair_to_json(const CausalityPair& p) {
  return json{{"cause", event_to_json(p.cause)},
              {"effect", event_to_json(p.effect)},
              {"source", p.source},
              {"pattern_id", p.pattern_id}};
}

CausalityPair pair_from_json(const json& j) {
  CausalityPair p;
  p.cause = event_from_json(require(j, "cause"));
  p.effect = event_from_json(require(j, "effect"));
  p.source = require_string(j, "source");
  p.pattern_id = require_string(j, "pattern_id");
  return p;
}

}  // namespace pundit
