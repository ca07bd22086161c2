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

#include "pundit/types.hpp"

#include <charconv>
#include <cstdio>

namespace pundit {

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

}  // namespace

bool Date::valid(int y, int m, int d) {
  if (y < 1 || y > 9999 || m < 1 || m > 12 || d < 1) return false;
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int limit = kDays[m - 1];
  bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  if (m == 2 && leap) limit = 29;
  return d <= limit;
}

std::optional<Date> Date::parse(std::string_view iso) {
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
  Date out;
  if (!parse_int(iso.substr(0, 4), out.year) || !parse_int(iso.substr(5, 2), out.month) ||
      !parse_int(iso.substr(8, 2), out.day)) {
    return std::nullopt;
  }
  if (!valid(out.year, out.month, out.day)) return std::nullopt;
  return out;
}

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::string Value::encode() const {
  return (is_concept() ? "c:" : "k:") + text;
}

std::optional<Value> Value::decode(std::string_view s) {
  if (s.size() < 2 || s[1] != ':') return std::nullopt;
  std::string body(s.substr(2));
  if (s[0] == 'c') return Value::of_concept(std::move(body));
  if (s[0] == 'k') return Value::constant(std::move(body));
  return std::nullopt;
}

std::string_view slot_name(Slot s) {
  switch (s) {
    case Slot::Action: return "action";
    case Slot::Actor: return "actor";
    case Slot::Object: return "object";
    case Slot::Instrument: return "instrument";
    case Slot::Location: return "location";
  }
  return "?";
}

std::optional<Slot> parse_slot(std::string_view name) {
  for (Slot s : kAllSlots) {
    if (slot_name(s) == name) return s;
  }
  return std::nullopt;
}

}  // namespace pundit
