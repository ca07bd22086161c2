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

#ifndef PUNDIT_TYPES_HPP_
#define PUNDIT_TYPES_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pundit {

// Base of every error the library raises. `kind()` is a short stable tag
// (e.g. "load", "no action") used by reports and the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class LoadError : public Error {
 public:
  LoadError(const std::string& what) : Error("load", what) {}
  LoadError(const std::string& file, std::size_t line, const std::string& what)
      : Error("load", file + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

// Calendar date (proleptic Gregorian). Only valid dates can be constructed
// through parse(); the default value is 1970-01-01.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  static std::optional<Date> parse(std::string_view iso);
  static bool valid(int y, int m, int d);
  std::string iso() const;

  auto operator<=>(const Date&) const = default;
};

// A slot value is either a concept of the knowledge graph or an opaque
// constant that only compares by string equality.
struct Value {
  enum class Kind : std::uint8_t { Concept, Constant };

  Kind kind = Kind::Constant;
  std::string text;

  static Value of_concept(std::string id) { return {Kind::Concept, std::move(id)}; }
  static Value constant(std::string s) { return {Kind::Constant, std::move(s)}; }

  bool is_concept() const noexcept { return kind == Kind::Concept; }
  bool is_constant() const noexcept { return kind == Kind::Constant; }

  // "c:<id>" or "k:<text>".
  std::string encode() const;
  static std::optional<Value> decode(std::string_view s);

  auto operator<=>(const Value&) const = default;
};

using OptValue = std::optional<Value>;

// The five similarity-bearing roles of an event, in canonical order.
enum class Slot : std::uint8_t { Action = 0, Actor, Object, Instrument, Location };

inline constexpr std::size_t kSlotCount = 5;
inline constexpr std::array<Slot, kSlotCount> kAllSlots = {
    Slot::Action, Slot::Actor, Slot::Object, Slot::Instrument, Slot::Location};

std::string_view slot_name(Slot s);
std::optional<Slot> parse_slot(std::string_view name);

inline std::size_t index(Slot s) { return static_cast<std::size_t>(s); }

}  // namespace pundit

#endif  // PUNDIT_TYPES_HPP_
