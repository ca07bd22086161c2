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

#ifndef PUNDIT_SRC_JSON_IO_HPP_
#define PUNDIT_SRC_JSON_IO_HPP_

// nlohmann/json stays behind this private header; the public API only
// exchanges strings and files.

#include <string_view>

#include "json.hpp"
#include "pundit/event.hpp"

namespace pundit {

using json = nlohmann::json;

// Throws Error("format", ...) naming `what` on malformed text.
json parse_json(std::string_view text, std::string_view what);

// Finite values are rounded to 12 significant digits; infinities become the
// strings "inf" / "-inf".
json real_to_json(double v);
double real_from_json(const json& j);

json value_to_json(const OptValue& v);
OptValue value_from_json(const json& j);

json event_to_json(const Event& e);
Event event_from_json(const json& j);

json pair_to_json(const CausalityPair& p);
CausalityPair pair_from_json(const json& j);

// Typed field access with Error("format", ...) on mismatch.
const json& require(const json& obj, const char* key);
std::string require_string(const json& obj, const char* key);
long long require_int(const json& obj, const char* key);

}  // namespace pundit

#endif  // PUNDIT_SRC_JSON_IO_HPP_
