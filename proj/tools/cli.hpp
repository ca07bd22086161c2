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

#ifndef PUNDIT_TOOLS_CLI_HPP_
#define PUNDIT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace pundit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSoftFailure = 1;  // e.g. unstructurable headline
inline constexpr int kExitUsage = 2;        // usage, I/O and load errors

// Runs the `pundit` command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pundit::cli

#endif  // PUNDIT_TOOLS_CLI_HPP_
