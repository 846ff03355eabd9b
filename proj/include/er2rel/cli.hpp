/*
 * Copyright 2026 The er2rel Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ER2REL_CLI_HPP_
#define ER2REL_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace er2rel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitUsage = 2;

/// Runs `er2rel` with argv-style `args` (args[0] is the program name).
/// `in` backs the `-` input path.
/// `args` is the full argument vector, program name first.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace er2rel::cli

#endif  // ER2REL_CLI_HPP_
