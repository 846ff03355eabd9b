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

// The eight worked example models, one per relationship step.

#ifndef ER2REL_FIXTURES_HPP_
#define ER2REL_FIXTURES_HPP_

#include <span>
#include <string_view>

#include "er2rel/model.hpp"

namespace er2rel {

struct Fixture {
  int figure;
  std::string_view id;       // "fig1" ... "fig8"
  StepKind step;
  std::string_view title;
  std::string_view source;   // DSL text
  std::string_view result_relation;
  std::string_view result_line;  // expected render_text line, no newline
};

std::span<const Fixture> fixtures();

/// Lookup by "figN", "N" or step name (case-insensitive for the latter).
const Fixture* find_fixture(std::string_view key);

}  // namespace er2rel

#endif  // ER2REL_FIXTURES_HPP_
