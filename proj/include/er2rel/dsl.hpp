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

// Textual ER-model language.
//
//   model        := statement*
//   statement    := entity | subtype | relationship
//   entity       := "entity" IDENT "{" attr_decl* "}"
//   subtype      := "subtype" IDENT "of" IDENT "{" attr_decl* "}"
//   relationship := "relationship" IDENT "(" participation ("," participation)+ ")"
//                   "{" attr_decl* "}"
//   participation:= IDENT ["as" IDENT] "[" INT "," (INT | "n") "]"
//   attr_decl    := ["key"] IDENT [":" IDENT] ";"
//
// `//` starts a comment that runs to the end of the line. Identifiers are a
// letter followed by letters, digits or underscores. The words entity,
// subtype, relationship, key, of and as are reserved.

#ifndef ER2REL_DSL_HPP_
#define ER2REL_DSL_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "er2rel/diagnostic.hpp"
#include "er2rel/model.hpp"

namespace er2rel {

struct ParseResult {
  // Present iff `diagnostics` holds no error.
  std::optional<ERModel> model;
  Diagnostics diagnostics;

  bool ok() const { return model.has_value(); }
};

/// Parses DSL text. Declaration order is preserved in every list. Syntax
/// errors recover at the next `;` or `}` so one run reports several;
/// duplicate names and unresolved references are also reported here. Other
/// model invariants are left to validate().
ParseResult parse(std::string_view source);

/// Canonical DSL text: entities, then subtypes, then relationships, one
/// statement per declaration. parse(format_model(m)) reproduces m.
std::string format_model(const ERModel& model);

}  // namespace er2rel

#endif  // ER2REL_DSL_HPP_
