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

#ifndef ER2REL_RENDER_HPP_
#define ER2REL_RENDER_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "er2rel/schema.hpp"

namespace er2rel {

enum class PkMarker {
  None,        // plain names
  Underscore,  // `_EmpNo_` stands in for underlining
};

struct TextOptions {
  PkMarker pk_marker = PkMarker::None;
};

/// One `Name[attr, attr, ...]` line per relation. Embedded suffixes print
/// as `(Rel, a, b, c)`, pair suffixes as `(a, b)`, unbounded as `n`.
std::string render_text(const Schema& schema, const TextOptions& options = {});

/// Single relation line without the trailing newline.
std::string render_relation(const Relation& relation,
                            const TextOptions& options = {});

/// `(Assigned, 1, 0, 1)` or `(1, n)`.
std::string render_annotation(const FkAnnotation& annotation);

/// JSON document described in docs/structured-format.md.
std::string render_structured(const Schema& schema);

class StructuredFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse of render_structured. Throws StructuredFormatError.
Schema parse_structured(std::string_view text);

/// CREATE TABLE per relation. Cardinality suffixes become `-- cardinality:`
/// comments; an embedded key whose near min is at least 1 is NOT NULL.
std::string render_sql(const Schema& schema);

}  // namespace er2rel

#endif  // ER2REL_RENDER_HPP_
