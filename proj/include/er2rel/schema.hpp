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

// Relational output IR.

#ifndef ER2REL_SCHEMA_HPP_
#define ER2REL_SCHEMA_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "er2rel/model.hpp"

namespace er2rel {

/// `(RelName, near_min, far_min, far_max)` on a key embedded into an
/// existing relation. The host side's max is always 1 and not carried.
struct EmbeddedAnnotation {
  std::string relationship;
  std::uint32_t near_min = 0;
  std::uint32_t far_min = 0;
  MaxBound far_max;

  friend bool operator==(const EmbeddedAnnotation&,
                         const EmbeddedAnnotation&) = default;
};

/// `(min, max)` on each key of a relation created for a relationship.
struct PairAnnotation {
  std::uint32_t min = 0;
  MaxBound max;

  friend bool operator==(const PairAnnotation&, const PairAnnotation&) = default;
};

using FkAnnotation = std::variant<EmbeddedAnnotation, PairAnnotation>;

struct FkDescriptor {
  std::string references;
  std::string referenced_pk;
  // Subtype name or role label joined to the base name with `~`.
  std::optional<std::string> prefix;
  // Absent on the key a subtype relation inherits from its supertype.
  std::optional<FkAnnotation> annotation;

  friend bool operator==(const FkDescriptor&, const FkDescriptor&) = default;
};

struct RelAttribute {
  std::string base_name;
  bool pk = false;
  std::optional<FkDescriptor> fk;
  std::optional<std::string> sql_type;

  std::string display_name() const;

  friend bool operator==(const RelAttribute&, const RelAttribute&) = default;
};

struct Relation {
  std::string name;
  std::vector<RelAttribute> attributes;

  const RelAttribute* find_attribute(std::string_view display_name) const;
  std::vector<const RelAttribute*> pk_attributes() const;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Schema {
  std::vector<Relation> relations;
  // Keyed by relation name, or `Relation.display_name` for attributes.
  std::map<std::string, StepKind, std::less<>> provenance;

  Relation* find(std::string_view name);
  const Relation* find(std::string_view name) const;

  std::optional<StepKind> relation_step(std::string_view relation) const;
  std::optional<StepKind> attribute_step(std::string_view relation,
                                         std::string_view attribute) const;

  static std::string attribute_key(std::string_view relation,
                                   std::string_view attribute);

  friend bool operator==(const Schema&, const Schema&) = default;
};

/// Referential-closure and uniqueness checks over a finished schema.
/// Returns an empty list when every invariant holds.
std::vector<std::string> check_schema(const Schema& schema);

}  // namespace er2rel

#endif  // ER2REL_SCHEMA_HPP_
