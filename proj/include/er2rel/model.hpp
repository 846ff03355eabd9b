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

// ER input IR: entity types, subtypes and relationship types with
// (min, max) participation constraints.

#ifndef ER2REL_MODEL_HPP_
#define ER2REL_MODEL_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "er2rel/diagnostic.hpp"

namespace er2rel {

/// Upper bound of a participation. Unbounded is written `n` and orders
/// above every finite value.
class MaxBound {
 public:
  constexpr MaxBound() = default;
  constexpr explicit MaxBound(std::uint32_t value) : value_(value) {}

  static constexpr MaxBound unbounded() {
    MaxBound bound;
    bound.unbounded_ = true;
    return bound;
  }

  constexpr bool is_unbounded() const { return unbounded_; }
  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_one() const { return !unbounded_ && value_ == 1; }

  std::string to_string() const {
    return unbounded_ ? std::string("n") : std::to_string(value_);
  }

  friend constexpr bool operator==(const MaxBound& a, const MaxBound& b) {
    return a.unbounded_ == b.unbounded_ && (a.unbounded_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const MaxBound& a,
                                                    const MaxBound& b) {
    if (a.unbounded_ || b.unbounded_) return a.unbounded_ <=> b.unbounded_;
    return a.value_ <=> b.value_;
  }

 private:
  std::uint32_t value_ = 1;
  bool unbounded_ = false;
};

// Source spans are positional metadata; equality on every IR type below
// ignores them so that models compare structurally.

struct AttributeDef {
  std::string name;
  std::optional<std::string> sql_type;
  SourceSpan span;

  friend bool operator==(const AttributeDef& a, const AttributeDef& b) {
    return a.name == b.name && a.sql_type == b.sql_type;
  }
};

struct EntityType {
  std::string name;
  std::vector<AttributeDef> attributes;
  std::vector<std::string> pk;
  SourceSpan span;

  const AttributeDef* find_attribute(std::string_view attr) const;

  friend bool operator==(const EntityType& a, const EntityType& b) {
    return a.name == b.name && a.attributes == b.attributes && a.pk == b.pk;
  }
};

struct Subtype {
  std::string name;
  std::string supertype;
  std::vector<AttributeDef> attributes;
  SourceSpan span;
  SourceSpan supertype_span;

  friend bool operator==(const Subtype& a, const Subtype& b) {
    return a.name == b.name && a.supertype == b.supertype &&
           a.attributes == b.attributes;
  }
};

struct Participation {
  std::string target;
  std::uint32_t min = 0;
  MaxBound max;
  std::optional<std::string> role;
  SourceSpan span;

  friend bool operator==(const Participation& a, const Participation& b) {
    return a.target == b.target && a.min == b.min && a.max == b.max &&
           a.role == b.role;
  }
};

struct RelationshipType {
  std::string name;
  std::vector<Participation> participations;
  std::vector<AttributeDef> attributes;
  SourceSpan span;

  bool is_binary() const { return participations.size() == 2; }

  friend bool operator==(const RelationshipType& a, const RelationshipType& b) {
    return a.name == b.name && a.participations == b.participations &&
           a.attributes == b.attributes;
  }
};

struct ERModel {
  std::vector<EntityType> entities;
  std::vector<Subtype> subtypes;
  std::vector<RelationshipType> relationships;

  const EntityType* find_entity(std::string_view name) const;
  const Subtype* find_subtype(std::string_view name) const;
  const RelationshipType* find_relationship(std::string_view name) const;
  bool is_subtype(std::string_view name) const {
    return find_subtype(name) != nullptr;
  }
  bool empty() const {
    return entities.empty() && subtypes.empty() && relationships.empty();
  }

  /// Follows supertype links to the regular entity at the root of the
  /// hierarchy. Returns nullptr for unresolved or cyclic chains.
  const EntityType* root_entity(std::string_view name) const;

  /// Number of supertype links between `name` and its root entity: 0 for
  /// a regular entity, 1 for a direct subtype. Empty on broken chains.
  std::optional<std::size_t> subtype_depth(std::string_view name) const;

  friend bool operator==(const ERModel&, const ERModel&) = default;
};

enum class CardinalityClass { OneOne, OneMany, ManyMany, NAry };

enum class StepKind { REG, SUB, GOG, GNG, GMG, SNG, SMG, SOS, SNS, SMS, THG };

std::string_view to_string(CardinalityClass cls);
std::string_view to_string(StepKind step);
std::optional<StepKind> step_from_string(std::string_view text);

/// Steps that embed a foreign key into an existing relation and annotate
/// it with the 4-component suffix.
bool is_embedding_step(StepKind step);
/// Steps that create a new relation keyed by the participant keys.
bool is_new_relation_step(StepKind step);

bool is_valid_identifier(std::string_view text);

/// Names checks only: uniqueness across the single namespace and
/// resolution of every supertype and participation reference.
Diagnostics check_names(const ERModel& model);

/// All model invariants. Includes check_names().
Diagnostics validate(const ERModel& model);

struct Classification {
  CardinalityClass cardinality;
  StepKind step;
  // Index of the participation whose relation receives the foreign key
  // for 1:1 and 1:N; unused for new-relation steps.
  std::size_t host = 0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Classifies a relationship of a validated model. Throws TransformError
/// for n-ary relationships with a subtype participant.
Classification classify(const RelationshipType& rel, const ERModel& model);

/// Host participation of a 1:1 relationship: the unique total participant
/// when there is one, else the first declared.
const Participation& choose_host(const RelationshipType& rel,
                                 const ERModel& model);

}  // namespace er2rel

#endif  // ER2REL_MODEL_HPP_
