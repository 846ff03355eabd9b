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

// ER to relational rewriting. Every relationship step rewrites the schema
// in place, raises TransformError when it cannot apply, and appends any
// warnings to `diags`. A failed step leaves the schema untouched.

#ifndef ER2REL_TRANSFORM_HPP_
#define ER2REL_TRANSFORM_HPP_

#include <optional>

#include "er2rel/diagnostic.hpp"
#include "er2rel/model.hpp"
#include "er2rel/schema.hpp"

namespace er2rel {

/// Relation for a regular entity: its attributes in order, key flagged.
Relation step_reg(const EntityType& entity);

/// Relation for a subtype: the root entity's key (key + plain foreign key
/// to the direct supertype relation), then the subtype's own attributes.
Relation step_sub(const Subtype& subtype, const ERModel& model);

using StepFn = void (*)(const RelationshipType&, const ERModel&, Schema&,
                        Diagnostics&);

/// 1:1 between regular entities: the host gains the other side's key with
/// a `(Rel, host_min, far_min, far_max)` suffix, then the relationship's
/// attributes.
void step_gog(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags);

/// 1:N between regular entities, shaped like step_sng. Always warns.
void step_gng(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags);

/// M:N between regular entities: new relation keyed by both keys, each
/// with a `(min, max)` suffix.
void step_gmg(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags);

/// 1:N between a subtype and a regular entity; the N side (max 1) hosts.
void step_sng(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags);

/// M:N between a subtype and a regular entity. The subtype's key comes
/// first and carries the `Subtype~` prefix.
void step_smg(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags);

/// 1:1 between two subtypes.
void step_sos(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags);

/// 1:N between two subtypes.
void step_sns(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags);

/// M:N between two subtypes.
void step_sms(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags);

/// Ternary and higher among regular entities.
void step_thg(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags);

/// Relationship step for `kind`; nullptr for REG and SUB.
StepFn step_function(StepKind kind);

struct TransformResult {
  // Present iff no error diagnostic was raised.
  std::optional<Schema> schema;
  Diagnostics diagnostics;

  bool ok() const { return schema.has_value(); }
};

/// validate, then REG for each entity, SUB for each subtype (supertypes
/// first), then each relationship in declaration order. Relations are kept
/// in creation order.
TransformResult transform(const ERModel& model);

}  // namespace er2rel

#endif  // ER2REL_TRANSFORM_HPP_
