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

#include "er2rel/transform.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace er2rel {

namespace {

std::string step_context(StepKind step) {
  return "step " + std::string(to_string(step));
}

void expect_step(const RelationshipType& rel, const ERModel& model,
                 StepKind step) {
  const Classification c = classify(rel, model);
  if (c.step != step) {
    throw std::invalid_argument("relationship '" + rel.name + "' is a " +
                                std::string(to_string(c.step)) +
                                " case, not " + std::string(to_string(step)));
  }
}

// Role labels take precedence over the subtype name.
std::optional<std::string> fk_prefix(const Participation& p,
                                     const ERModel& model) {
  if (p.role) return p.role;
  if (model.is_subtype(p.target)) return p.target;
  return std::nullopt;
}

std::vector<RelAttribute> key_columns(const Participation& p,
                                      const ERModel& model,
                                      const Schema& schema, bool as_pk,
                                      const FkAnnotation& annotation,
                                      StepKind step) {
  const Relation* target = schema.find(p.target);
  if (target == nullptr) {
    throw TransformError(make_error(codes::kUnresolvedReference,
                                    "no relation for '" + p.target + "'",
                                    p.span, step_context(step)));
  }
  const auto prefix = fk_prefix(p, model);
  std::vector<RelAttribute> out;
  for (const RelAttribute* key : target->pk_attributes()) {
    out.push_back(RelAttribute{
        key->base_name, as_pk,
        FkDescriptor{target->name, key->display_name(), prefix, annotation},
        key->sql_type});
  }
  return out;
}

void append_relationship_attributes(const RelationshipType& rel,
                                    std::vector<RelAttribute>& columns) {
  for (const auto& attr : rel.attributes) {
    columns.push_back(RelAttribute{attr.name, false, std::nullopt, attr.sql_type});
  }
}

void check_collisions(const RelationshipType& rel, const Relation* host,
                      const std::vector<RelAttribute>& added, StepKind step) {
  std::set<std::string, std::less<>> names;
  if (host != nullptr) {
    for (const auto& attr : host->attributes) names.insert(attr.display_name());
  }
  for (const auto& attr : added) {
    const std::string name = attr.display_name();
    if (!names.insert(name).second) {
      const std::string where = host != nullptr ? host->name : rel.name;
      throw TransformError(make_error(
          codes::kAttributeCollision,
          "attribute name collision: '" + name + "' already exists in '" +
              where + "'",
          rel.span, step_context(step)));
    }
  }
}

void record_attributes(Schema& schema, const std::string& relation,
                       const std::vector<RelAttribute>& added, StepKind step) {
  for (const auto& attr : added) {
    schema.provenance[Schema::attribute_key(relation, attr.display_name())] =
        step;
  }
}

// Places the far side's key into the host relation with the 4-component
// suffix, followed by the relationship's attributes.
void embed_foreign_key(const RelationshipType& rel, const ERModel& model,
                       Schema& schema, std::size_t host_index, StepKind step) {
  const Participation& near = rel.participations.at(host_index);
  const Participation& far = rel.participations.at(1 - host_index);
  Relation* host = schema.find(near.target);
  if (host == nullptr) {
    throw TransformError(make_error(codes::kUnresolvedReference,
                                    "no relation for '" + near.target + "'",
                                    near.span, step_context(step)));
  }
  auto added = key_columns(
      far, model, schema, /*as_pk=*/false,
      EmbeddedAnnotation{rel.name, near.min, far.min, far.max}, step);
  append_relationship_attributes(rel, added);
  check_collisions(rel, host, added, step);
  record_attributes(schema, host->name, added, step);
  host->attributes.insert(host->attributes.end(), added.begin(), added.end());
}

// New relation named after the relationship, keyed by the participants'
// keys taken in `order`, each with its own (min, max) suffix.
void create_relation(const RelationshipType& rel, const ERModel& model,
                     Schema& schema, const std::vector<std::size_t>& order,
                     StepKind step) {
  if (schema.find(rel.name) != nullptr) {
    throw TransformError(make_error(
        codes::kRelationCollision,
        "relation name collision: '" + rel.name + "' already exists",
        rel.span, step_context(step)));
  }
  std::vector<RelAttribute> columns;
  for (std::size_t index : order) {
    const Participation& p = rel.participations.at(index);
    auto keys = key_columns(p, model, schema, /*as_pk=*/true,
                            PairAnnotation{p.min, p.max}, step);
    columns.insert(columns.end(), keys.begin(), keys.end());
  }
  append_relationship_attributes(rel, columns);
  check_collisions(rel, nullptr, columns, step);
  schema.provenance[rel.name] = step;
  record_attributes(schema, rel.name, columns, step);
  schema.relations.push_back(Relation{rel.name, std::move(columns)});
}

std::vector<std::size_t> declaration_order(const RelationshipType& rel) {
  std::vector<std::size_t> order(rel.participations.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

std::size_t one_side(const RelationshipType& rel) {
  return rel.participations[0].max.is_one() ? 0 : 1;
}

Diagnostic mixed_warning(const RelationshipType& rel, StepKind step,
                         std::string_view what) {
  return make_warning(codes::kMixedSubtypeStep,
                      "relationship '" + rel.name + "' is a " +
                          std::string(what) +
                          ", which no listed step covers; applied " +
                          std::string(to_string(step)) + " rules",
                      rel.span, step_context(step));
}

}  // namespace

Relation step_reg(const EntityType& entity) {
  Relation out{entity.name, {}};
  for (const auto& attr : entity.attributes) {
    const bool is_key =
        std::find(entity.pk.begin(), entity.pk.end(), attr.name) != entity.pk.end();
    out.attributes.push_back(
        RelAttribute{attr.name, is_key, std::nullopt, attr.sql_type});
  }
  return out;
}

Relation step_sub(const Subtype& subtype, const ERModel& model) {
  const EntityType* root = model.root_entity(subtype.name);
  if (root == nullptr) {
    throw std::invalid_argument("subtype '" + subtype.name +
                                "' has no root entity");
  }
  Relation out{subtype.name, {}};
  for (const auto& key : root->pk) {
    const AttributeDef* def = root->find_attribute(key);
    out.attributes.push_back(RelAttribute{
        key, true,
        FkDescriptor{subtype.supertype, key, std::nullopt, std::nullopt},
        def != nullptr ? def->sql_type : std::nullopt});
  }
  for (const auto& attr : subtype.attributes) {
    out.attributes.push_back(
        RelAttribute{attr.name, false, std::nullopt, attr.sql_type});
  }
  return out;
}

void step_gog(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags) {
  expect_step(rel, model, StepKind::GOG);
  const Participation& host = choose_host(rel, model);
  const std::size_t host_index = &host == &rel.participations[0] ? 0 : 1;
  embed_foreign_key(rel, model, schema, host_index, StepKind::GOG);
  if (model.is_subtype(rel.participations[0].target) ||
      model.is_subtype(rel.participations[1].target)) {
    diags.push_back(mixed_warning(rel, StepKind::GOG,
                                  "1:1 between a subtype and a regular entity"));
  }
}

void step_gng(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags) {
  expect_step(rel, model, StepKind::GNG);
  embed_foreign_key(rel, model, schema, one_side(rel), StepKind::GNG);
  diags.push_back(make_warning(
      codes::kNonPaperStep,
      "step GNG is an extension beyond the source paper (relationship '" +
          rel.name + "')",
      rel.span, step_context(StepKind::GNG)));
}

void step_gmg(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& /*diags*/) {
  expect_step(rel, model, StepKind::GMG);
  create_relation(rel, model, schema, declaration_order(rel), StepKind::GMG);
}

void step_sng(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& diags) {
  expect_step(rel, model, StepKind::SNG);
  const std::size_t host = one_side(rel);
  embed_foreign_key(rel, model, schema, host, StepKind::SNG);
  if (!model.is_subtype(rel.participations[host].target)) {
    diags.push_back(mixed_warning(
        rel, StepKind::SNG,
        "1:N whose N side is a regular entity and far side a subtype"));
  }
}

void step_smg(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& /*diags*/) {
  expect_step(rel, model, StepKind::SMG);
  const std::size_t sub = model.is_subtype(rel.participations[0].target) ? 0 : 1;
  create_relation(rel, model, schema, {sub, 1 - sub}, StepKind::SMG);
}

void step_sos(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& /*diags*/) {
  expect_step(rel, model, StepKind::SOS);
  const Participation& host = choose_host(rel, model);
  const std::size_t host_index = &host == &rel.participations[0] ? 0 : 1;
  embed_foreign_key(rel, model, schema, host_index, StepKind::SOS);
}

void step_sns(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& /*diags*/) {
  expect_step(rel, model, StepKind::SNS);
  embed_foreign_key(rel, model, schema, one_side(rel), StepKind::SNS);
}

void step_sms(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& /*diags*/) {
  expect_step(rel, model, StepKind::SMS);
  create_relation(rel, model, schema, declaration_order(rel), StepKind::SMS);
}

void step_thg(const RelationshipType& rel, const ERModel& model,
              Schema& schema, Diagnostics& /*diags*/) {
  expect_step(rel, model, StepKind::THG);
  create_relation(rel, model, schema, declaration_order(rel), StepKind::THG);
}

StepFn step_function(StepKind kind) {
  switch (kind) {
    case StepKind::GOG: return &step_gog;
    case StepKind::GNG: return &step_gng;
    case StepKind::GMG: return &step_gmg;
    case StepKind::SNG: return &step_sng;
    case StepKind::SMG: return &step_smg;
    case StepKind::SOS: return &step_sos;
    case StepKind::SNS: return &step_sns;
    case StepKind::SMS: return &step_sms;
    case StepKind::THG: return &step_thg;
    case StepKind::REG:
    case StepKind::SUB:
      return nullptr;
  }
  return nullptr;
}

TransformResult transform(const ERModel& model) {
  TransformResult result;
  result.diagnostics = validate(model);
  if (has_errors(result.diagnostics)) return result;

  Schema schema;
  auto add_relation = [&schema](Relation relation, StepKind step) {
    schema.provenance[relation.name] = step;
    record_attributes(schema, relation.name, relation.attributes, step);
    schema.relations.push_back(std::move(relation));
  };

  for (const auto& entity : model.entities) {
    add_relation(step_reg(entity), StepKind::REG);
  }

  std::vector<const Subtype*> subtypes;
  for (const auto& sub : model.subtypes) subtypes.push_back(&sub);
  std::stable_sort(subtypes.begin(), subtypes.end(),
                   [&](const Subtype* a, const Subtype* b) {
                     return *model.subtype_depth(a->name) <
                            *model.subtype_depth(b->name);
                   });
  for (const Subtype* sub : subtypes) {
    add_relation(step_sub(*sub, model), StepKind::SUB);
  }

  for (const auto& rel : model.relationships) {
    try {
      const Classification c = classify(rel, model);
      step_function(c.step)(rel, model, schema, result.diagnostics);
    } catch (const TransformError& e) {
      result.diagnostics.push_back(e.diagnostic());
    }
  }

  if (!has_errors(result.diagnostics)) result.schema = std::move(schema);
  return result;
}

}  // namespace er2rel
