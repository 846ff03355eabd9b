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

#include "er2rel/schema.hpp"

#include <algorithm>
#include <set>

namespace er2rel {

std::string RelAttribute::display_name() const {
  if (fk && fk->prefix) return *fk->prefix + "~" + base_name;
  return base_name;
}

const RelAttribute* Relation::find_attribute(
    std::string_view display_name) const {
  for (const auto& attr : attributes) {
    if (attr.display_name() == display_name) return &attr;
  }
  return nullptr;
}

std::vector<const RelAttribute*> Relation::pk_attributes() const {
  std::vector<const RelAttribute*> out;
  for (const auto& attr : attributes) {
    if (attr.pk) out.push_back(&attr);
  }
  return out;
}

Relation* Schema::find(std::string_view name) {
  auto it = std::find_if(relations.begin(), relations.end(),
                         [&](const Relation& r) { return r.name == name; });
  return it == relations.end() ? nullptr : &*it;
}

const Relation* Schema::find(std::string_view name) const {
  return const_cast<Schema*>(this)->find(name);
}

std::string Schema::attribute_key(std::string_view relation,
                                  std::string_view attribute) {
  std::string key(relation);
  key += '.';
  key += attribute;
  return key;
}

std::optional<StepKind> Schema::relation_step(std::string_view relation) const {
  auto it = provenance.find(relation);
  if (it == provenance.end()) return std::nullopt;
  return it->second;
}

std::optional<StepKind> Schema::attribute_step(
    std::string_view relation, std::string_view attribute) const {
  auto it = provenance.find(attribute_key(relation, attribute));
  if (it == provenance.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> check_schema(const Schema& schema) {
  std::vector<std::string> problems;
  std::set<std::string, std::less<>> names;
  for (const auto& rel : schema.relations) {
    if (!names.insert(rel.name).second) {
      problems.push_back("duplicate relation " + rel.name);
    }
    std::set<std::string, std::less<>> attrs;
    bool any_pk = false;
    for (const auto& attr : rel.attributes) {
      any_pk = any_pk || attr.pk;
      if (!attrs.insert(attr.display_name()).second) {
        problems.push_back("duplicate attribute " + rel.name + "." +
                           attr.display_name());
      }
      if (!attr.fk) continue;
      const Relation* target = schema.find(attr.fk->references);
      if (target == nullptr) {
        problems.push_back(rel.name + "." + attr.display_name() +
                           " references missing relation " +
                           attr.fk->references);
        continue;
      }
      const RelAttribute* key = target->find_attribute(attr.fk->referenced_pk);
      if (key == nullptr || !key->pk) {
        problems.push_back(rel.name + "." + attr.display_name() +
                           " references non-key " + target->name + "." +
                           attr.fk->referenced_pk);
      }
    }
    if (!any_pk) problems.push_back("relation " + rel.name + " has no key");
  }
  return problems;
}

}  // namespace er2rel
