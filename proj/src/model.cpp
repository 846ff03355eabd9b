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

#include "er2rel/model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>

namespace er2rel {

namespace {

template <typename T>
const T* find_named(const std::vector<T>& items, std::string_view name) {
  auto it = std::find_if(items.begin(), items.end(),
                         [&](const T& item) { return item.name == name; });
  return it == items.end() ? nullptr : &*it;
}

std::string quoted(std::string_view name) {
  return "'" + std::string(name) + "'";
}

std::string lowered(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

constexpr std::array<std::string_view, 11> kStepNames = {
    "REG", "SUB", "GOG", "GNG", "GMG", "SNG",
    "SMG", "SOS", "SNS", "SMS", "THG"};

void check_attribute_list(const std::vector<AttributeDef>& attributes,
                          std::string_view owner, Diagnostics& out) {
  std::set<std::string, std::less<>> seen;
  for (const auto& attr : attributes) {
    if (!is_valid_identifier(attr.name)) {
      out.push_back(make_error(codes::kInvalidIdentifier,
                               "invalid attribute name " + quoted(attr.name),
                               attr.span, std::string(owner)));
    }
    if (!seen.insert(attr.name).second) {
      out.push_back(make_error(
          codes::kDuplicateAttribute,
          "duplicate attribute " + quoted(attr.name) + " in " + quoted(owner),
          attr.span, std::string(owner)));
    }
  }
}

// Members of the supertype cycle that `start` lies on, beginning with the
// first-declared member and following supertype links. Empty when `start`
// is not itself on a cycle.
std::vector<const Subtype*> subtype_cycle_from(const ERModel& model,
                                               std::string_view start) {
  std::vector<const Subtype*> path;
  const Subtype* current = model.find_subtype(start);
  while (current != nullptr &&
         std::find(path.begin(), path.end(), current) == path.end()) {
    path.push_back(current);
    current = model.find_subtype(current->supertype);
  }
  if (current != path.front()) return {};
  auto first = std::min_element(
      path.begin(), path.end(),
      [&](const Subtype* a, const Subtype* b) { return a < b; });
  std::rotate(path.begin(), first, path.end());
  return path;
}

}  // namespace

const AttributeDef* EntityType::find_attribute(std::string_view attr) const {
  return find_named(attributes, attr);
}

const EntityType* ERModel::find_entity(std::string_view name) const {
  return find_named(entities, name);
}

const Subtype* ERModel::find_subtype(std::string_view name) const {
  return find_named(subtypes, name);
}

const RelationshipType* ERModel::find_relationship(std::string_view name) const {
  return find_named(relationships, name);
}

std::optional<std::size_t> ERModel::subtype_depth(std::string_view name) const {
  std::size_t depth = 0;
  std::string_view current = name;
  // A chain longer than the subtype count must contain a cycle.
  while (depth <= subtypes.size()) {
    if (find_entity(current) != nullptr) return depth;
    const Subtype* sub = find_subtype(current);
    if (sub == nullptr) return std::nullopt;
    current = sub->supertype;
    ++depth;
  }
  return std::nullopt;
}

const EntityType* ERModel::root_entity(std::string_view name) const {
  auto depth = subtype_depth(name);
  if (!depth) return nullptr;
  std::string_view current = name;
  for (std::size_t i = 0; i < *depth; ++i) {
    current = find_subtype(current)->supertype;
  }
  return find_entity(current);
}

std::string_view to_string(CardinalityClass cls) {
  switch (cls) {
    case CardinalityClass::OneOne: return "ONE_ONE";
    case CardinalityClass::OneMany: return "ONE_MANY";
    case CardinalityClass::ManyMany: return "MANY_MANY";
    case CardinalityClass::NAry: return "N_ARY";
  }
  return "?";
}

std::string_view to_string(StepKind step) {
  return kStepNames[static_cast<std::size_t>(step)];
}

std::optional<StepKind> step_from_string(std::string_view text) {
  for (std::size_t i = 0; i < kStepNames.size(); ++i) {
    if (kStepNames[i] == text) return static_cast<StepKind>(i);
  }
  return std::nullopt;
}

bool is_embedding_step(StepKind step) {
  switch (step) {
    case StepKind::GOG:
    case StepKind::GNG:
    case StepKind::SNG:
    case StepKind::SOS:
    case StepKind::SNS:
      return true;
    default:
      return false;
  }
}

bool is_new_relation_step(StepKind step) {
  switch (step) {
    case StepKind::GMG:
    case StepKind::SMG:
    case StepKind::SMS:
    case StepKind::THG:
      return true;
    default:
      return false;
  }
}

bool is_valid_identifier(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) {
    return false;
  }
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Diagnostics check_names(const ERModel& model) {
  Diagnostics out;
  std::map<std::string, SourceSpan, std::less<>> declared;
  auto declare = [&](const std::string& name, SourceSpan span) {
    if (!declared.emplace(name, span).second) {
      out.push_back(make_error(codes::kDuplicateName,
                               "duplicate name " + quoted(name), span));
    }
  };
  for (const auto& e : model.entities) declare(e.name, e.span);
  for (const auto& s : model.subtypes) declare(s.name, s.span);
  for (const auto& r : model.relationships) declare(r.name, r.span);

  auto is_entity_or_subtype = [&](std::string_view name) {
    return model.find_entity(name) != nullptr ||
           model.find_subtype(name) != nullptr;
  };
  for (const auto& s : model.subtypes) {
    if (!is_entity_or_subtype(s.supertype)) {
      out.push_back(make_error(codes::kUnresolvedReference,
                               "unresolved reference " + quoted(s.supertype),
                               s.supertype_span, "subtype " + s.name));
    }
  }
  for (const auto& r : model.relationships) {
    for (const auto& p : r.participations) {
      if (!is_entity_or_subtype(p.target)) {
        out.push_back(make_error(codes::kUnresolvedReference,
                                 "unresolved reference " + quoted(p.target),
                                 p.span, "relationship " + r.name));
      }
    }
  }
  return out;
}

Diagnostics validate(const ERModel& model) {
  Diagnostics out = check_names(model);

  std::map<std::string, std::string, std::less<>> folded;
  auto check_name = [&](const std::string& name, SourceSpan span) {
    if (!is_valid_identifier(name)) {
      out.push_back(make_error(codes::kInvalidIdentifier,
                               "invalid name " + quoted(name), span));
    }
    auto [it, inserted] = folded.emplace(lowered(name), name);
    if (!inserted && it->second != name) {
      out.push_back(make_warning(
          codes::kCaseCollision,
          quoted(name) + " and " + quoted(it->second) +
              " differ only by case and collide as SQL table names",
          span));
    }
  };

  for (const auto& e : model.entities) {
    check_name(e.name, e.span);
    check_attribute_list(e.attributes, e.name, out);
    if (e.pk.empty()) {
      out.push_back(make_error(codes::kMissingKey,
                               "entity " + quoted(e.name) + " has no key",
                               e.span));
    }
    for (const auto& key : e.pk) {
      if (e.find_attribute(key) == nullptr) {
        out.push_back(make_error(codes::kUnknownKeyAttribute,
                                 "key " + quoted(key) + " is not an attribute of " +
                                     quoted(e.name),
                                 e.span));
      }
    }
  }

  for (const auto& s : model.subtypes) {
    check_name(s.name, s.span);
    check_attribute_list(s.attributes, s.name, out);
    const bool resolves = model.find_entity(s.supertype) != nullptr ||
                          model.find_subtype(s.supertype) != nullptr;
    if (!resolves) continue;
    const EntityType* root = model.root_entity(s.name);
    if (root == nullptr) {
      // Reported once per cycle, at its first-declared member.
      auto cycle = subtype_cycle_from(model, s.name);
      if (!cycle.empty() && cycle.front() == &s) {
        std::string path;
        for (const Subtype* member : cycle) path += member->name + " -> ";
        path += s.name;
        out.push_back(make_error(codes::kSubtypeCycle,
                                 "subtype cycle " + path, s.span));
      }
      continue;
    }
    for (const auto& attr : s.attributes) {
      if (std::find(root->pk.begin(), root->pk.end(), attr.name) !=
          root->pk.end()) {
        out.push_back(make_error(
            codes::kShadowsInheritedKey,
            "attribute " + quoted(attr.name) + " of " + quoted(s.name) +
                " collides with the inherited key",
            attr.span));
      }
    }
  }

  for (const auto& r : model.relationships) {
    check_name(r.name, r.span);
    check_attribute_list(r.attributes, r.name, out);
    if (r.participations.size() < 2) {
      out.push_back(make_error(
          codes::kTooFewParticipants,
          "relationship " + quoted(r.name) + " needs at least two participants",
          r.span));
    }
    for (const auto& p : r.participations) {
      if (p.role && !is_valid_identifier(*p.role)) {
        out.push_back(make_error(codes::kInvalidIdentifier,
                                 "invalid role " + quoted(*p.role), p.span));
      }
      if (!p.max.is_unbounded() && p.max.value() == 0) {
        out.push_back(make_error(codes::kZeroMax,
                                 "max must be at least 1", p.span,
                                 "relationship " + r.name));
      } else if (MaxBound(p.min) > p.max) {
        out.push_back(make_error(
            codes::kMinExceedsMax,
            "min exceeds max (" + std::to_string(p.min) + " > " +
                p.max.to_string() + ")",
            p.span, "relationship " + r.name));
      }
    }
  }
  return out;
}

Classification classify(const RelationshipType& rel, const ERModel& model) {
  if (!rel.is_binary()) {
    for (const auto& p : rel.participations) {
      if (model.is_subtype(p.target)) {
        throw TransformError(make_error(
            codes::kNaryWithSubtype,
            "unsupported: n-ary with subtype participant " + quoted(p.target),
            p.span, "relationship " + rel.name));
      }
    }
    return {CardinalityClass::NAry, StepKind::THG, 0};
  }

  const Participation& first = rel.participations[0];
  const Participation& second = rel.participations[1];
  const int subtype_count =
      int{model.is_subtype(first.target)} + int{model.is_subtype(second.target)};

  if (first.max.is_one() && second.max.is_one()) {
    const std::size_t host = &choose_host(rel, model) == &first ? 0 : 1;
    // A 1:1 between a subtype and a regular entity reuses the GOG
    // machinery; the transform flags it.
    return {CardinalityClass::OneOne,
            subtype_count == 2 ? StepKind::SOS : StepKind::GOG, host};
  }
  if (first.max.is_one() || second.max.is_one()) {
    const std::size_t host = first.max.is_one() ? 0 : 1;
    static constexpr std::array kOneMany = {StepKind::GNG, StepKind::SNG,
                                            StepKind::SNS};
    return {CardinalityClass::OneMany, kOneMany[subtype_count], host};
  }
  static constexpr std::array kManyMany = {StepKind::GMG, StepKind::SMG,
                                           StepKind::SMS};
  return {CardinalityClass::ManyMany, kManyMany[subtype_count], 0};
}

const Participation& choose_host(const RelationshipType& rel,
                                 const ERModel& /*model*/) {
  const Participation& first = rel.participations.at(0);
  const Participation& second = rel.participations.at(1);
  const bool first_total = first.min > 0;
  const bool second_total = second.min > 0;
  if (second_total && !first_total) return second;
  return first;
}

}  // namespace er2rel
