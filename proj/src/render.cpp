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

#include "er2rel/render.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace er2rel {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kFormatName = "er2rel.schema";
constexpr int kFormatVersion = 1;

// Subset of SQL reserved words likely to appear as attribute names.
constexpr std::array<std::string_view, 24> kSqlReserved = {
    "all",    "and",   "by",     "check", "column", "create",
    "date",   "default", "from", "group", "index",  "key",
    "not",    "null",  "or",     "order", "primary", "references",
    "select", "table", "time",   "type",  "user",   "where"};

std::string sql_identifier(std::string_view name) {
  bool plain = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0]));
  for (char c : name) {
    plain = plain && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
  }
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (plain && std::find(kSqlReserved.begin(), kSqlReserved.end(), lower) ==
                   kSqlReserved.end()) {
    return std::string(name);
  }
  std::string out = "\"";
  for (char c : name) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

Json max_to_json(const MaxBound& max) {
  if (max.is_unbounded()) return "n";
  return max.value();
}

MaxBound max_from_json(const Json& value) {
  if (value.is_string() && value.get<std::string>() == "n") {
    return MaxBound::unbounded();
  }
  if (value.is_number_unsigned()) return MaxBound(value.get<std::uint32_t>());
  throw StructuredFormatError("max must be a non-negative integer or \"n\"");
}

Json annotation_to_json(const FkAnnotation& annotation) {
  Json out;
  if (const auto* e = std::get_if<EmbeddedAnnotation>(&annotation)) {
    out["kind"] = "embedded";
    out["relationship"] = e->relationship;
    out["near_min"] = e->near_min;
    out["far_min"] = e->far_min;
    out["far_max"] = max_to_json(e->far_max);
  } else {
    const auto& p = std::get<PairAnnotation>(annotation);
    out["kind"] = "pair";
    out["min"] = p.min;
    out["max"] = max_to_json(p.max);
  }
  return out;
}

const Json& field(const Json& object, std::string_view key) {
  if (!object.is_object()) {
    throw StructuredFormatError("expected an object holding '" +
                                std::string(key) + "'");
  }
  auto it = object.find(key);
  if (it == object.end()) {
    throw StructuredFormatError("missing field '" + std::string(key) + "'");
  }
  return *it;
}

template <typename T>
T typed(const Json& object, std::string_view key) {
  try {
    return field(object, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw StructuredFormatError("field '" + std::string(key) +
                                "' has the wrong type: " + e.what());
  }
}

FkAnnotation annotation_from_json(const Json& node) {
  const auto kind = typed<std::string>(node, "kind");
  if (kind == "embedded") {
    return EmbeddedAnnotation{typed<std::string>(node, "relationship"),
                              typed<std::uint32_t>(node, "near_min"),
                              typed<std::uint32_t>(node, "far_min"),
                              max_from_json(field(node, "far_max"))};
  }
  if (kind == "pair") {
    return PairAnnotation{typed<std::uint32_t>(node, "min"),
                          max_from_json(field(node, "max"))};
  }
  throw StructuredFormatError("unknown annotation kind '" + kind + "'");
}

StepKind step_from_json(const Json& node) {
  const auto text = typed<std::string>(node, "step");
  auto step = step_from_string(text);
  if (!step) throw StructuredFormatError("unknown step '" + text + "'");
  return *step;
}

bool is_not_null(const RelAttribute& attr) {
  if (attr.pk) return true;
  if (!attr.fk || !attr.fk->annotation) return false;
  const auto* e = std::get_if<EmbeddedAnnotation>(&*attr.fk->annotation);
  return e != nullptr && e->near_min >= 1;
}

// Adjacent columns drawn from the same key share one FOREIGN KEY clause.
bool same_foreign_key(const FkDescriptor& a, const FkDescriptor& b) {
  return a.references == b.references && a.prefix == b.prefix &&
         a.annotation == b.annotation;
}

}  // namespace

std::string render_annotation(const FkAnnotation& annotation) {
  std::ostringstream out;
  if (const auto* e = std::get_if<EmbeddedAnnotation>(&annotation)) {
    out << '(' << e->relationship << ", " << e->near_min << ", " << e->far_min
        << ", " << e->far_max.to_string() << ')';
  } else {
    const auto& p = std::get<PairAnnotation>(annotation);
    out << '(' << p.min << ", " << p.max.to_string() << ')';
  }
  return out.str();
}

std::string render_relation(const Relation& relation,
                            const TextOptions& options) {
  std::string out = relation.name + "[";
  for (std::size_t i = 0; i < relation.attributes.size(); ++i) {
    const RelAttribute& attr = relation.attributes[i];
    if (i > 0) out += ", ";
    if (attr.pk && options.pk_marker == PkMarker::Underscore) {
      out += "_" + attr.display_name() + "_";
    } else {
      out += attr.display_name();
    }
    if (attr.fk && attr.fk->annotation) {
      out += render_annotation(*attr.fk->annotation);
    }
  }
  return out + "]";
}

std::string render_text(const Schema& schema, const TextOptions& options) {
  std::string out;
  for (const auto& relation : schema.relations) {
    out += render_relation(relation, options);
    out += '\n';
  }
  return out;
}

std::string render_structured(const Schema& schema) {
  Json root;
  root["format"] = kFormatName;
  root["version"] = kFormatVersion;
  Json relations = Json::array();
  for (const auto& relation : schema.relations) {
    Json node;
    node["name"] = relation.name;
    if (auto step = schema.relation_step(relation.name)) {
      node["step"] = to_string(*step);
    }
    Json attributes = Json::array();
    for (const auto& attr : relation.attributes) {
      Json a;
      a["base_name"] = attr.base_name;
      a["display_name"] = attr.display_name();
      a["pk"] = attr.pk;
      if (attr.sql_type) a["sql_type"] = *attr.sql_type;
      if (auto step = schema.attribute_step(relation.name, attr.display_name())) {
        a["step"] = to_string(*step);
      }
      if (attr.fk) {
        Json fk;
        fk["references"] = attr.fk->references;
        fk["referenced_pk"] = attr.fk->referenced_pk;
        if (attr.fk->prefix) fk["prefix"] = *attr.fk->prefix;
        if (attr.fk->annotation) {
          fk["annotation"] = annotation_to_json(*attr.fk->annotation);
        }
        a["fk"] = std::move(fk);
      }
      attributes.push_back(std::move(a));
    }
    node["attributes"] = std::move(attributes);
    relations.push_back(std::move(node));
  }
  root["relations"] = std::move(relations);
  return root.dump(2) + "\n";
}

Schema parse_structured(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuredFormatError(std::string("malformed JSON: ") + e.what());
  }
  if (typed<std::string>(root, "format") != kFormatName) {
    throw StructuredFormatError("not an er2rel schema document");
  }
  if (typed<int>(root, "version") != kFormatVersion) {
    throw StructuredFormatError("unsupported schema document version");
  }
  const Json& relations = field(root, "relations");
  if (!relations.is_array()) {
    throw StructuredFormatError("'relations' must be an array");
  }

  Schema schema;
  for (const Json& node : relations) {
    Relation relation{typed<std::string>(node, "name"), {}};
    if (node.contains("step")) {
      schema.provenance[relation.name] = step_from_json(node);
    }
    const Json& attributes = field(node, "attributes");
    if (!attributes.is_array()) {
      throw StructuredFormatError("'attributes' must be an array");
    }
    for (const Json& a : attributes) {
      RelAttribute attr;
      attr.base_name = typed<std::string>(a, "base_name");
      attr.pk = typed<bool>(a, "pk");
      if (a.contains("sql_type")) attr.sql_type = typed<std::string>(a, "sql_type");
      if (a.contains("fk")) {
        const Json& fk = a["fk"];
        FkDescriptor descriptor;
        descriptor.references = typed<std::string>(fk, "references");
        descriptor.referenced_pk = typed<std::string>(fk, "referenced_pk");
        if (fk.contains("prefix")) {
          descriptor.prefix = typed<std::string>(fk, "prefix");
        }
        if (fk.contains("annotation")) {
          descriptor.annotation = annotation_from_json(fk["annotation"]);
        }
        attr.fk = std::move(descriptor);
      }
      const auto display = typed<std::string>(a, "display_name");
      if (display != attr.display_name()) {
        throw StructuredFormatError("display_name '" + display +
                                    "' does not match prefix and base_name");
      }
      if (a.contains("step")) {
        schema.provenance[Schema::attribute_key(relation.name, display)] =
            step_from_json(a);
      }
      relation.attributes.push_back(std::move(attr));
    }
    schema.relations.push_back(std::move(relation));
  }
  return schema;
}

std::string render_sql(const Schema& schema) {
  std::ostringstream out;
  bool first = true;
  for (const auto& relation : schema.relations) {
    if (!first) out << '\n';
    first = false;

    for (const auto& attr : relation.attributes) {
      if (attr.fk && attr.fk->annotation) {
        out << "-- cardinality: " << attr.display_name() << ' '
            << render_annotation(*attr.fk->annotation) << '\n';
      }
    }

    std::vector<std::string> lines;
    for (const auto& attr : relation.attributes) {
      std::string line = sql_identifier(attr.display_name()) + " " +
                         attr.sql_type.value_or("TEXT");
      if (is_not_null(attr)) line += " NOT NULL";
      lines.push_back(std::move(line));
    }

    std::string key_list;
    for (const RelAttribute* key : relation.pk_attributes()) {
      if (!key_list.empty()) key_list += ", ";
      key_list += sql_identifier(key->display_name());
    }
    if (!key_list.empty()) lines.push_back("PRIMARY KEY (" + key_list + ")");

    const auto& attrs = relation.attributes;
    for (std::size_t i = 0; i < attrs.size();) {
      if (!attrs[i].fk) {
        ++i;
        continue;
      }
      const FkDescriptor& fk = *attrs[i].fk;
      std::string columns;
      std::string referenced;
      std::size_t j = i;
      for (; j < attrs.size() && attrs[j].fk && same_foreign_key(*attrs[j].fk, fk);
           ++j) {
        if (j > i) {
          columns += ", ";
          referenced += ", ";
        }
        columns += sql_identifier(attrs[j].display_name());
        referenced += sql_identifier(attrs[j].fk->referenced_pk);
      }
      lines.push_back("FOREIGN KEY (" + columns + ") REFERENCES " +
                      sql_identifier(fk.references) + " (" + referenced + ")");
      i = j;
    }

    out << "CREATE TABLE " << sql_identifier(relation.name) << " (\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
      out << "  " << lines[i] << (i + 1 < lines.size() ? ",\n" : "\n");
    }
    out << ");\n";
  }
  return out.str();
}

}  // namespace er2rel
