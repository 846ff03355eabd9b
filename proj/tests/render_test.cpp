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

#include <gtest/gtest.h>
#include <sqlite3.h>

#include <json.hpp>

#include "er2rel/render.hpp"
#include "support/random_model.hpp"
#include "test_helpers.hpp"

namespace er2rel::testing {
namespace {

using nlohmann::json;

Schema fixture_schema(std::string_view id) { return must_transform(fixture_model(id)); }

TEST(RenderTextTest, UnderscoreMarksKeys) {
  Schema schema = fixture_schema("fig2");
  EXPECT_EQ(line_of(schema, "WorkOn", {PkMarker::Underscore}),
            "WorkOn[_EmpNo_(1, 4), _ProNo_(2, 5), Hours]");
  EXPECT_EQ(line_of(schema, "Employee", {PkMarker::Underscore}),
            "Employee[_EmpNo_, Name, Address, Salary]");
}

TEST(RenderTextTest, UnderscoreWrapsPrefixedName) {
  Schema schema = fixture_schema("fig4");
  EXPECT_EQ(line_of(schema, "Consult", {PkMarker::Underscore}),
            "Consult[_Engineer~EmpNo_(2, 4), _ProNo_(1, n), Description, Date]");
}

TEST(RenderTextTest, EmptySchemaIsEmpty) {
  EXPECT_EQ(render_text(Schema{}), "");
}

TEST(RenderTextTest, OneLinePerRelation) {
  Schema schema = fixture_schema("fig6");
  const std::string text = render_text(schema);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
  EXPECT_EQ(text.back(), '\n');
}

TEST(RenderTextTest, Annotations) {
  EXPECT_EQ(render_annotation(EmbeddedAnnotation{"Assigned", 1, 0, MaxBound(1)}),
            "(Assigned, 1, 0, 1)");
  EXPECT_EQ(render_annotation(PairAnnotation{2, MaxBound::unbounded()}), "(2, n)");
}

TEST(RenderStructuredTest, FigureEightCarriesPairs) {
  const json doc = json::parse(render_structured(fixture_schema("fig8")));
  EXPECT_EQ(doc["format"], "er2rel.schema");
  EXPECT_EQ(doc["version"], 1);
  const json& supply = doc["relations"][3];
  EXPECT_EQ(supply["name"], "Supply");
  EXPECT_EQ(supply["step"], "THG");
  const json& sup = supply["attributes"][0];
  EXPECT_EQ(sup["display_name"], "SupNo");
  EXPECT_EQ(sup["pk"], true);
  EXPECT_EQ(sup["fk"]["references"], "Supplier");
  EXPECT_EQ(sup["fk"]["annotation"]["kind"], "pair");
  EXPECT_EQ(sup["fk"]["annotation"]["min"], 2);
  EXPECT_EQ(sup["fk"]["annotation"]["max"], "n");
  EXPECT_EQ(supply["attributes"][2]["fk"]["annotation"]["max"], 6);
  EXPECT_FALSE(supply["attributes"][3].contains("fk"));
}

TEST(RenderStructuredTest, PlainRelationHasNoForeignKeys) {
  const json doc = json::parse(render_structured(fixture_schema("fig2")));
  for (const auto& attr : doc["relations"][0]["attributes"]) {
    EXPECT_FALSE(attr.contains("fk"));
  }
}

TEST(RenderStructuredTest, EmbeddedAnnotationFields) {
  const json doc = json::parse(render_structured(fixture_schema("fig1")));
  const json& fk = doc["relations"][1]["attributes"][4]["fk"];
  EXPECT_EQ(fk["references"], "Project");
  EXPECT_EQ(fk["referenced_pk"], "ProNo");
  EXPECT_EQ(fk["annotation"]["kind"], "embedded");
  EXPECT_EQ(fk["annotation"]["relationship"], "Assigned");
  EXPECT_EQ(fk["annotation"]["near_min"], 1);
  EXPECT_EQ(fk["annotation"]["far_min"], 0);
  EXPECT_EQ(fk["annotation"]["far_max"], 1);
}

TEST(RenderStructuredTest, RoundTripsEveryFixture) {
  for (const auto& f : fixtures()) {
    Schema schema = fixture_schema(f.id);
    EXPECT_EQ(parse_structured(render_structured(schema)), schema) << f.id;
  }
}

TEST(RenderStructuredTest, RoundTripsRandomSchemas) {
  RandomModelGenerator gen(0xC0FFEE);
  for (int i = 0; i < 200; ++i) {
    Schema schema = must_transform(gen.next_transformable());
    const std::string text = render_structured(schema);
    Schema back = parse_structured(text);
    ASSERT_EQ(back, schema) << text;
    EXPECT_EQ(render_structured(back), text);
  }
}

TEST(RenderStructuredTest, MalformedInputs) {
  EXPECT_THROW(parse_structured("not json"), StructuredFormatError);
  EXPECT_THROW(parse_structured(R"({"format":"other","version":1,"relations":[]})"),
               StructuredFormatError);
  EXPECT_THROW(parse_structured(R"({"format":"er2rel.schema","version":2,"relations":[]})"),
               StructuredFormatError);
  EXPECT_THROW(parse_structured(R"({"format":"er2rel.schema","version":1})"),
               StructuredFormatError);
  EXPECT_THROW(parse_structured(R"({"format":"er2rel.schema","version":1,"relations":[
      {"name":"A","attributes":[{"base_name":"K","display_name":"X","pk":true}]}]})"),
               StructuredFormatError);
  EXPECT_THROW(parse_structured(R"({"format":"er2rel.schema","version":1,"relations":[
      {"name":"A","attributes":[{"base_name":"K","display_name":"K","pk":true,
       "fk":{"references":"B","referenced_pk":["K"],
             "annotation":{"kind":"pair","min":1,"max":"many"}}}]}]})"),
               StructuredFormatError);
}

TEST(RenderStructuredTest, EmptySchema) {
  Schema back = parse_structured(render_structured(Schema{}));
  EXPECT_TRUE(back.relations.empty());
}

TEST(RenderSqlTest, FigureOneEmbeddedKeyIsNotNull) {
  const std::string sql = render_sql(fixture_schema("fig1"));
  EXPECT_NE(sql.find("  ProNo TEXT NOT NULL,"), std::string::npos) << sql;
  EXPECT_NE(sql.find("FOREIGN KEY (ProNo) REFERENCES Project (ProNo)"), std::string::npos)
      << sql;
  EXPECT_NE(sql.find("-- cardinality: ProNo (Assigned, 1, 0, 1)"), std::string::npos) << sql;
}

TEST(RenderSqlTest, FigureTwoCompositeKey) {
  const std::string sql = render_sql(fixture_schema("fig2"));
  EXPECT_NE(sql.find("PRIMARY KEY (EmpNo, ProNo)"), std::string::npos) << sql;
  EXPECT_NE(sql.find("CREATE TABLE WorkOn ("), std::string::npos) << sql;
}

TEST(RenderSqlTest, OptionalEmbeddedKeyIsNullable) {
  Schema schema = must_transform(must_parse(R"(
    entity Employee { key EmpNo; }
    entity Department { key DeptNo; }
    relationship Works_For (Department[1,n], Employee[0,1]) {}
  )"));
  const std::string sql = render_sql(schema);
  EXPECT_NE(sql.find("  DeptNo TEXT,"), std::string::npos) << sql;
}

TEST(RenderSqlTest, PrefixedNamesAreQuoted) {
  const std::string sql = render_sql(fixture_schema("fig4"));
  EXPECT_NE(sql.find("\"Engineer~EmpNo\""), std::string::npos) << sql;
}

TEST(RenderSqlTest, DeclaredTypesAreUsed) {
  Schema schema = must_transform(must_parse(R"(
    entity Employee { key EmpNo : INTEGER; Salary : REAL; }
  )"));
  const std::string sql = render_sql(schema);
  EXPECT_NE(sql.find("EmpNo INTEGER NOT NULL"), std::string::npos) << sql;
  EXPECT_NE(sql.find("Salary REAL"), std::string::npos) << sql;
}

bool executes(const std::string& sql, std::string* error) {
  sqlite3* db = nullptr;
  if (sqlite3_open(":memory:", &db) != SQLITE_OK) return false;
  char* message = nullptr;
  const std::string script = "PRAGMA foreign_keys = ON;\n" + sql;
  const int rc = sqlite3_exec(db, script.c_str(), nullptr, nullptr, &message);
  if (message != nullptr) {
    *error = message;
    sqlite3_free(message);
  }
  sqlite3_close(db);
  return rc == SQLITE_OK;
}

TEST(RenderSqlTest, EveryFixtureExecutesInSqlite) {
  for (const auto& f : fixtures()) {
    std::string error;
    const std::string sql = render_sql(fixture_schema(f.id));
    EXPECT_TRUE(executes(sql, &error)) << f.id << ": " << error << "\n" << sql;
  }
}

TEST(RenderSqlTest, RandomSchemasExecuteInSqlite) {
  RandomModelGenerator gen(0xD0D0);
  for (int i = 0; i < 100; ++i) {
    std::string error;
    const std::string sql = render_sql(must_transform(gen.next_transformable()));
    ASSERT_TRUE(executes(sql, &error)) << error << "\n" << sql;
  }
}

}  // namespace
}  // namespace er2rel::testing
