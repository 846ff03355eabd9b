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

// Release acceptance run. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "er2rel/dsl.hpp"
#include "er2rel/fixtures.hpp"
#include "er2rel/render.hpp"
#include "er2rel/transform.hpp"
#include "support/invariants.hpp"
#include "support/random_model.hpp"
#include "support/reference_transform.hpp"

namespace {

using namespace er2rel;
using namespace er2rel::testing;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(bool ok, const std::string& criterion, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_ms(double ms) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << ms << "ms";
  return out.str();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<Schema> compile(std::string_view source) {
  ParseResult parsed = parse(source);
  if (!parsed.ok()) return std::nullopt;
  return transform(*parsed.model).schema;
}

// Parse, transform and render one fixture; the figure line must match.
void figure_line(const Fixture& f) {
  // Warm once so the timed run measures the pipeline, not page faults.
  (void)compile(f.source);
  const auto start = Clock::now();
  std::optional<Schema> schema = compile(f.source);
  std::string line = "<no schema>";
  if (schema) {
    if (const Relation* r = schema->find(f.result_relation)) line = render_relation(*r);
  }
  const double ms = millis_since(start);
  const bool exact = line == f.result_line;
  report(exact && ms < 10.0,
         "golden " + std::string(f.id) + " line byte-exact in <10ms",
         (exact ? std::string(f.result_line) : "got '" + line + "'") + ", " + fmt_ms(ms));
}

void full_schema_goldens() {
  const std::filesystem::path dir = ER2REL_FIXTURES_DIR;
  std::vector<std::string> bad;
  for (const auto& f : fixtures()) {
    const auto base = dir / std::string(f.id);
    std::optional<Schema> schema = compile(slurp(base / "model.er"));
    if (!schema || render_text(*schema) != slurp(base / "expected.txt") ||
        render_structured(*schema) != slurp(base / "expected.json") ||
        render_sql(*schema) != slurp(base / "expected.sql")) {
      bad.emplace_back(f.id);
    }
  }
  const std::string fig6 = slurp(dir / "fig6" / "expected.txt");
  const long lines = std::count(fig6.begin(), fig6.end(), '\n');
  const bool doctor = fig6.find("Doctor[VolNo]\n") != std::string::npos;
  std::string detail = bad.empty() ? "all fixtures match" : "mismatch:";
  for (const auto& id : bad) detail += " " + id;
  detail += "; fig6 has " + std::to_string(lines) + " relations";
  report(bad.empty() && lines == 5 && doctor,
         "full-schema golden files (fig6: 5 relations incl. Doctor[VolNo])", detail);
}

void property_suite() {
  constexpr int kModels = 1000;
  const auto start = Clock::now();
  RandomModelGenerator gen(20261019);
  int rejected = 0;
  std::string first_failure;
  int failing = 0;
  for (int i = 0; i < kModels; ++i) {
    const ERModel model = gen.next_transformable(&rejected);
    TransformResult result = transform(model);
    if (!result.ok()) {
      ++failing;
      continue;
    }
    Violations v = check_determinism(model);
    if (!v.empty() && first_failure.empty()) first_failure = "determinism: " + v[0];
    bool ok = v.empty();
    for (const auto& check : schema_checks()) {
      Violations cv = check.check(model, *result.schema);
      if (!cv.empty()) {
        ok = false;
        if (first_failure.empty()) first_failure = std::string(check.name) + ": " + cv[0];
      }
    }
    if (!ok) ++failing;
  }
  const double ms = millis_since(start);
  std::string detail = std::to_string(kModels) + " models, " + std::to_string(rejected) +
                       " draws rejected, " + fmt_ms(ms);
  if (!first_failure.empty()) detail += "; " + first_failure;
  report(failing == 0 && ms < 30000.0, "property suite over >=1000 random models in <30s",
         detail);
}

void oracle_equivalence() {
  constexpr int kModels = 200;
  RandomModelGenerator gen(0x0AC1E);
  int mismatches = 0;
  for (int i = 0; i < kModels; ++i) {
    const ERModel model = gen.next_transformable();
    TransformResult result = transform(model);
    if (!result.ok() || reference_transform(model) != result.schema->relations) {
      ++mismatches;
    }
  }
  report(mismatches == 0, "oracle equivalence on 200 random models",
         std::to_string(mismatches) + " mismatches");
}

void round_trips() {
  int bad_format = 0;
  int bad_structured = 0;
  int schemas = 0;
  auto check_model = [&](const ERModel& model) {
    ParseResult back = parse(format_model(model));
    if (!back.ok() || !(*back.model == model)) ++bad_format;
    TransformResult result = transform(model);
    if (!result.ok()) return;
    ++schemas;
    try {
      if (!(parse_structured(render_structured(*result.schema)) == *result.schema)) {
        ++bad_structured;
      }
    } catch (const StructuredFormatError&) {
      ++bad_structured;
    }
  };
  for (const auto& f : fixtures()) {
    ParseResult parsed = parse(f.source);
    if (!parsed.ok()) {
      ++bad_format;
      continue;
    }
    check_model(*parsed.model);
  }
  RandomModelGenerator gen(0x5eed);
  for (int i = 0; i < 200; ++i) check_model(gen.next());
  report(bad_format == 0, "parse(format(m)) == m on fixtures and 200 random models",
         std::to_string(bad_format) + " failures");
  report(bad_structured == 0, "parse_structured(render_structured(s)) == s",
         std::to_string(schemas) + " schemas, " + std::to_string(bad_structured) +
             " failures");
}

struct ErrorCase {
  const char* name;
  std::string_view code;
  const char* source;
};

// Error codes from parsing, then validation and transform if parsing passes.
Diagnostics diagnose(std::string_view source) {
  ParseResult parsed = parse(source);
  if (!parsed.ok()) return parsed.diagnostics;
  return transform(*parsed.model).diagnostics;
}

void diagnostics() {
  const ErrorCase cases[] = {
      {"subtype cycle", codes::kSubtypeCycle,
       "entity E { key K; }\nsubtype A of B {}\nsubtype B of A {}\n"},
      {"min > max", codes::kMinExceedsMax,
       "entity A { key K; }\nentity B { key L; }\nrelationship R (A[3,2], B[0,n]) {}\n"},
      {"unresolved reference", codes::kUnresolvedReference,
       "entity Employee { key EmpNo; }\n"
       "relationship Assigned (Employee[1,1], Projec[0,1]) {}\n"},
      {"n-ary with subtype", codes::kNaryWithSubtype,
       "entity A { key K; }\nentity B { key L; }\nsubtype S of A {}\n"
       "relationship R (A[0,n], B[0,n], S[1,n]) {}\n"},
      {"duplicate FK display name", codes::kAttributeCollision,
       "entity Employee { key EmpNo; }\n"
       "relationship Mentors (Employee[0,n], Employee[0,n]) {}\n"},
      {"name collision", codes::kDuplicateName,
       "entity Employee { key EmpNo; }\nentity Project { key ProNo; }\n"
       "relationship Project (Employee[0,n], Project[0,n]) {}\n"},
  };
  for (const auto& c : cases) {
    Diagnostics diags = diagnose(c.source);
    std::size_t errors = 0;
    bool exact = false;
    std::string where;
    for (const auto& d : diags) {
      if (!d.is_error()) continue;
      ++errors;
      exact = d.code == c.code && d.span.known();
      where = format_diagnostic(d, "case.er");
    }
    report(errors == 1 && exact,
           std::string("diagnostic: ") + c.name + " -> " + std::string(c.code) +
               " with location",
           errors == 1 ? where : std::to_string(errors) + " errors");
  }
}

int run_cli(const std::string& args) {
  const std::string command =
      std::string(ER2REL_CLI_PATH) + " " + args + " >/dev/null 2>&1 </dev/null";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void exit_codes() {
  const std::filesystem::path bad =
      std::filesystem::temp_directory_path() / "er2rel_acceptance_bad.er";
  std::ofstream(bad) << "entity A { key K; }\nentity B { key L; }\n"
                        "relationship R (A[3,2], B[0,n]) {}\n";
  const std::string good = std::string(ER2REL_FIXTURES_DIR) + "/fig1/model.er";
  const int ok = run_cli("transform " + good);
  const int diag = run_cli("transform " + bad.string());
  const int usage_missing = run_cli("transform /nonexistent/model.er");
  const int usage_flag = run_cli("transform " + good + " --format xml");
  std::filesystem::remove(bad);
  report(ok == 0 && diag == 1 && usage_missing == 2 && usage_flag == 2,
         "CLI exit codes 0/1/2",
         "ok=" + std::to_string(ok) + " diagnostics=" + std::to_string(diag) +
             " missing-file=" + std::to_string(usage_missing) +
             " bad-flag=" + std::to_string(usage_flag));
}

}  // namespace

int main() {
  for (const auto& f : fixtures()) figure_line(f);
  full_schema_goldens();
  property_suite();
  oracle_equivalence();
  round_trips();
  diagnostics();
  exit_codes();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) +
                                                           " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
