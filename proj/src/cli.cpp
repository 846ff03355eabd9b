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

#include "er2rel/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "er2rel/dsl.hpp"
#include "er2rel/fixtures.hpp"
#include "er2rel/render.hpp"
#include "er2rel/transform.hpp"

namespace er2rel::cli {

namespace {

struct Options {
  std::string input;
  std::string format = "text";
  std::string pk_marker = "none";
  std::string fixture;
  bool fixtures_requested = false;
};

void report(const Diagnostics& diagnostics, std::string_view file,
            std::ostream& err) {
  for (const auto& d : diagnostics) err << format_diagnostic(d, file) << '\n';
}

int list_fixtures(std::ostream& out) {
  for (const auto& f : fixtures()) {
    out << f.id << "  step " << to_string(f.step) << "  " << f.title << '\n';
  }
  return kExitOk;
}

int usage_error(const std::string& message, const CLI::App& app,
                std::ostream& err) {
  err << "er2rel: " << message << "\n\n" << app.help();
  return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Compiles ER models into annotated relational schemas.",
               "er2rel"};
  app.require_subcommand(1);

  Options opts;
  CLI::App* transform_cmd = app.add_subcommand(
      "transform", "Transform an ER model file ('-' reads standard input)");
  transform_cmd->add_option("input", opts.input, "Model file, or - for stdin");
  transform_cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "structured", "sql"}));
  transform_cmd->add_option("--pk-marker", opts.pk_marker,
                            "Key marking in text output")
      ->check(CLI::IsMember({"none", "underscore"}));
  CLI::Option* fixtures_opt =
      transform_cmd
          ->add_option("--fixtures", opts.fixture,
                       "List the built-in figure models, or print one as DSL")
          ->expected(0, 1);

  std::vector<std::string> reversed;
  if (args.size() > 1) reversed.assign(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what(), app, err);
  }

  if (fixtures_opt->count() > 0) {
    if (opts.fixture.empty()) return list_fixtures(out);
    const Fixture* fixture = find_fixture(opts.fixture);
    if (fixture == nullptr) {
      return usage_error("unknown fixture '" + opts.fixture + "'", app, err);
    }
    out << fixture->source;
    return kExitOk;
  }

  if (opts.input.empty()) {
    return usage_error("missing input file", app, err);
  }

  std::string source;
  std::string display_name = opts.input;
  if (opts.input == "-") {
    display_name = "<stdin>";
    source.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(opts.input, std::ios::binary);
    if (!file) {
      err << "er2rel: cannot open '" << opts.input << "'\n";
      return kExitUsage;
    }
    source.assign(std::istreambuf_iterator<char>(file), {});
  }

  ParseResult parsed = parse(source);
  report(parsed.diagnostics, display_name, err);
  if (!parsed.ok()) return kExitDiagnostics;

  TransformResult result = transform(*parsed.model);
  report(result.diagnostics, display_name, err);
  if (!result.ok()) return kExitDiagnostics;

  if (opts.format == "structured") {
    out << render_structured(*result.schema);
  } else if (opts.format == "sql") {
    out << render_sql(*result.schema);
  } else {
    TextOptions text;
    text.pk_marker =
        opts.pk_marker == "underscore" ? PkMarker::Underscore : PkMarker::None;
    out << render_text(*result.schema, text);
  }
  return kExitOk;
}

}  // namespace er2rel::cli
