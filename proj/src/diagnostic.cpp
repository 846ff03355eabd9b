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

#include "er2rel/diagnostic.hpp"

#include <algorithm>
#include <sstream>

namespace er2rel {

Diagnostic make_error(std::string_view code, std::string message,
                      SourceSpan span, std::string context) {
  return Diagnostic{Severity::Error, std::string(code), std::move(message),
                    span, std::move(context)};
}

Diagnostic make_warning(std::string_view code, std::string message,
                        SourceSpan span, std::string context) {
  return Diagnostic{Severity::Warning, std::string(code), std::move(message),
                    span, std::move(context)};
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

std::string format_diagnostic(const Diagnostic& diagnostic,
                              std::string_view file) {
  std::ostringstream out;
  out << file;
  if (diagnostic.span.known()) {
    out << ':' << diagnostic.span.line << ':' << diagnostic.span.column;
  }
  out << ": " << (diagnostic.is_error() ? "error" : "warning") << '['
      << diagnostic.code << "]: " << diagnostic.message;
  if (!diagnostic.context.empty()) out << " (" << diagnostic.context << ')';
  return out.str();
}

}  // namespace er2rel
