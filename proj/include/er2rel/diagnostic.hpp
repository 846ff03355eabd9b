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

#ifndef ER2REL_DIAGNOSTIC_HPP_
#define ER2REL_DIAGNOSTIC_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace er2rel {

/// 1-based position of a token in DSL source. A zero line means the
/// construct was built programmatically and has no source position.
struct SourceSpan {
  int line = 0;
  int column = 0;
  int length = 0;

  bool known() const { return line >= 1 && column >= 1; }
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { Error, Warning };

/// Stable diagnostic codes. Tests and tooling match on these strings.
namespace codes {
inline constexpr std::string_view kSyntax = "syntax";
inline constexpr std::string_view kUnknownKeyword = "unknown-keyword";
inline constexpr std::string_view kDuplicateName = "duplicate-name";
inline constexpr std::string_view kUnresolvedReference = "unresolved-reference";
inline constexpr std::string_view kInvalidIdentifier = "invalid-identifier";
inline constexpr std::string_view kDuplicateAttribute = "duplicate-attribute";
inline constexpr std::string_view kMissingKey = "missing-key";
inline constexpr std::string_view kUnknownKeyAttribute = "unknown-key-attribute";
inline constexpr std::string_view kKeyInSubtype = "key-in-subtype";
inline constexpr std::string_view kShadowsInheritedKey = "shadows-inherited-key";
inline constexpr std::string_view kSubtypeCycle = "subtype-cycle";
inline constexpr std::string_view kTooFewParticipants = "too-few-participants";
inline constexpr std::string_view kMinExceedsMax = "min-exceeds-max";
inline constexpr std::string_view kZeroMax = "zero-max";
inline constexpr std::string_view kNaryWithSubtype = "nary-with-subtype";
inline constexpr std::string_view kAttributeCollision = "attribute-collision";
inline constexpr std::string_view kRelationCollision = "relation-collision";
inline constexpr std::string_view kCaseCollision = "case-collision";
inline constexpr std::string_view kNonPaperStep = "non-paper-step";
inline constexpr std::string_view kMixedSubtypeStep = "mixed-subtype-step";
}  // namespace codes

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceSpan span;
  // Step or declaration the diagnostic was raised from, e.g. "step GOG".
  std::string context;

  bool is_error() const { return severity == Severity::Error; }
};

using Diagnostics = std::vector<Diagnostic>;

Diagnostic make_error(std::string_view code, std::string message,
                      SourceSpan span = {}, std::string context = {});
Diagnostic make_warning(std::string_view code, std::string message,
                        SourceSpan span = {}, std::string context = {});

bool has_errors(std::span<const Diagnostic> diagnostics);

/// `file:line:col: severity[code]: message`. Unknown spans print as
/// `file: severity[code]: message (context)`.
std::string format_diagnostic(const Diagnostic& diagnostic,
                              std::string_view file);

/// Raised by a transformation step that cannot proceed.
class TransformError : public std::runtime_error {
 public:
  explicit TransformError(Diagnostic diagnostic)
      : std::runtime_error(diagnostic.message),
        diagnostic_(std::move(diagnostic)) {}

  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

}  // namespace er2rel

#endif  // ER2REL_DIAGNOSTIC_HPP_
