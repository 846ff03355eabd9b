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

#include "er2rel/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace er2rel {

namespace {

enum class TokenKind {
  Ident,
  Int,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Colon,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string_view text;
  SourceSpan span;
};

constexpr std::array<std::string_view, 6> kReserved = {
    "entity", "subtype", "relationship", "key", "of", "as"};

bool is_reserved(std::string_view word) {
  for (auto r : kReserved) {
    if (r == word) return true;
  }
  return false;
}

bool starts_statement(const Token& tok) {
  return tok.kind == TokenKind::Ident &&
         (tok.text == "entity" || tok.text == "subtype" ||
          tok.text == "relationship");
}

std::string describe(const Token& tok) {
  if (tok.kind == TokenKind::End) return "end of input";
  return "'" + std::string(tok.text) + "'";
}

class Lexer {
 public:
  Lexer(std::string_view source, Diagnostics& diags)
      : source_(source), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (pos_ >= source_.size()) break;
      const char c = source_[pos_];
      const SourceSpan start{line_, column_, 1};
      if (std::isalpha(static_cast<unsigned char>(c))) {
        out.push_back(lex_while(TokenKind::Ident, start, [](char ch) {
          return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
        }));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(lex_while(TokenKind::Int, start, [](char ch) {
          return std::isdigit(static_cast<unsigned char>(ch)) != 0;
        }));
      } else if (auto kind = punctuation(c)) {
        out.push_back(Token{*kind, source_.substr(pos_, 1), start});
        advance();
      } else {
        std::size_t begin = pos_;
        do {
          advance();
        } while (pos_ < source_.size() && !is_token_start(source_[pos_]));
        SourceSpan span = start;
        span.length = static_cast<int>(pos_ - begin);
        diags_.push_back(make_error(
            codes::kSyntax,
            "unexpected character(s) '" +
                std::string(source_.substr(begin, pos_ - begin)) + "'",
            span));
      }
    }
    out.push_back(Token{TokenKind::End, {}, SourceSpan{line_, column_, 0}});
    return out;
  }

 private:
  static std::optional<TokenKind> punctuation(char c) {
    switch (c) {
      case '{': return TokenKind::LBrace;
      case '}': return TokenKind::RBrace;
      case '(': return TokenKind::LParen;
      case ')': return TokenKind::RParen;
      case '[': return TokenKind::LBracket;
      case ']': return TokenKind::RBracket;
      case ',': return TokenKind::Comma;
      case ';': return TokenKind::Semi;
      case ':': return TokenKind::Colon;
      default: return std::nullopt;
    }
  }

  static bool is_token_start(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) ||
           std::isspace(static_cast<unsigned char>(c)) ||
           punctuation(c).has_value() || c == '/';
  }

  template <typename Pred>
  Token lex_while(TokenKind kind, SourceSpan span, Pred pred) {
    std::size_t begin = pos_;
    while (pos_ < source_.size() && pred(source_[pos_])) advance();
    span.length = static_cast<int>(pos_ - begin);
    return Token{kind, source_.substr(begin, pos_ - begin), span};
  }

  void skip_trivia() {
    while (pos_ < source_.size()) {
      const char c = source_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < source_.size() &&
                 source_[pos_ + 1] == '/') {
        while (pos_ < source_.size() && source_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  void advance() {
    if (source_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view source_;
  Diagnostics& diags_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// Thrown after the diagnostic has been recorded; unwinds to the nearest
// recovery point.
struct SyntaxError {};

class Parser {
 public:
  Parser(std::vector<Token> tokens, Diagnostics& diags)
      : tokens_(std::move(tokens)), diags_(diags) {}

  ERModel run() {
    while (peek().kind != TokenKind::End) {
      try {
        statement();
      } catch (const SyntaxError&) {
        recover_statement();
      }
    }
    return std::move(model_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() {
    const Token& tok = tokens_[pos_];
    if (tok.kind != TokenKind::End) ++pos_;
    return tok;
  }
  bool at_word(std::string_view word) const {
    return peek().kind == TokenKind::Ident && peek().text == word;
  }

  [[noreturn]] void fail(const Token& at, std::string message,
                         std::string_view code = codes::kSyntax) {
    diags_.push_back(make_error(code, std::move(message), at.span));
    throw SyntaxError{};
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (peek().kind != kind) {
      fail(peek(), "expected " + std::string(what) + ", found " +
                       describe(peek()));
    }
    return take();
  }

  void expect_word(std::string_view word) {
    if (!at_word(word)) {
      fail(peek(), "expected '" + std::string(word) + "', found " +
                       describe(peek()));
    }
    take();
  }

  const Token& identifier(std::string_view what) {
    const Token& tok = expect(TokenKind::Ident, what);
    if (is_reserved(tok.text)) {
      fail(tok, "reserved word '" + std::string(tok.text) +
                    "' cannot be used as " + std::string(what));
    }
    return tok;
  }

  std::uint32_t integer() {
    const Token& tok = expect(TokenKind::Int, "an integer");
    std::uint32_t value = 0;
    auto [ptr, ec] =
        std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
      fail(tok, "integer '" + std::string(tok.text) + "' is out of range");
    }
    return value;
  }

  void statement() {
    if (at_word("entity")) {
      entity();
    } else if (at_word("subtype")) {
      subtype();
    } else if (at_word("relationship")) {
      relationship();
    } else if (peek().kind == TokenKind::Ident) {
      fail(peek(), "unknown keyword '" + std::string(peek().text) + "'",
           codes::kUnknownKeyword);
    } else {
      fail(peek(), "expected a declaration, found " + describe(peek()));
    }
  }

  void entity() {
    take();
    const Token& name = identifier("an entity name");
    EntityType e;
    e.name = std::string(name.text);
    e.span = name.span;
    for (auto& [attr, is_key] : body(/*allow_key=*/true)) {
      if (is_key) e.pk.push_back(attr.name);
      e.attributes.push_back(std::move(attr));
    }
    model_.entities.push_back(std::move(e));
  }

  void subtype() {
    take();
    const Token& name = identifier("a subtype name");
    Subtype s;
    s.name = std::string(name.text);
    s.span = name.span;
    expect_word("of");
    const Token& super = identifier("a supertype name");
    s.supertype = std::string(super.text);
    s.supertype_span = super.span;
    for (auto& decl : body(/*allow_key=*/false)) {
      s.attributes.push_back(std::move(decl.first));
    }
    model_.subtypes.push_back(std::move(s));
  }

  void relationship() {
    take();
    const Token& name = identifier("a relationship name");
    RelationshipType r;
    r.name = std::string(name.text);
    r.span = name.span;
    expect(TokenKind::LParen, "'('");
    r.participations.push_back(participation());
    while (peek().kind == TokenKind::Comma) {
      take();
      r.participations.push_back(participation());
    }
    expect(TokenKind::RParen, "')' or ','");
    for (auto& decl : body(/*allow_key=*/false)) {
      r.attributes.push_back(std::move(decl.first));
    }
    model_.relationships.push_back(std::move(r));
  }

  Participation participation() {
    const Token& target = identifier("an entity or subtype name");
    Participation p;
    p.target = std::string(target.text);
    p.span = target.span;
    if (at_word("as")) {
      take();
      p.role = std::string(identifier("a role name").text);
    }
    expect(TokenKind::LBracket, "'['");
    p.min = integer();
    expect(TokenKind::Comma, "','");
    if (at_word("n")) {
      take();
      p.max = MaxBound::unbounded();
    } else {
      p.max = MaxBound(integer());
    }
    expect(TokenKind::RBracket, "']'");
    return p;
  }

  // Attribute declarations between braces, each paired with its key flag.
  // A malformed declaration is skipped up to its `;`.
  std::vector<std::pair<AttributeDef, bool>> body(bool allow_key) {
    expect(TokenKind::LBrace, "'{'");
    std::vector<std::pair<AttributeDef, bool>> out;
    while (peek().kind != TokenKind::RBrace) {
      if (peek().kind == TokenKind::End || starts_statement(peek())) {
        fail(peek(), "expected '}', found " + describe(peek()));
      }
      try {
        out.push_back(attribute(allow_key));
      } catch (const SyntaxError&) {
        recover_declaration();
      }
    }
    take();
    return out;
  }

  std::pair<AttributeDef, bool> attribute(bool allow_key) {
    bool is_key = false;
    if (at_word("key")) {
      const Token& key = take();
      if (!allow_key) {
        diags_.push_back(make_error(
            codes::kKeyInSubtype,
            "'key' is only allowed in entity declarations", key.span));
      } else {
        is_key = true;
      }
    }
    const Token& name = identifier("an attribute name");
    AttributeDef attr{std::string(name.text), std::nullopt, name.span};
    if (peek().kind == TokenKind::Colon) {
      take();
      attr.sql_type = std::string(identifier("a type name").text);
    }
    expect(TokenKind::Semi, "';'");
    return {std::move(attr), is_key};
  }

  void recover_declaration() {
    while (true) {
      const Token& tok = peek();
      if (tok.kind == TokenKind::End || tok.kind == TokenKind::RBrace ||
          starts_statement(tok)) {
        return;
      }
      take();
      if (tok.kind == TokenKind::Semi) return;
    }
  }

  void recover_statement() {
    // Always make progress past the offending token.
    if (!starts_statement(peek())) take();
    while (true) {
      const Token& tok = peek();
      if (tok.kind == TokenKind::End || starts_statement(tok)) return;
      take();
      if (tok.kind == TokenKind::RBrace) return;
    }
  }

  std::vector<Token> tokens_;
  Diagnostics& diags_;
  std::size_t pos_ = 0;
  ERModel model_;
};

void format_attributes(std::ostringstream& out,
                       const std::vector<AttributeDef>& attributes,
                       const std::vector<std::string>* pk) {
  if (attributes.empty()) {
    out << " {}\n";
    return;
  }
  out << " {\n";
  for (const auto& attr : attributes) {
    out << "  ";
    if (pk != nullptr &&
        std::find(pk->begin(), pk->end(), attr.name) != pk->end()) {
      out << "key ";
    }
    out << attr.name;
    if (attr.sql_type) out << " : " << *attr.sql_type;
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace

ParseResult parse(std::string_view source) {
  ParseResult result;
  auto tokens = Lexer(source, result.diagnostics).run();
  ERModel model = Parser(std::move(tokens), result.diagnostics).run();
  if (has_errors(result.diagnostics)) return result;
  auto names = check_names(model);
  result.diagnostics.insert(result.diagnostics.end(), names.begin(), names.end());
  if (!has_errors(result.diagnostics)) result.model = std::move(model);
  return result;
}

std::string format_model(const ERModel& model) {
  std::ostringstream out;
  bool first = true;
  auto separate = [&] {
    if (!first) out << '\n';
    first = false;
  };
  for (const auto& e : model.entities) {
    separate();
    out << "entity " << e.name;
    format_attributes(out, e.attributes, &e.pk);
  }
  for (const auto& s : model.subtypes) {
    separate();
    out << "subtype " << s.name << " of " << s.supertype;
    format_attributes(out, s.attributes, nullptr);
  }
  for (const auto& r : model.relationships) {
    separate();
    out << "relationship " << r.name << " (";
    for (std::size_t i = 0; i < r.participations.size(); ++i) {
      const auto& p = r.participations[i];
      if (i > 0) out << ", ";
      out << p.target;
      if (p.role) out << " as " << *p.role;
      out << '[' << p.min << ',' << p.max.to_string() << ']';
    }
    out << ')';
    format_attributes(out, r.attributes, nullptr);
  }
  return out.str();
}

}  // namespace er2rel
