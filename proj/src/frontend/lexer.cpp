// Copyright 2026 The QHC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qhc/frontend/lexer.hpp"

#include <array>
#include <cctype>

#include "qhc/error.hpp"

namespace qhc::frontend {

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {
    "qbit", "cbit", "shared", "double", "const", "int", "kernel", "for", "in", "pi"};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Integer: return "integer";
    case TokenKind::Float: return "float";
    case TokenKind::Punct: return "punctuation";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

bool is_keyword(std::string_view word) {
  for (std::string_view k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  std::uint32_t line = 1;
  std::size_t line_start = 0;

  auto push = [&](TokenKind kind, std::size_t start) {
    Token t;
    t.kind = kind;
    t.text = std::string(src.substr(start, i - start));
    t.offset = static_cast<std::uint32_t>(start);
    t.line = line;
    t.column = static_cast<std::uint32_t>(start - line_start + 1);
    tokens.push_back(std::move(t));
  };
  auto fail = [&](std::size_t at, std::size_t len, const std::string &why) {
    const auto column = static_cast<std::uint32_t>(at - line_start + 1);
    throw Error(ErrorCode::LexError,
                why + " '" + std::string(src.substr(at, len)) + "'",
                SourceLocation{line, column});
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < src.size() && ident_char(src[i])) ++i;
      push(is_keyword(src.substr(start, i - start)) ? TokenKind::Keyword
                                                    : TokenKind::Identifier,
           start);
      continue;
    }
    if (digit(c)) {
      while (i < src.size() && digit(src[i])) ++i;
      bool is_float = false;
      // "0..3" is a range, so a '.' only starts a fraction when a digit follows.
      if (i + 1 < src.size() && src[i] == '.' && digit(src[i + 1])) {
        is_float = true;
        ++i;
        while (i < src.size() && digit(src[i])) ++i;
      }
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < src.size() && digit(src[j])) {
          is_float = true;
          i = j;
          while (i < src.size() && digit(src[i])) ++i;
        }
      }
      if (i < src.size() && ident_char(src[i])) {
        std::size_t end = i;
        while (end < src.size() && ident_char(src[end])) ++end;
        fail(start, end - start, "malformed number");
      }
      push(is_float ? TokenKind::Float : TokenKind::Integer, start);
      continue;
    }
    if (c == '.' && i + 1 < src.size() && src[i + 1] == '.') {
      i += 2;
      push(TokenKind::Punct, start);
      continue;
    }
    switch (c) {
      case '(': case ')': case '[': case ']': case '{': case '}':
      case ',': case ';': case '=': case '+': case '-': case '*':
      case '/': case '%':
        ++i;
        push(TokenKind::Punct, start);
        continue;
      default:
        break;
    }
    // Report the whole UTF-8 sequence rather than a lone lead byte.
    std::size_t len = 1;
    const auto lead = static_cast<unsigned char>(c);
    if (lead >= 0xC0) {
      while (start + len < src.size() &&
             (static_cast<unsigned char>(src[start + len]) & 0xC0) == 0x80) {
        ++len;
      }
    }
    fail(start, len, "unexpected character");
  }
  Token end;
  end.kind = TokenKind::End;
  end.offset = static_cast<std::uint32_t>(src.size());
  end.line = line;
  end.column = static_cast<std::uint32_t>(src.size() - line_start + 1);
  tokens.push_back(std::move(end));
  return tokens;
}

}  // namespace qhc::frontend
