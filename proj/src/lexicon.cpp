// Copyright 2026 The Morphonet Authors.
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

#include "morphonet/lexicon.hpp"

#include "morphonet/error.hpp"
#include "morphonet/utf8.hpp"

namespace morphonet {

std::optional<Pos> ParsePos(std::string_view tag) {
  if (tag.size() != 1) return std::nullopt;
  switch (tag[0]) {
    case 'A': return Pos::kA;
    case 'N': return Pos::kN;
    case 'R': return Pos::kR;
    case 'V': return Pos::kV;
    case 'X': return Pos::kX;
    default: return std::nullopt;
  }
}

char PosChar(Pos pos) { return static_cast<char>(pos); }

void ValidateLemma(std::string_view lemma) {
  if (lemma.empty()) {
    throw Error(ErrorCode::kInvalidInput, "empty lemma");
  }
  for (char c : lemma) {
    if (c == '$' || c == '_' || c == ' ' || c == '\t' || c == '\n' ||
        c == '\r' || c == '\v' || c == '\f') {
      throw Error(ErrorCode::kInvalidInput,
                  "lemma '" + std::string(lemma) +
                      "' contains a reserved character ('$', '_' or space)");
    }
  }
  utf8::Decode(lemma);  // throws on malformed input
}

namespace {

std::pair<Pos, std::string> SplitTagged(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidInput,
                "expected 'pos.lemma', got '" + std::string(text) + "'");
  }
  const auto pos = ParsePos(text.substr(0, dot));
  if (!pos) {
    throw Error(ErrorCode::kInvalidInput,
                "unknown POS tag in '" + std::string(text) + "'");
  }
  std::string lemma(text.substr(dot + 1));
  ValidateLemma(lemma);
  return {*pos, std::move(lemma)};
}

}  // namespace

std::string ToString(const Lexeme& lexeme) {
  std::string out(1, PosChar(lexeme.pos));
  out += '.';
  out += lexeme.lemma;
  return out;
}

Lexeme ParseLexeme(std::string_view text) {
  auto [pos, lemma] = SplitTagged(text);
  return Lexeme{std::move(lemma), pos};
}

std::string ToString(const Token& token) {
  std::string out(1, PosChar(token.pos));
  out += '.';
  out += token.lemma;
  return out;
}

Token ParseToken(std::string_view text) {
  auto [pos, lemma] = SplitTagged(text);
  return Token{pos, std::move(lemma)};
}

}  // namespace morphonet
