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

#ifndef MORPHONET_LEXICON_HPP_
#define MORPHONET_LEXICON_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morphonet {

// Coarse part-of-speech inventory used for headwords and definition tokens:
// adjective, noun, adverb, verb, everything else.
enum class Pos : char { kA = 'A', kN = 'N', kR = 'R', kV = 'V', kX = 'X' };

std::optional<Pos> ParsePos(std::string_view tag);
char PosChar(Pos pos);

// A headword. Identity is (lemma, pos); ordering is lemma first, then pos.
struct Lexeme {
  std::string lemma;  // UTF-8, no '$', '_' or whitespace
  Pos pos = Pos::kX;

  friend auto operator<=>(const Lexeme&, const Lexeme&) = default;
  friend bool operator==(const Lexeme&, const Lexeme&) = default;
};

// Renders "pos.lemma", e.g. "V.orienter".
std::string ToString(const Lexeme& lexeme);

// Parses "pos.lemma". Throws Error(kInvalidInput) on a bad tag or lemma.
Lexeme ParseLexeme(std::string_view text);

// Throws Error(kInvalidInput) unless `lemma` is a valid headword or token
// lemma: non-empty UTF-8 without '$', '_' or whitespace.
void ValidateLemma(std::string_view lemma);

// A lemmatized, tagged definition word.
struct Token {
  Pos pos = Pos::kX;
  std::string lemma;

  friend bool operator==(const Token&, const Token&) = default;
};

std::string ToString(const Token& token);
Token ParseToken(std::string_view text);

// Tokens between two punctuation marks.
using Segment = std::vector<Token>;
using Definition = std::vector<Segment>;

struct Entry {
  Lexeme lexeme;
  std::vector<Definition> definitions;

  friend bool operator==(const Entry&, const Entry&) = default;
};

}  // namespace morphonet

#endif  // MORPHONET_LEXICON_HPP_
