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

#ifndef MORPHONET_FEATURES_HPP_
#define MORPHONET_FEATURES_HPP_

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "morphonet/lexicon.hpp"

namespace morphonet {

enum class FeatureKind : char { kFormal = 'F', kSemantic = 'S' };

// A graph vertex on the feature side. Formal keys are character n-grams of
// "$lemma$"; semantic keys are '_'-joined "pos.lemma" token n-grams.
struct Feature {
  FeatureKind kind = FeatureKind::kFormal;
  std::string key;

  friend auto operator<=>(const Feature&, const Feature&) = default;
  friend bool operator==(const Feature&, const Feature&) = default;
};

inline constexpr char kBoundaryMark = '$';
inline constexpr char kTokenJoin = '_';

// All distinct substrings of "$lemma$" with at least `min_n` scalar values.
// Throws Error(kInvalidInput) for an empty lemma, a lemma containing '$' or
// min_n < 1.
std::set<Feature> ExtractFormalFeatures(std::string_view lemma, int min_n);

// All contiguous token n-grams (n = 1 .. segment length) of every segment of
// every definition. Token lemmas containing '_' or '$' are rejected.
std::set<Feature> ExtractSemanticFeatures(std::span<const Definition> definitions);

}  // namespace morphonet

#endif  // MORPHONET_FEATURES_HPP_
