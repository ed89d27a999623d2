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

#include "morphonet/features.hpp"

#include "morphonet/error.hpp"
#include "morphonet/utf8.hpp"

namespace morphonet {

std::set<Feature> ExtractFormalFeatures(std::string_view lemma, int min_n) {
  if (min_n < 1) {
    throw Error(ErrorCode::kInvalidInput, "min_n must be at least 1");
  }
  if (lemma.empty()) {
    throw Error(ErrorCode::kInvalidInput, "empty lemma");
  }
  if (lemma.find(kBoundaryMark) != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidInput,
                "lemma '" + std::string(lemma) + "' contains '$'");
  }
  std::u32string decorated = U"$";
  decorated += utf8::Decode(lemma);
  decorated += U'$';

  std::set<Feature> out;
  const std::size_t len = decorated.size();
  const auto min_len = static_cast<std::size_t>(min_n);
  for (std::size_t start = 0; start < len; ++start) {
    for (std::size_t n = min_len; start + n <= len; ++n) {
      out.insert(Feature{FeatureKind::kFormal,
                         utf8::Encode(std::u32string_view(decorated).substr(start, n))});
    }
  }
  return out;
}

std::set<Feature> ExtractSemanticFeatures(std::span<const Definition> definitions) {
  std::set<Feature> out;
  for (const Definition& definition : definitions) {
    for (const Segment& segment : definition) {
      std::vector<std::string> rendered;
      rendered.reserve(segment.size());
      for (const Token& token : segment) {
        ValidateLemma(token.lemma);
        rendered.push_back(ToString(token));
      }
      for (std::size_t start = 0; start < rendered.size(); ++start) {
        std::string key;
        for (std::size_t end = start; end < rendered.size(); ++end) {
          if (end > start) key += kTokenJoin;
          key += rendered[end];
          out.insert(Feature{FeatureKind::kSemantic, key});
        }
      }
    }
  }
  return out;
}

}  // namespace morphonet
