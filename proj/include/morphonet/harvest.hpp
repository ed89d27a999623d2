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

#ifndef MORPHONET_HARVEST_HPP_
#define MORPHONET_HARVEST_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "morphonet/graph.hpp"
#include "morphonet/walk.hpp"

namespace morphonet {

// a:b::c:d over lexemes. Harvested quadruplets are stored in canonical form:
// the smaller of (a, b, c, d) and (c, d, a, b).
struct AnalogyQuadruplet {
  Lexeme a, b, c, d;
  Mode mode = Mode::kBoth;

  friend auto operator<=>(const AnalogyQuadruplet& x, const AnalogyQuadruplet& y) {
    return std::tie(x.a, x.b, x.c, x.d) <=> std::tie(y.a, y.b, y.c, y.d);
  }
  friend bool operator==(const AnalogyQuadruplet& x, const AnalogyQuadruplet& y) {
    return std::tie(x.a, x.b, x.c, x.d) == std::tie(y.a, y.b, y.c, y.d);
  }
};

// Returns the representative of {(a,b,c,d), (c,d,a,b)}.
AnalogyQuadruplet Canonical(AnalogyQuadruplet q);

// Ranked neighbor lists (lexeme indices, best first) for some lexemes of a
// graph. May be partial.
class NeighborhoodIndex {
 public:
  void Set(std::size_t lexeme, std::vector<std::size_t> ranked);
  const std::vector<std::size_t>* Find(std::size_t lexeme) const;
  bool Contains(std::size_t lexeme, std::size_t neighbor) const;
  std::size_t size() const { return lists_.size(); }

 private:
  struct Entry {
    std::vector<std::size_t> ranked;
    std::vector<std::size_t> sorted;
  };
  std::unordered_map<std::size_t, Entry> lists_;
};

struct Candidate {
  std::size_t a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const Candidate&, const Candidate&) = default;
  friend auto operator<=>(const Candidate&, const Candidate&) = default;
};

struct CandidateTally {
  std::size_t pairs = 0;          // (b, c) pairs examined
  std::size_t skipped_pairs = 0;  // pairs with no neighborhood for b or c
};

// Enumerates (a, b, c, d) where b precedes c in a's list, neither is a, and
// d is in the lists of both b and c and differs from a, b and c. Throws
// Error(kLookup) if `a` has no list.
void CandidateQuadruplets(const NeighborhoodIndex& index, std::size_t a,
                          const std::function<void(const Candidate&)>& emit,
                          CandidateTally* tally = nullptr);

struct HarvestOptions {
  std::size_t k = 100;
  int steps = 2;
  unsigned threads = 1;  // 0 selects hardware concurrency
};

struct SeedReport {
  Lexeme seed;
  std::size_t analogies = 0;  // accepted before cross-seed deduplication
  std::size_t candidates = 0;
  std::size_t skipped_pairs = 0;
  std::optional<std::string> error;
};

struct HarvestResult {
  std::vector<AnalogyQuadruplet> quadruplets;  // canonical, sorted, unique
  std::vector<SeedReport> seeds;               // in input order
};

// For each seed, takes its k nearest neighbors, pairs them with the
// neighbors' own neighborhoods and keeps the candidates whose lemma pairs
// share an edit signature. Identity signatures are dropped. Unknown seeds
// are reported in `seeds` and skipped.
HarvestResult Harvest(const BipartiteGraph& graph, const EdgeWeighting& weighting,
                      std::span<const Lexeme> seeds, const HarvestOptions& options = {});

}  // namespace morphonet

#endif  // MORPHONET_HARVEST_HPP_
