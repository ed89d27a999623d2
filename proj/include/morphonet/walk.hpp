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

#ifndef MORPHONET_WALK_HPP_
#define MORPHONET_WALK_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "morphonet/graph.hpp"

namespace morphonet {

// Probability mass over graph vertices after `steps` transitions.
// Entries are (vertex, mass) with strictly ascending vertex index and
// non-zero mass; vertex numbering is the graph's (lexemes first).
struct ActivationVector {
  std::vector<std::pair<std::size_t, double>> mass;
  int steps = 0;
  std::size_t seed = 0;
  Mode mode = Mode::kBoth;

  double Total() const;
  double At(std::size_t vertex) const;
};

// Row `seed` of M^steps computed by repeated sparse vector-matrix products.
// Throws Error(kInvalidInput) when steps < 0 or the weighting does not
// belong to the graph, Error(kLookup) for an out-of-range seed index.
ActivationVector Spread(const BipartiteGraph& graph, const EdgeWeighting& weighting,
                        std::size_t seed, int steps = 2);
ActivationVector Spread(const BipartiteGraph& graph, const EdgeWeighting& weighting,
                        const Lexeme& seed, int steps = 2);

struct Neighbor {
  std::size_t lexeme = 0;  // lexeme index in the graph
  double activation = 0.0;
};

using NeighborList = std::vector<Neighbor>;

// The k lexemes with the highest positive activation after `steps` steps,
// ordered by (activation desc, lemma asc, pos asc). The seed keeps its place
// in its own list.
NeighborList Neighbors(const BipartiteGraph& graph, const EdgeWeighting& weighting,
                       std::size_t seed, std::size_t k, int steps = 2);
NeighborList Neighbors(const BipartiteGraph& graph, const EdgeWeighting& weighting,
                       const Lexeme& seed, std::size_t k, int steps = 2);

}  // namespace morphonet

#endif  // MORPHONET_WALK_HPP_
