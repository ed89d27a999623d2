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

#include "morphonet/walk.hpp"

#include <algorithm>
#include <string>

#include "morphonet/error.hpp"

namespace morphonet {

double ActivationVector::Total() const {
  double total = 0.0;
  for (const auto& [v, m] : mass) total += m;
  return total;
}

double ActivationVector::At(std::size_t vertex) const {
  auto it = std::lower_bound(mass.begin(), mass.end(), vertex,
                             [](const auto& e, std::size_t v) { return e.first < v; });
  return it != mass.end() && it->first == vertex ? it->second : 0.0;
}

namespace {

std::size_t Resolve(const BipartiteGraph& graph, const Lexeme& seed) {
  auto index = graph.Find(seed);
  if (!index) throw Error(ErrorCode::kLookup, "unknown lexeme " + ToString(seed));
  return *index;
}

}  // namespace

ActivationVector Spread(const BipartiteGraph& graph, const EdgeWeighting& weighting,
                        std::size_t seed, int steps) {
  if (steps < 0) {
    throw Error(ErrorCode::kInvalidInput, "steps must be non-negative");
  }
  if (seed >= graph.lexeme_count()) {
    throw Error(ErrorCode::kLookup, "lexeme index " + std::to_string(seed) + " out of range");
  }
  if (weighting.lexeme_weights.size() != graph.edge_count() ||
      weighting.feature_weights.size() != graph.edge_count()) {
    throw Error(ErrorCode::kInvalidInput, "weighting does not match graph");
  }

  const std::size_t n_lex = graph.lexeme_count();
  std::vector<double> acc(graph.vertex_count(), 0.0);
  std::vector<char> touched(graph.vertex_count(), 0);
  std::vector<std::size_t> frontier;

  ActivationVector current;
  current.seed = seed;
  current.mode = weighting.mode;
  current.mass.emplace_back(seed, 1.0);

  for (int step = 0; step < steps; ++step) {
    frontier.clear();
    // Sources are visited in ascending vertex order and edges in CSR order,
    // which fixes the floating-point summation order.
    for (const auto& [v, m] : current.mass) {
      if (v < n_lex) {
        const auto row = graph.FeaturesOf(v);
        const std::size_t base = graph.LexemeRowBegin(v);
        for (std::size_t k = 0; k < row.size(); ++k) {
          const double w = weighting.lexeme_weights[base + k];
          if (w == 0.0) continue;
          const std::size_t target = n_lex + row[k];
          if (!touched[target]) {
            touched[target] = 1;
            frontier.push_back(target);
          }
          acc[target] += m * w;
        }
      } else {
        const std::size_t f = v - n_lex;
        const auto row = graph.LexemesOf(f);
        const std::size_t base = graph.FeatureRowBegin(f);
        for (std::size_t k = 0; k < row.size(); ++k) {
          const double w = weighting.feature_weights[base + k];
          if (w == 0.0) continue;
          const std::size_t target = row[k];
          if (!touched[target]) {
            touched[target] = 1;
            frontier.push_back(target);
          }
          acc[target] += m * w;
        }
      }
    }
    std::sort(frontier.begin(), frontier.end());
    current.mass.clear();
    for (std::size_t v : frontier) {
      if (acc[v] > 0.0) current.mass.emplace_back(v, acc[v]);
      acc[v] = 0.0;
      touched[v] = 0;
    }
  }
  current.steps = steps;
  return current;
}

ActivationVector Spread(const BipartiteGraph& graph, const EdgeWeighting& weighting,
                        const Lexeme& seed, int steps) {
  return Spread(graph, weighting, Resolve(graph, seed), steps);
}

NeighborList Neighbors(const BipartiteGraph& graph, const EdgeWeighting& weighting,
                       std::size_t seed, std::size_t k, int steps) {
  if (k < 1) throw Error(ErrorCode::kInvalidInput, "k must be at least 1");
  const ActivationVector activation = Spread(graph, weighting, seed, steps);

  NeighborList list;
  for (const auto& [v, m] : activation.mass) {
    if (v < graph.lexeme_count()) list.push_back(Neighbor{v, m});
  }
  auto before = [&](const Neighbor& x, const Neighbor& y) {
    if (x.activation != y.activation) return x.activation > y.activation;
    return graph.lexeme(x.lexeme) < graph.lexeme(y.lexeme);
  };
  if (list.size() > k) {
    std::partial_sort(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(k), list.end(),
                      before);
    list.resize(k);
  } else {
    std::sort(list.begin(), list.end(), before);
  }
  return list;
}

NeighborList Neighbors(const BipartiteGraph& graph, const EdgeWeighting& weighting,
                       const Lexeme& seed, std::size_t k, int steps) {
  return Neighbors(graph, weighting, Resolve(graph, seed), k, steps);
}

}  // namespace morphonet
