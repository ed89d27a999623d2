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

// Slow reference implementations used only by the test suites. They are
// written straight from the definitions and share no code path with the
// functions they check, other than the graph's adjacency accessors and the
// signature test used as a filter by the harvest oracle.

#ifndef MORPHONET_TESTS_ORACLES_HPP_
#define MORPHONET_TESTS_ORACLES_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "morphonet/analogy.hpp"
#include "morphonet/graph.hpp"
#include "morphonet/harvest.hpp"
#include "morphonet/lexicon.hpp"
#include "morphonet/walk.hpp"

namespace morphonet::oracle {

using DenseMatrix = std::vector<std::vector<double>>;

inline constexpr std::size_t kDenseLimit = 500;

// Transition matrix built from a dense 0/1 adjacency matrix and the
// three-case definition (lexeme->formal, lexeme->semantic, feature->lexeme).
DenseMatrix DenseTransition(const BipartiteGraph& graph, Mode mode, double formal_share);

// Dense copy of an EdgeWeighting.
DenseMatrix Densify(const BipartiteGraph& graph, const EdgeWeighting& weighting);

// Row `seed` of M^steps, with M^steps formed by repeated dense matrix
// products. Throws Error(kSize) above kDenseLimit vertices.
std::vector<double> DenseSpread(const DenseMatrix& m, std::size_t seed, int steps);
std::vector<double> DenseSpread(const BipartiteGraph& graph, Mode mode, double formal_share,
                                std::size_t seed, int steps);

// Ranked neighbor lists from DenseSpread, sorted with a local comparator.
std::vector<std::size_t> DenseNeighbors(const BipartiteGraph& graph, Mode mode,
                                        double formal_share, std::size_t seed, std::size_t k);

// Brute-force harvest: every ordered quadruplet of distinct lexemes is
// checked against the neighborhood conditions and the signature test.
// Throws Error(kSize) above 50 lexemes.
std::set<AnalogyQuadruplet> ExhaustiveHarvest(const BipartiteGraph& graph, Mode mode,
                                              double formal_share, std::size_t k,
                                              const std::vector<Lexeme>& seeds);

// Distinct substrings of "$lemma$" of length >= min_n, from (start, length)
// enumeration over UTF-8 character boundaries.
std::set<std::string> FormalNgrams(const std::string& lemma, int min_n);

// All token n-grams of each segment.
std::set<std::string> SemanticNgrams(const std::vector<Definition>& definitions);

// Two-row Levenshtein distance.
std::size_t Levenshtein(const std::u32string& a, const std::u32string& b);

// Every minimum-cost alignment of a and b, found by exhaustive recursion over
// alignments (no dynamic programming). Each alignment is a string over
// {I, D, M, S}.
std::vector<std::string> AllMinimalAlignments(const std::u32string& a, const std::u32string& b);

// The alignment the backtracking rule should choose: read from the end,
// prefer insertion, then deletion, then a diagonal step.
std::string PreferredAlignment(const std::u32string& a, const std::u32string& b);

}  // namespace morphonet::oracle

#endif  // MORPHONET_TESTS_ORACLES_HPP_
