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

#ifndef MORPHONET_GRAPH_HPP_
#define MORPHONET_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "morphonet/features.hpp"
#include "morphonet/lexicon.hpp"

namespace morphonet {

// Which feature kinds receive activation from a lexeme.
enum class Mode { kFormalOnly, kSemanticOnly, kBoth };

std::optional<Mode> ParseMode(std::string_view name);  // form, sem, form+sem
std::string_view ModeName(Mode mode);

struct BuildParams {
  int min_n = 3;
  bool prune = true;
  // Share of a lexeme's outgoing activation sent to its formal features when
  // it also has semantic ones.
  double formal_share = 0.5;

  friend bool operator==(const BuildParams&, const BuildParams&) = default;
};

// Throws Error(kInvalidInput) when min_n < 1 or formal_share is outside [0,1].
void ValidateParams(const BuildParams& params);

// Feature counts before hapax pruning, kept for reporting.
struct FeatureCounts {
  std::size_t formal = 0;
  std::size_t semantic = 0;

  friend bool operator==(const FeatureCounts&, const FeatureCounts&) = default;
};

// Symmetric, unweighted bipartite graph between lexemes and features.
//
// Vertex numbering: lexemes occupy [0, lexeme_count()) in entry order,
// features follow in (kind, key) order, so every formal feature precedes
// every semantic one. Adjacency is stored twice in CSR form (lexeme -> feature
// and feature -> lexeme) with ascending neighbor indices. Instances are
// immutable once built.
class BipartiteGraph {
 public:
  using Index = std::uint32_t;

  BipartiteGraph() = default;

  // Assembles a graph from raw tables. `lexeme_features[i]` lists feature
  // indices of lexeme i. Throws Error(kInvalidInput) if the tables are
  // inconsistent (duplicates, out-of-range indices, unsorted features).
  static BipartiteGraph FromTables(std::vector<Lexeme> lexemes,
                                   std::vector<Feature> features,
                                   const std::vector<std::vector<Index>>& lexeme_features,
                                   const BuildParams& params,
                                   const FeatureCounts& complete);

  std::size_t lexeme_count() const { return lexemes_.size(); }
  std::size_t feature_count() const { return features_.size(); }
  std::size_t vertex_count() const { return lexemes_.size() + features_.size(); }
  std::size_t edge_count() const { return lex_targets_.size(); }

  const Lexeme& lexeme(std::size_t i) const { return lexemes_[i]; }
  const Feature& feature(std::size_t f) const { return features_[f]; }
  const std::vector<Lexeme>& lexemes() const { return lexemes_; }
  const std::vector<Feature>& features() const { return features_; }

  std::optional<std::size_t> Find(const Lexeme& lexeme) const;
  std::optional<std::size_t> FindFeature(const Feature& feature) const;

  // Feature indices adjacent to lexeme i, ascending.
  std::span<const Index> FeaturesOf(std::size_t i) const {
    return {lex_targets_.data() + lex_offsets_[i], lex_targets_.data() + lex_offsets_[i + 1]};
  }
  // Lexeme indices adjacent to feature f, ascending.
  std::span<const Index> LexemesOf(std::size_t f) const {
    return {feat_targets_.data() + feat_offsets_[f], feat_targets_.data() + feat_offsets_[f + 1]};
  }
  // Position of a row's first edge in the CSR edge arrays; EdgeWeighting
  // vectors use the same positions.
  std::size_t LexemeRowBegin(std::size_t i) const { return lex_offsets_[i]; }
  std::size_t FeatureRowBegin(std::size_t f) const { return feat_offsets_[f]; }

  std::size_t FeatureDegree(std::size_t f) const { return feat_offsets_[f + 1] - feat_offsets_[f]; }

  // Number of formal features; they occupy feature indices [0, formal_count()).
  std::size_t formal_count() const { return formal_count_; }

  const BuildParams& params() const { return params_; }
  const FeatureCounts& complete_counts() const { return complete_; }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b);

 private:
  std::vector<Lexeme> lexemes_;
  std::vector<Feature> features_;
  std::map<Lexeme, Index> lexeme_index_;
  std::vector<std::size_t> lex_offsets_{0};
  std::vector<Index> lex_targets_;
  std::vector<std::size_t> feat_offsets_{0};
  std::vector<Index> feat_targets_;
  std::size_t formal_count_ = 0;
  BuildParams params_;
  FeatureCounts complete_;
};

// Builds the graph from lexicon entries. Throws Error(kIngest) naming the
// first duplicate (lemma, pos), Error(kInvalidInput) for bad parameters or
// lemmas.
BipartiteGraph BuildGraph(std::span<const Entry> entries, const BuildParams& params);

// Removes every feature attached to fewer than two lexemes. Lexemes are never
// removed. The result records prune = true.
BipartiteGraph PruneHapax(const BipartiteGraph& graph);

// Row-stochastic transition weights aligned with the graph's CSR arrays.
// lexeme_weights[k] is the weight of the k-th lexeme->feature edge,
// feature_weights[k] that of the k-th feature->lexeme edge.
struct EdgeWeighting {
  Mode mode = Mode::kBoth;
  double formal_share = 0.5;
  std::vector<double> lexeme_weights;
  std::vector<double> feature_weights;
  // Vertices whose row is all zero because they have no in-mode edge.
  std::size_t zero_rows = 0;
};

// Transition matrix of the random walk. In kBoth mode a lexeme with both
// feature kinds sends formal_share to its formal features and the rest to
// its semantic ones, each part uniform within its kind; a lexeme with one
// kind sends everything there. Masked modes use only one kind. A feature
// spreads uniformly over its lexemes; out-of-mode features get a zero row.
EdgeWeighting Weighting(const BipartiteGraph& graph, Mode mode, double formal_share);
EdgeWeighting Weighting(const BipartiteGraph& graph, Mode mode);

struct GraphStats {
  std::size_t lexemes = 0;
  std::size_t isolated_lexemes = 0;
  std::size_t formal_features = 0;
  std::size_t semantic_features = 0;
  std::size_t formal_edges = 0;
  std::size_t semantic_edges = 0;
  std::size_t formal_hapax = 0;    // degree-1 formal features currently present
  std::size_t semantic_hapax = 0;  // degree-1 semantic features currently present
  FeatureCounts complete;          // before pruning

  double FormalHapaxFraction() const;
  double SemanticHapaxFraction() const;
  double HapaxFraction() const;
};

GraphStats Stats(const BipartiteGraph& graph);

}  // namespace morphonet

#endif  // MORPHONET_GRAPH_HPP_
