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

#include "morphonet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "morphonet/error.hpp"

namespace morphonet {

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "form") return Mode::kFormalOnly;
  if (name == "sem") return Mode::kSemanticOnly;
  if (name == "form+sem") return Mode::kBoth;
  return std::nullopt;
}

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kFormalOnly: return "form";
    case Mode::kSemanticOnly: return "sem";
    case Mode::kBoth: return "form+sem";
  }
  return "?";
}

void ValidateParams(const BuildParams& params) {
  if (params.min_n < 1) {
    throw Error(ErrorCode::kInvalidInput,
                "min_n must be >= 1, got " + std::to_string(params.min_n));
  }
  if (!(params.formal_share >= 0.0 && params.formal_share <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput,
                "formal_share must lie in [0, 1], got " + std::to_string(params.formal_share));
  }
}

BipartiteGraph BipartiteGraph::FromTables(
    std::vector<Lexeme> lexemes, std::vector<Feature> features,
    const std::vector<std::vector<Index>>& lexeme_features, const BuildParams& params,
    const FeatureCounts& complete) {
  ValidateParams(params);
  if (lexeme_features.size() != lexemes.size()) {
    throw Error(ErrorCode::kInvalidInput, "adjacency table size does not match lexeme count");
  }
  if (!std::is_sorted(features.begin(), features.end()) ||
      std::adjacent_find(features.begin(), features.end()) != features.end()) {
    throw Error(ErrorCode::kInvalidInput, "feature table must be strictly sorted");
  }

  BipartiteGraph g;
  g.params_ = params;
  g.complete_ = complete;
  for (std::size_t i = 0; i < lexemes.size(); ++i) {
    if (!g.lexeme_index_.emplace(lexemes[i], static_cast<Index>(i)).second) {
      throw Error(ErrorCode::kIngest, "duplicate lexeme " + ToString(lexemes[i]));
    }
  }
  g.lexemes_ = std::move(lexemes);
  g.features_ = std::move(features);
  g.formal_count_ = static_cast<std::size_t>(
      std::partition_point(g.features_.begin(), g.features_.end(),
                           [](const Feature& f) { return f.kind == FeatureKind::kFormal; }) -
      g.features_.begin());

  std::vector<std::size_t> degree(g.features_.size(), 0);
  g.lex_offsets_.assign(1, 0);
  for (const auto& row : lexeme_features) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] >= g.features_.size() || (k > 0 && row[k] <= row[k - 1])) {
        throw Error(ErrorCode::kInvalidInput,
                    "lexeme adjacency rows must hold strictly ascending feature indices");
      }
      ++degree[row[k]];
    }
    g.lex_targets_.insert(g.lex_targets_.end(), row.begin(), row.end());
    g.lex_offsets_.push_back(g.lex_targets_.size());
  }

  g.feat_offsets_.assign(g.features_.size() + 1, 0);
  for (std::size_t f = 0; f < degree.size(); ++f) {
    g.feat_offsets_[f + 1] = g.feat_offsets_[f] + degree[f];
  }
  g.feat_targets_.resize(g.lex_targets_.size());
  std::vector<std::size_t> cursor(g.feat_offsets_.begin(), g.feat_offsets_.end() - 1);
  // Filling in lexeme order keeps every feature row ascending.
  for (std::size_t i = 0; i < lexeme_features.size(); ++i) {
    for (Index f : lexeme_features[i]) {
      g.feat_targets_[cursor[f]++] = static_cast<Index>(i);
    }
  }
  return g;
}

std::optional<std::size_t> BipartiteGraph::Find(const Lexeme& lexeme) const {
  auto it = lexeme_index_.find(lexeme);
  if (it == lexeme_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BipartiteGraph::FindFeature(const Feature& feature) const {
  auto it = std::lower_bound(features_.begin(), features_.end(), feature);
  if (it == features_.end() || *it != feature) return std::nullopt;
  return static_cast<std::size_t>(it - features_.begin());
}

bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
  return a.lexemes_ == b.lexemes_ && a.features_ == b.features_ &&
         a.lex_offsets_ == b.lex_offsets_ && a.lex_targets_ == b.lex_targets_ &&
         a.params_ == b.params_ && a.complete_ == b.complete_;
}

BipartiteGraph BuildGraph(std::span<const Entry> entries, const BuildParams& params) {
  ValidateParams(params);
  using Index = BipartiteGraph::Index;

  std::map<Lexeme, std::size_t> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    ValidateLemma(entries[i].lexeme.lemma);
    if (!seen.emplace(entries[i].lexeme, i).second) {
      throw Error(ErrorCode::kIngest, "duplicate lexeme " + ToString(entries[i].lexeme));
    }
  }

  // Intern feature keys per kind; ids are provisional until sorted.
  std::unordered_map<std::string, Index> formal_ids;
  std::unordered_map<std::string, Index> semantic_ids;
  std::vector<const std::string*> formal_keys;
  std::vector<const std::string*> semantic_keys;
  auto intern = [](std::unordered_map<std::string, Index>& ids,
                   std::vector<const std::string*>& keys, std::string key) {
    auto [it, inserted] = ids.try_emplace(std::move(key), static_cast<Index>(keys.size()));
    if (inserted) keys.push_back(&it->first);
    return it->second;
  };

  std::vector<std::vector<Index>> formal_rows(entries.size());
  std::vector<std::vector<Index>> semantic_rows(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (auto& f : ExtractFormalFeatures(entries[i].lexeme.lemma, params.min_n)) {
      formal_rows[i].push_back(intern(formal_ids, formal_keys, f.key));
    }
    for (auto& f : ExtractSemanticFeatures(entries[i].definitions)) {
      semantic_rows[i].push_back(intern(semantic_ids, semantic_keys, f.key));
    }
  }

  auto sorted_order = [](const std::vector<const std::string*>& keys) {
    std::vector<Index> order(keys.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(),
              [&](Index x, Index y) { return *keys[x] < *keys[y]; });
    return order;
  };
  const auto formal_order = sorted_order(formal_keys);
  const auto semantic_order = sorted_order(semantic_keys);

  std::vector<Feature> features;
  features.reserve(formal_keys.size() + semantic_keys.size());
  std::vector<Index> formal_rank(formal_keys.size());
  std::vector<Index> semantic_rank(semantic_keys.size());
  for (Index id : formal_order) {
    formal_rank[id] = static_cast<Index>(features.size());
    features.push_back(Feature{FeatureKind::kFormal, *formal_keys[id]});
  }
  for (Index id : semantic_order) {
    semantic_rank[id] = static_cast<Index>(features.size());
    features.push_back(Feature{FeatureKind::kSemantic, *semantic_keys[id]});
  }

  std::vector<std::vector<Index>> rows(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& row = rows[i];
    row.reserve(formal_rows[i].size() + semantic_rows[i].size());
    for (Index id : formal_rows[i]) row.push_back(formal_rank[id]);
    for (Index id : semantic_rows[i]) row.push_back(semantic_rank[id]);
    std::sort(row.begin(), row.end());
  }

  std::vector<Lexeme> lexemes;
  lexemes.reserve(entries.size());
  for (const auto& e : entries) lexemes.push_back(e.lexeme);

  const FeatureCounts complete{formal_keys.size(), semantic_keys.size()};
  BuildParams unpruned = params;
  unpruned.prune = false;
  auto graph = BipartiteGraph::FromTables(std::move(lexemes), std::move(features), rows,
                                          unpruned, complete);
  return params.prune ? PruneHapax(graph) : graph;
}

BipartiteGraph PruneHapax(const BipartiteGraph& graph) {
  using Index = BipartiteGraph::Index;
  constexpr Index kDropped = ~Index{0};

  std::vector<Index> remap(graph.feature_count(), kDropped);
  std::vector<Feature> kept;
  for (std::size_t f = 0; f < graph.feature_count(); ++f) {
    if (graph.FeatureDegree(f) >= 2) {
      remap[f] = static_cast<Index>(kept.size());
      kept.push_back(graph.feature(f));
    }
  }
  std::vector<std::vector<Index>> rows(graph.lexeme_count());
  for (std::size_t i = 0; i < graph.lexeme_count(); ++i) {
    for (Index f : graph.FeaturesOf(i)) {
      if (remap[f] != kDropped) rows[i].push_back(remap[f]);
    }
  }
  BuildParams params = graph.params();
  params.prune = true;
  return BipartiteGraph::FromTables(graph.lexemes(), std::move(kept), rows, params,
                                    graph.complete_counts());
}

EdgeWeighting Weighting(const BipartiteGraph& graph, Mode mode, double formal_share) {
  if (!(formal_share >= 0.0 && formal_share <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput,
                "formal_share must lie in [0, 1], got " + std::to_string(formal_share));
  }
  EdgeWeighting w;
  w.mode = mode;
  w.formal_share = formal_share;
  w.lexeme_weights.assign(graph.edge_count(), 0.0);
  w.feature_weights.assign(graph.edge_count(), 0.0);

  const bool use_formal = mode != Mode::kSemanticOnly;
  const bool use_semantic = mode != Mode::kFormalOnly;
  const std::size_t formal_count = graph.formal_count();

  std::size_t slot = 0;
  for (std::size_t i = 0; i < graph.lexeme_count(); ++i) {
    const auto row = graph.FeaturesOf(i);
    // Formal features have the lowest indices, so each row starts with them.
    const auto n_formal = static_cast<std::size_t>(
        std::lower_bound(row.begin(), row.end(), formal_count) - row.begin());
    const std::size_t n_semantic = row.size() - n_formal;
    const std::size_t in_formal = use_formal ? n_formal : 0;
    const std::size_t in_semantic = use_semantic ? n_semantic : 0;

    double formal_mass = 0.0;
    double semantic_mass = 0.0;
    if (in_formal > 0 && in_semantic > 0) {
      formal_mass = formal_share;
      semantic_mass = 1.0 - formal_share;
    } else if (in_formal > 0) {
      formal_mass = 1.0;
    } else if (in_semantic > 0) {
      semantic_mass = 1.0;
    } else {
      ++w.zero_rows;
    }
    for (std::size_t k = 0; k < row.size(); ++k, ++slot) {
      if (k < n_formal) {
        if (in_formal > 0) w.lexeme_weights[slot] = formal_mass / static_cast<double>(in_formal);
      } else if (in_semantic > 0) {
        w.lexeme_weights[slot] = semantic_mass / static_cast<double>(in_semantic);
      }
    }
  }

  slot = 0;
  for (std::size_t f = 0; f < graph.feature_count(); ++f) {
    const std::size_t degree = graph.FeatureDegree(f);
    const bool formal = f < formal_count;
    const bool in_mode = formal ? use_formal : use_semantic;
    if (!in_mode || degree == 0) ++w.zero_rows;
    for (std::size_t k = 0; k < degree; ++k, ++slot) {
      if (in_mode) w.feature_weights[slot] = 1.0 / static_cast<double>(degree);
    }
  }
  return w;
}

EdgeWeighting Weighting(const BipartiteGraph& graph, Mode mode) {
  return Weighting(graph, mode, graph.params().formal_share);
}

namespace {

double Fraction(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

double GraphStats::FormalHapaxFraction() const { return Fraction(formal_hapax, formal_features); }
double GraphStats::SemanticHapaxFraction() const {
  return Fraction(semantic_hapax, semantic_features);
}
double GraphStats::HapaxFraction() const {
  return Fraction(formal_hapax + semantic_hapax, formal_features + semantic_features);
}

GraphStats Stats(const BipartiteGraph& graph) {
  GraphStats s;
  s.lexemes = graph.lexeme_count();
  s.formal_features = graph.formal_count();
  s.semantic_features = graph.feature_count() - graph.formal_count();
  s.complete = graph.complete_counts();
  for (std::size_t i = 0; i < graph.lexeme_count(); ++i) {
    if (graph.FeaturesOf(i).empty()) ++s.isolated_lexemes;
  }
  for (std::size_t f = 0; f < graph.feature_count(); ++f) {
    const std::size_t degree = graph.FeatureDegree(f);
    const bool formal = f < graph.formal_count();
    (formal ? s.formal_edges : s.semantic_edges) += degree;
    if (degree == 1) ++(formal ? s.formal_hapax : s.semantic_hapax);
  }
  return s;
}

}  // namespace morphonet
